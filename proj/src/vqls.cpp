// Copyright 2026 The plcu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plcu/vqls.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "plcu/error.hpp"
#include "plcu/grid.hpp"

namespace plcu {

namespace {

Circuit controlled_z(int n, int j) {
    Circuit c;
    c.width = n + 2;
    c.data_width = n + 1;
    c.ancilla = true;
    c.gates = {Gate{GateKind::H, {j}}, Gate{GateKind::CNOT, {0, j}}, Gate{GateKind::H, {j}}};
    return c;
}

void apply_gates(StateVector &s, const Circuit &c) {
    for (const auto &g : c.gates) {
        s.apply(g);
    }
}

void apply_gates_reversed(StateVector &s, const Circuit &c) {
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        s.apply(*it);
    }
}

/// Objective shared by the optimizers. Evaluations go through the Hadamard
/// tests; gradients use the parameter-shift rule on numerator and
/// denominator separately.
struct Objective {
    const VqlsProblem *problem = nullptr;
    Ansatz ansatz;
    SampleMode mode;

    CostBreakdown eval(std::span<const double> theta) const {
        return local_cost(*problem, ansatz_state(ansatz, theta), mode);
    }

    double cost(std::span<const double> theta) const {
        return eval(theta).cost;
    }

    double value_and_gradient(std::span<const double> theta, std::span<double> grad) const {
        CostBreakdown base = eval(theta);
        const double n = problem->n;
        std::vector<double> shifted(theta.begin(), theta.end());
        for (std::size_t k = 0; k < theta.size(); k++) {
            shifted[k] = theta[k] + std::numbers::pi / 2.0;
            CostBreakdown plus = eval(shifted);
            shifted[k] = theta[k] - std::numbers::pi / 2.0;
            CostBreakdown minus = eval(shifted);
            shifted[k] = theta[k];
            double dnum = 0.5 * (plus.numerator - minus.numerator);
            double dden = 0.5 * (plus.denominator - minus.denominator);
            grad[k] = -(dnum * base.denominator - base.numerator * dden) /
                      (2.0 * n * base.denominator * base.denominator);
        }
        return base.cost;
    }
};

double gsl_f(const gsl_vector *x, void *params) {
    auto *obj = static_cast<Objective *>(params);
    return obj->cost({x->data, x->size});
}

void gsl_df(const gsl_vector *x, void *params, gsl_vector *g) {
    auto *obj = static_cast<Objective *>(params);
    obj->value_and_gradient({x->data, x->size}, {g->data, g->size});
}

void gsl_fdf(const gsl_vector *x, void *params, double *f, gsl_vector *g) {
    auto *obj = static_cast<Objective *>(params);
    *f = obj->value_and_gradient({x->data, x->size}, {g->data, g->size});
}

struct GslVector {
    gsl_vector *v;
    explicit GslVector(const std::vector<double> &x) : v(gsl_vector_alloc(x.size())) {
        std::copy(x.begin(), x.end(), v->data);
    }
    ~GslVector() {
        gsl_vector_free(v);
    }
    GslVector(const GslVector &) = delete;
    GslVector &operator=(const GslVector &) = delete;
};

void run_bfgs(Objective &obj, std::vector<double> &theta, const VqlsConfig &cfg, VqlsReport &report) {
    gsl_multimin_function_fdf fn;
    fn.n = theta.size();
    fn.f = gsl_f;
    fn.df = gsl_df;
    fn.fdf = gsl_fdf;
    fn.params = &obj;
    GslVector x(theta);
    gsl_multimin_fdfminimizer *s = gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, fn.n);
    gsl_multimin_fdfminimizer_set(s, &fn, x.v, 0.1, 0.1);
    double cost = s->f;
    int iter = 0;
    while (cost > cfg.threshold && iter < cfg.max_iterations) {
        int status = gsl_multimin_fdfminimizer_iterate(s);
        iter++;
        if (status != GSL_SUCCESS) {
            break;
        }
        cost = s->f;
        report.trace.push_back({iter, cost});
        if (gsl_multimin_test_gradient(s->gradient, 1e-12) == GSL_SUCCESS) {
            break;
        }
    }
    std::copy(s->x->data, s->x->data + fn.n, theta.begin());
    report.iterations = iter;
    gsl_multimin_fdfminimizer_free(s);
}

void run_nelder_mead(Objective &obj, std::vector<double> &theta, const VqlsConfig &cfg, VqlsReport &report) {
    gsl_multimin_function fn;
    fn.n = theta.size();
    fn.f = gsl_f;
    fn.params = &obj;
    GslVector x(theta);
    std::vector<double> steps(fn.n, 0.5);
    GslVector step(steps);
    gsl_multimin_fminimizer *s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, fn.n);
    gsl_multimin_fminimizer_set(s, &fn, x.v, step.v);
    // fval is only meaningful after the first iterate.
    double cost = report.trace.back().cost;
    int iter = 0;
    while (cost > cfg.threshold && iter < cfg.max_iterations) {
        int status = gsl_multimin_fminimizer_iterate(s);
        iter++;
        if (status != GSL_SUCCESS) {
            break;
        }
        cost = s->fval;
        report.trace.push_back({iter, cost});
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-6) == GSL_SUCCESS) {
            // Collapsed simplex: restart around the best vertex.
            gsl_vector_memcpy(x.v, s->x);
            gsl_multimin_fminimizer_set(s, &fn, x.v, step.v);
        }
    }
    std::copy(s->x->data, s->x->data + fn.n, theta.begin());
    report.iterations = iter;
    gsl_multimin_fminimizer_free(s);
}

double mcz_cost(int k, const CostModel &m) {
    // Two Hadamards around a ladder of 8(k - 5) Toffolis; a negative count
    // is clamped to zero.
    return 2.0 * m.h + 8.0 * std::max(k - 5, 0) * m.t3;
}

}  // namespace

StateVector ansatz_state(const Ansatz &a, std::span<const double> theta) {
    require(a.n >= 1 && a.layers >= 0, ErrorKind::InvalidArgument, "ansatz needs n >= 1 and layers >= 0");
    require(theta.size() == a.parameter_count(), ErrorKind::Dimension,
            "ansatz expects " + std::to_string(a.parameter_count()) + " parameters");
    StateVector s(a.n);
    std::size_t k = 0;
    for (int layer = 0; layer <= a.layers; layer++) {
        for (int q = 0; q < a.n; q++) {
            s.apply_ry(q, theta[k++]);
        }
        if (layer < a.layers) {
            for (int q = 0; q + 1 < a.n; q++) {
                s.apply(Gate{GateKind::CNOT, {q, q + 1}});
            }
        }
    }
    return s;
}

StateVector prepare_b(std::span<const double> rhs) {
    require(norm_inf(rhs) > 0.0, ErrorKind::InvalidArgument, "right-hand side is the zero vector");
    return StateVector::from_real(rhs);
}

VqlsProblem VqlsProblem::make(LcuDecomposition dec, std::span<const double> rhs) {
    VqlsProblem p;
    p.n = dec.width;
    require(rhs.size() == (std::size_t{1} << p.n), ErrorKind::WidthMismatch, "right-hand side length must be 2^n");
    p.b = prepare_b(rhs).real();
    std::vector<double> w = p.b;
    for (double &x : w) {
        x = -x;
    }
    w[0] += 1.0;
    double nrm = norm2(w);
    if (nrm > 1e-14) {
        for (double &x : w) {
            x /= nrm;
        }
        p.w = std::move(w);
    }
    for (const auto &t : dec.terms) {
        p.controlled.push_back(controlled_expr(t.expr));
    }
    p.dec = std::move(dec);
    return p;
}

double beta(const VqlsProblem &p, std::size_t l, std::size_t lp, const StateVector &psi, const SampleMode &mode) {
    require(l < p.controlled.size() && lp < p.controlled.size(), ErrorKind::InvalidArgument, "term index out of range");
    require(psi.width() == p.n, ErrorKind::WidthMismatch, "state width differs from the problem");
    const Circuit &cl = p.controlled[l];
    const Circuit &clp = p.controlled[lp];
    double v = hadamard_test(
        psi,
        [&](StateVector &s) {
            apply_gates(s, cl);
            apply_gates_reversed(s, clp);
        },
        mode);
    return cl.phase * clp.phase * v;
}

double delta(const VqlsProblem &p, int j, std::size_t l, std::size_t lp, const StateVector &psi,
             const SampleMode &mode) {
    require(j >= 1 && j <= p.n, ErrorKind::InvalidArgument, "observable index must be in 1..n");
    require(l < p.controlled.size() && lp < p.controlled.size(), ErrorKind::InvalidArgument, "term index out of range");
    require(psi.width() == p.n, ErrorKind::WidthMismatch, "state width differs from the problem");
    const Circuit &cl = p.controlled[l];
    const Circuit &clp = p.controlled[lp];
    Circuit cz = controlled_z(p.n, j);
    double v = hadamard_test(
        psi,
        [&](StateVector &s) {
            apply_gates(s, cl);
            if (!p.w.empty()) {
                s.apply_reflection(1, p.n, p.w);
            }
            apply_gates(s, cz);
            if (!p.w.empty()) {
                s.apply_reflection(1, p.n, p.w);
            }
            apply_gates_reversed(s, clp);
        },
        mode);
    return cl.phase * clp.phase * v;
}

CostBreakdown local_cost(const VqlsProblem &p, const StateVector &psi, const SampleMode &mode) {
    const std::size_t terms = p.dec.terms.size();
    const std::vector<double> c = p.dec.coefficients();
    CostBreakdown out;
    out.beta = DenseMatrix(terms, terms);
    for (std::size_t l = 0; l < terms; l++) {
        out.beta(l, l) = 1.0;
        for (std::size_t lp = l + 1; lp < terms; lp++) {
            double v = beta(p, l, lp, psi, mode);
            out.beta(l, lp) = v;
            out.beta(lp, l) = v;
            out.beta_evaluations++;
        }
    }
    out.delta.assign(static_cast<std::size_t>(p.n), DenseMatrix(terms, terms));
    for (int j = 1; j <= p.n; j++) {
        DenseMatrix &d = out.delta[static_cast<std::size_t>(j - 1)];
        for (std::size_t l = 0; l < terms; l++) {
            for (std::size_t lp = l; lp < terms; lp++) {
                double v = delta(p, j, l, lp, psi, mode);
                d(l, lp) = v;
                d(lp, l) = v;
                out.delta_evaluations++;
            }
        }
    }
    for (std::size_t l = 0; l < terms; l++) {
        for (std::size_t lp = 0; lp < terms; lp++) {
            double w = c[l] * c[lp];
            out.denominator += w * out.beta(l, lp);
            for (const auto &d : out.delta) {
                out.numerator += w * d(l, lp);
            }
        }
    }
    require(std::abs(out.denominator) > 1e-14, ErrorKind::Singular,
            "degenerate trial state: sum c_l c_l' beta_ll' vanishes");
    out.cost = 0.5 - out.numerator / (2.0 * p.n * out.denominator);
    return out;
}

std::string to_string(Optimizer o) {
    return o == Optimizer::Bfgs ? "bfgs" : "nelder-mead";
}

Optimizer optimizer_from_string(const std::string &name) {
    if (name == "bfgs") {
        return Optimizer::Bfgs;
    }
    if (name == "nelder-mead" || name == "nm") {
        return Optimizer::NelderMead;
    }
    fail(ErrorKind::InvalidArgument, "unknown optimizer '" + name + "'");
}

VqlsProblem dirichlet_sine_problem(int n) {
    std::vector<double> xs = grid_points(Boundary::Dirichlet, n);
    std::vector<double> f(xs.size());
    for (std::size_t i = 0; i < xs.size(); i++) {
        f[i] = -std::numbers::pi * std::numbers::pi * std::sin(std::numbers::pi * xs[i]);
    }
    std::vector<double> boundary = {0.0, 0.0};
    DenseVector rhs = build_forcing_1d(n, BoundaryKind::dirichlet(), f, boundary);
    return VqlsProblem::make(decompose_dirichlet(n), rhs);
}

VqlsReport optimize(const VqlsConfig &cfg) {
    require(cfg.n >= 2 && cfg.n <= 6, ErrorKind::InvalidArgument, "VQLS runs are limited to 2 <= n <= 6");
    require(cfg.max_iterations >= 0, ErrorKind::InvalidArgument, "iteration cap must be non-negative");
    require(!cfg.shots || cfg.shot_count > 0, ErrorKind::InvalidArgument, "shots mode needs a positive shot count");
    static const gsl_error_handler_t *previous = gsl_set_error_handler_off();
    (void)previous;
    auto start = std::chrono::steady_clock::now();

    VqlsProblem problem = dirichlet_sine_problem(cfg.n);
    Ansatz ansatz{cfg.n, cfg.layers < 0 ? cfg.n : cfg.layers};
    std::mt19937_64 rng(cfg.seed);

    std::vector<double> theta = cfg.theta0;
    if (theta.empty()) {
        std::uniform_real_distribution<double> init(-cfg.init_scale, cfg.init_scale);
        theta.resize(ansatz.parameter_count());
        for (double &t : theta) {
            t = init(rng);
        }
    }
    require(theta.size() == ansatz.parameter_count(), ErrorKind::Dimension, "initial parameter count mismatch");

    Objective obj{&problem, ansatz, {cfg.shots, cfg.shot_count, &rng}};
    Optimizer opt = cfg.optimizer.value_or(cfg.shots ? Optimizer::NelderMead : Optimizer::Bfgs);

    VqlsReport report;
    report.problem = "dirichlet-1d n=" + std::to_string(cfg.n) + " u=sin(pi x)";
    report.provenance = problem.dec.provenance;
    report.mode = cfg.shots ? "shots" : "exact";
    report.shots = cfg.shots ? cfg.shot_count : 0;
    report.seed = cfg.seed;
    report.optimizer = to_string(opt);
    report.trace.push_back({0, obj.cost(theta)});

    if (cfg.max_iterations > 0 && report.trace.back().cost > cfg.threshold) {
        if (opt == Optimizer::Bfgs) {
            require(!cfg.shots, ErrorKind::InvalidArgument, "gradient optimizer needs exact mode");
            run_bfgs(obj, theta, cfg, report);
        } else {
            run_nelder_mead(obj, theta, cfg, report);
        }
    }

    SampleMode exact;
    report.theta = theta;
    report.cost = cfg.shots ? Objective{&problem, ansatz, exact}.cost(theta) : report.trace.back().cost;
    report.converged = report.cost <= cfg.threshold;

    DenseVector rhs(problem.b.begin(), problem.b.end());
    DenseVector xref = solve_reference(build_operator_1d(cfg.n, BoundaryKind::dirichlet()), rhs);
    std::vector<double> psi = ansatz_state(ansatz, theta).real();
    double overlap = dot(psi, xref) / norm2(xref);
    report.fidelity = overlap * overlap;
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json(const VqlsReport &r) {
    nlohmann::json j;
    j["problem"] = r.problem;
    j["decomposition_provenance"] = r.provenance;
    j["mode"] = r.mode;
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["optimizer"] = r.optimizer;
    j["trace"] = nlohmann::json::array();
    for (const auto &t : r.trace) {
        j["trace"].push_back({{"iter", t.iter}, {"cost", t.cost}});
    }
    j["theta"] = r.theta;
    j["cost"] = r.cost;
    j["fidelity"] = r.fidelity;
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["wall_time"] = r.wall_time;
    return j.dump();
}

CostComparison cost_compare(int n, const CostModel &m) {
    require(n >= 1, ErrorKind::InvalidArgument, "cost comparison needs n >= 1");
    CostComparison out;
    out.n = n;
    out.in_regime = n >= 4;
    out.controlled_shift = m.x + (n + 1) * m.t3;
    out.mcz_n1 = mcz_cost(n + 1, m);
    out.mcz_n = mcz_cost(n, m);
    out.g1 = 24.0 * out.controlled_shift + 12.0 * out.mcz_n1;
    out.g2 = 12.0 * out.controlled_shift + 6.0 * (n + 3) * m.cnot + 12.0 * (n - 1) * m.t3 + 6.0 * out.mcz_n;
    out.excess = out.g1 - out.g2;
    out.aggregate = n * out.excess;
    return out;
}

std::string to_json(const CostComparison &c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["controlled_shift"] = c.controlled_shift;
    j["mcz_n_plus_1"] = c.mcz_n1;
    j["mcz_n"] = c.mcz_n;
    j["g1"] = c.g1;
    j["g2"] = c.g2;
    j["excess"] = c.excess;
    j["aggregate_excess"] = c.aggregate;
    j["in_regime"] = c.in_regime;
    return j.dump();
}

}  // namespace plcu
