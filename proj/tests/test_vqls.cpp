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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "plcu/error.hpp"
#include "plcu/grid.hpp"
#include "plcu/vqls.hpp"

namespace {

using plcu::Ansatz;
using plcu::DenseMatrix;
using plcu::LcuDecomposition;
using plcu::StateVector;
using plcu::VqlsProblem;

constexpr double kPi = std::numbers::pi;

std::vector<double> random_theta(std::size_t count, std::mt19937_64 &rng, double scale = kPi) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> t(count);
    for (double &x : t) {
        x = u(rng);
    }
    return t;
}

LcuDecomposition identity_dec(int n) {
    LcuDecomposition dec;
    dec.width = n;
    dec.provenance = "identity";
    dec.terms.push_back({1.0, {n, {plcu::Factor::identity(0, n)}}});
    return dec;
}

/// U_b as a dense reflection (identity when w is empty).
DenseMatrix ub_matrix(const VqlsProblem &p) {
    DenseMatrix u = oracle::eye(oracle::dim(p.n));
    for (std::size_t i = 0; i < p.w.size(); i++) {
        for (std::size_t j = 0; j < p.w.size(); j++) {
            u(i, j) -= 2.0 * p.w[i] * p.w[j];
        }
    }
    return u;
}

double dense_beta(const VqlsProblem &p, std::size_t l, std::size_t lp, const std::vector<double> &psi) {
    DenseMatrix rl = plcu::term_matrix(p.dec.terms[l].expr);
    DenseMatrix rlp = plcu::term_matrix(p.dec.terms[lp].expr);
    return oracle::quad(psi, oracle::matmul(rlp.transpose(), rl), psi);
}

double dense_delta(const VqlsProblem &p, int j, std::size_t l, std::size_t lp, const std::vector<double> &psi) {
    DenseMatrix rl = plcu::term_matrix(p.dec.terms[l].expr);
    DenseMatrix rlp = plcu::term_matrix(p.dec.terms[lp].expr);
    DenseMatrix u = ub_matrix(p);
    DenseMatrix z = oracle::on_slot(p.n, j - 1, oracle::pauli_z());
    DenseMatrix m = oracle::matmul(oracle::matmul(rlp.transpose(), u), oracle::matmul(z, oracle::matmul(u.transpose(), rl)));
    return oracle::quad(psi, m, psi);
}

double dense_cost(const VqlsProblem &p, const std::vector<double> &psi) {
    const auto &terms = p.dec.terms;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t l = 0; l < terms.size(); l++) {
        for (std::size_t lp = 0; lp < terms.size(); lp++) {
            double w = terms[l].coeff * terms[lp].coeff;
            den += w * dense_beta(p, l, lp, psi);
            for (int j = 1; j <= p.n; j++) {
                num += w * dense_delta(p, j, l, lp, psi);
            }
        }
    }
    return 0.5 - num / (2.0 * p.n * den);
}

std::vector<double> sine_rhs(int n) {
    auto x = plcu::grid_points(plcu::Boundary::Dirichlet, n);
    std::vector<double> f(x.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        f[i] = -kPi * kPi * std::sin(kPi * x[i]);
    }
    return plcu::build_forcing_1d(n, plcu::BoundaryKind::dirichlet(), f, std::vector<double>{0.0, 0.0});
}

TEST(Ansatz, ZeroAnglesGiveZeroState) {
    for (int n = 1; n <= 5; n++) {
        Ansatz a{n, n};
        std::vector<double> theta(a.parameter_count(), 0.0);
        StateVector s = plcu::ansatz_state(a, theta);
        EXPECT_NEAR(s[0].real(), 1.0, 1e-15);
        EXPECT_NEAR(s.norm(), 1.0, 1e-15);
    }
}

TEST(Ansatz, SingleRotationByPi) {
    Ansatz a{1, 0};
    std::vector<double> theta{kPi};
    StateVector s = plcu::ansatz_state(a, theta);
    EXPECT_NEAR(std::abs(s[1].real()), 1.0, 1e-15);
}

TEST(Ansatz, RealAndNormalized) {
    std::mt19937_64 rng(1);
    Ansatz a{4, 3};
    StateVector s = plcu::ansatz_state(a, random_theta(a.parameter_count(), rng));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    for (auto amp : s.amplitudes()) {
        EXPECT_EQ(amp.imag(), 0.0);
    }
}

TEST(Ansatz, LengthChecked) {
    Ansatz a{3, 2};
    EXPECT_THROW(plcu::ansatz_state(a, std::vector<double>(5, 0.0)), plcu::Error);
}

TEST(Ansatz, ShiftGradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(2);
    Ansatz a{3, 2};
    std::size_t d = oracle::dim(3);
    DenseMatrix m(d, d);
    std::normal_distribution<double> g;
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j <= i; j++) {
            m(i, j) = m(j, i) = g(rng);
        }
    }
    auto f = [&](const std::vector<double> &t) {
        auto psi = plcu::ansatz_state(a, t).real();
        return oracle::quad(psi, m, psi);
    };
    auto theta = random_theta(a.parameter_count(), rng);
    for (std::size_t k = 0; k < theta.size(); k++) {
        auto plus = theta;
        auto minus = theta;
        plus[k] += kPi / 2;
        minus[k] -= kPi / 2;
        double shift = (f(plus) - f(minus)) / 2.0;
        const double eps = 1e-5;
        plus = theta;
        minus = theta;
        plus[k] += eps;
        minus[k] -= eps;
        double fd = (f(plus) - f(minus)) / (2.0 * eps);
        EXPECT_NEAR(shift, fd, 1e-6) << k;
    }
}

TEST(PrepareB, Examples) {
    StateVector e1 = plcu::prepare_b(std::vector<double>{2.0, 0.0, 0.0, 0.0});
    EXPECT_NEAR(e1[0].real(), 1.0, 1e-15);
    StateVector u = plcu::prepare_b(std::vector<double>{1.0, 1.0, 1.0, 1.0});
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(u[i].real(), 0.5, 1e-15);
    }
    EXPECT_THROW(plcu::prepare_b(std::vector<double>(4, 0.0)), plcu::Error);
}

TEST(PrepareB, RandomIsProportional) {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> g;
    std::vector<double> r(16);
    for (double &x : r) {
        x = g(rng);
    }
    auto b = plcu::prepare_b(r).real();
    EXPECT_NEAR(plcu::norm2(b), 1.0, 1e-12);
    double scale = plcu::norm2(r);
    for (std::size_t i = 0; i < r.size(); i++) {
        EXPECT_NEAR(b[i] * scale, r[i], 1e-12);
    }
}

TEST(Problem, HouseholderMapsZeroToB) {
    auto p = VqlsProblem::make(plcu::decompose_dirichlet(3), sine_rhs(3));
    DenseMatrix u = ub_matrix(p);
    for (std::size_t i = 0; i < p.b.size(); i++) {
        EXPECT_NEAR(u(i, 0), p.b[i], 1e-14);
    }
    auto q = VqlsProblem::make(plcu::decompose_dirichlet(2), std::vector<double>{1.0, 0.0, 0.0, 0.0});
    EXPECT_TRUE(q.w.empty());
}

TEST(Beta, DiagonalAndOrthogonal) {
    int n = 3;
    auto p = VqlsProblem::make(plcu::decompose_dirichlet(n), sine_rhs(n));
    std::mt19937_64 rng(3);
    Ansatz a{n, 2};
    StateVector psi = plcu::ansatz_state(a, random_theta(a.parameter_count(), rng));
    for (std::size_t l = 0; l < p.dec.terms.size(); l++) {
        EXPECT_NEAR(plcu::beta(p, l, l, psi), 1.0, 1e-12);
    }
    // R_0 = I and R_3 = X^n on |000> are orthogonal
    EXPECT_NEAR(plcu::beta(p, 0, 3, StateVector(n)), 0.0, 1e-14);
}

TEST(BetaDelta, MatchDenseForms) {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 4; n++) {
        std::vector<LcuDecomposition> decs{plcu::decompose_dirichlet(n), plcu::decompose_periodic(n),
                                           plcu::decompose_neumann_robin(n, 0.3, -0.6), plcu::decompose_kharazi(n),
                                           plcu::decompose_first_order_const(n, 1.2)};
        for (auto &dec : decs) {
            auto p = VqlsProblem::make(dec, sine_rhs(n));
            Ansatz a{n, n};
            StateVector psi = plcu::ansatz_state(a, random_theta(a.parameter_count(), rng));
            auto v = psi.real();
            std::size_t lcount = p.dec.terms.size();
            for (std::size_t l = 0; l < lcount; l++) {
                for (std::size_t lp = 0; lp < lcount; lp++) {
                    double b = plcu::beta(p, l, lp, psi);
                    EXPECT_NEAR(b, dense_beta(p, l, lp, v), 1e-12) << p.dec.provenance;
                    EXPECT_NEAR(b, plcu::beta(p, lp, l, psi), 1e-12);
                    for (int j = 1; j <= n; j++) {
                        double dl = plcu::delta(p, j, l, lp, psi);
                        EXPECT_NEAR(dl, dense_delta(p, j, l, lp, v), 1e-12) << p.dec.provenance;
                        EXPECT_NEAR(dl, plcu::delta(p, j, lp, l, psi), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(Delta, PerfectOverlapIsOne) {
    int n = 3;
    auto rhs = sine_rhs(n);
    auto p = VqlsProblem::make(identity_dec(n), rhs);
    StateVector b = plcu::prepare_b(rhs);
    for (int j = 1; j <= n; j++) {
        EXPECT_NEAR(plcu::delta(p, j, 0, 0, b), 1.0, 1e-12);
    }
    EXPECT_NEAR(plcu::local_cost(p, b).cost, 0.0, 1e-12);
}

TEST(Cost, MatchesDenseAndCountsEvaluations) {
    std::mt19937_64 rng(5);
    int n = 3;
    auto p = VqlsProblem::make(plcu::decompose_neumann_robin(n, 0.5, 0.25), sine_rhs(n));
    Ansatz a{n, 2};
    StateVector psi = plcu::ansatz_state(a, random_theta(a.parameter_count(), rng));
    auto br = plcu::local_cost(p, psi);
    EXPECT_NEAR(br.cost, dense_cost(p, psi.real()), 1e-12);
    std::size_t l = p.dec.terms.size();
    EXPECT_LE(br.beta_evaluations, l * (l + 1) / 2);
    EXPECT_LE(br.delta_evaluations, static_cast<std::size_t>(n) * l * (l + 1) / 2);
    for (std::size_t i = 0; i < l; i++) {
        EXPECT_DOUBLE_EQ(br.beta(i, i), 1.0);
        for (std::size_t j = 0; j < l; j++) {
            EXPECT_EQ(br.beta(i, j), br.beta(j, i));
        }
    }
}

TEST(Cost, ExactSolutionIsZero) {
    for (int n = 2; n <= 4; n++) {
        auto rhs = sine_rhs(n);
        auto p = VqlsProblem::make(plcu::decompose_dirichlet(n), rhs);
        auto x = plcu::solve_reference(plcu::build_operator_1d(n, plcu::BoundaryKind::dirichlet()), rhs);
        EXPECT_LE(plcu::local_cost(p, StateVector::from_real(x)).cost, 1e-10) << n;
    }
}

TEST(Cost, NonSolutionIsPositive) {
    int n = 3;
    auto rhs = sine_rhs(n);
    auto p = VqlsProblem::make(plcu::decompose_dirichlet(n), rhs);
    auto x = plcu::solve_reference(plcu::build_operator_1d(n, plcu::BoundaryKind::dirichlet()), rhs);
    x[2] += 0.05;
    EXPECT_GT(plcu::local_cost(p, StateVector::from_real(x)).cost, 1e-6);
}

TEST(Cost, StaysInUnitInterval) {
    std::mt19937_64 rng(6);
    double high = 0.0;
    for (int n = 2; n <= 3; n++) {
        auto p = VqlsProblem::make(plcu::decompose_dirichlet(n), sine_rhs(n));
        Ansatz a{n, n};
        for (int trial = 0; trial < 200; trial++) {
            double c = plcu::local_cost(p, plcu::ansatz_state(a, random_theta(a.parameter_count(), rng))).cost;
            EXPECT_GE(c, -1e-12);
            EXPECT_LE(c, 1.0 + 1e-12);
            high = std::max(high, c);
        }
    }
    // Negative Z expectations push the cost above one half.
    EXPECT_GT(high, 0.5);
}

TEST(Cost, VanishingDenominator) {
    int n = 2;
    LcuDecomposition dec = plcu::decompose_periodic(n);
    dec.terms = {dec.terms[1], dec.terms[1]};
    dec.terms[1].coeff = -1.0;
    auto p = VqlsProblem::make(dec, sine_rhs(n));
    try {
        plcu::local_cost(p, StateVector(n));
        FAIL() << "expected a singular denominator";
    } catch (const plcu::Error &e) {
        EXPECT_EQ(e.kind(), plcu::ErrorKind::Singular);
    }
}

TEST(Cost, ShotEstimateApproachesExact) {
    int n = 2;
    auto p = VqlsProblem::make(plcu::decompose_dirichlet(n), sine_rhs(n));
    std::mt19937_64 init(7);
    Ansatz a{n, n};
    StateVector psi = plcu::ansatz_state(a, random_theta(a.parameter_count(), init));
    double exact = plcu::local_cost(p, psi).cost;
    auto mean_error = [&](std::uint64_t shots) {
        double s = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; seed++) {
            std::mt19937_64 rng(seed);
            s += std::abs(plcu::local_cost(p, psi, {true, shots, &rng}).cost - exact);
        }
        return s / 20.0;
    };
    double coarse = mean_error(1000);
    double fine = mean_error(100000);
    // 100x the shots should cut the error by about 10x
    EXPECT_LT(fine, coarse / 4.0);
    EXPECT_GT(fine, coarse / 25.0);
}

TEST(Optimize, TwoQubitDemoConverges) {
    plcu::VqlsConfig cfg;
    cfg.n = 2;
    auto r = plcu::optimize(cfg);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.cost, 1e-4);
    EXPECT_GE(r.fidelity, 0.99);
    EXPECT_EQ(r.optimizer, "bfgs");
    EXPECT_EQ(r.mode, "exact");
}

TEST(Optimize, ThreeQubitTraceIsMonotone) {
    plcu::VqlsConfig cfg;
    cfg.n = 3;
    auto r = plcu::optimize(cfg);
    ASSERT_GE(r.trace.size(), 2u);
    for (std::size_t i = 1; i < r.trace.size(); i++) {
        EXPECT_LE(r.trace[i].cost, r.trace[i - 1].cost + 1e-12) << i;
    }
    EXPECT_TRUE(r.converged);
}

TEST(Optimize, ZeroIterationsKeepsInitialCost) {
    plcu::VqlsConfig cfg;
    cfg.n = 3;
    cfg.max_iterations = 0;
    auto r = plcu::optimize(cfg);
    ASSERT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_EQ(r.cost, r.trace[0].cost);

    auto p = plcu::dirichlet_sine_problem(3);
    EXPECT_NEAR(r.cost, plcu::local_cost(p, plcu::ansatz_state({3, 3}, r.theta)).cost, 1e-15);
}

TEST(Optimize, ShotModeIsReproducible) {
    plcu::VqlsConfig cfg;
    cfg.n = 2;
    cfg.shots = true;
    cfg.shot_count = 2000;
    cfg.max_iterations = 60;
    auto a = plcu::optimize(cfg);
    auto b = plcu::optimize(cfg);
    EXPECT_EQ(a.theta, b.theta);
    EXPECT_EQ(a.trace.size(), b.trace.size());
    EXPECT_EQ(a.optimizer, "nelder-mead");
}

TEST(Optimize, Preconditions) {
    plcu::VqlsConfig cfg;
    cfg.n = 7;
    EXPECT_THROW(plcu::optimize(cfg), plcu::Error);
    cfg.n = 2;
    cfg.shots = true;
    cfg.optimizer = plcu::Optimizer::Bfgs;
    EXPECT_THROW(plcu::optimize(cfg), plcu::Error);
}

TEST(CostCompare, RegimeInequalities) {
    plcu::CostModel model;
    double last = -1e300;
    for (int n = 4; n <= 12; n++) {
        auto c = plcu::cost_compare(n, model);
        EXPECT_TRUE(c.in_regime);
        EXPECT_GE(c.excess, n * model.t3) << n;
        EXPECT_GE(c.aggregate, n * n * model.t3) << n;
        EXPECT_NEAR(c.excess, c.g1 - c.g2, 1e-9);
        EXPECT_GE(c.excess, last);
        last = c.excess;
    }
    EXPECT_FALSE(plcu::cost_compare(3, model).in_regime);
}

TEST(CostCompare, ClosedFormDifference) {
    plcu::CostModel model{1.5, 2.0, 0.5, 7.0};
    for (int n = 5; n <= 12; n++) {
        auto c = plcu::cost_compare(n, model);
        double shift = model.x + (n + 1) * model.t3;
        double want = 12 * shift + 12 * (3 * n - 11) * model.t3 - 6 * (n + 3) * model.cnot + 12 * model.h;
        EXPECT_NEAR(c.excess, want, 1e-9) << n;
        EXPECT_NEAR(c.controlled_shift, shift, 1e-12);
    }
}

TEST(CostCompare, ToffoliOnlyModel) {
    plcu::CostModel toffoli{0.0, 0.0, 0.0, 1.0};
    for (int n = 5; n <= 12; n++) {
        auto c = plcu::cost_compare(n, toffoli);
        EXPECT_NEAR(c.excess, 48.0 * n - 120.0, 1e-12);
    }
    // the model is linear in its weights
    plcu::CostModel def;
    for (int n = 4; n <= 12; n++) {
        double sum = def.x * plcu::cost_compare(n, {1, 0, 0, 0}).g1 + def.h * plcu::cost_compare(n, {0, 1, 0, 0}).g1 +
                     def.cnot * plcu::cost_compare(n, {0, 0, 1, 0}).g1 +
                     def.t3 * plcu::cost_compare(n, {0, 0, 0, 1}).g1;
        EXPECT_NEAR(plcu::cost_compare(n, def).g1, sum, 1e-9);
    }
}

}  // namespace
