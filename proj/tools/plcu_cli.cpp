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


// plcu command-line driver. Talks to the library only through plcu.h.
//
// Exit codes: 0 success, 2 verification failure, 3 precondition violation,
// 4 non-convergence, 1 internal error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plcu/plcu.h"

namespace {

constexpr int kExitVerify = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitNoConvergence = 4;
constexpr int kExitInternal = 1;

struct CliError {
    int code;
    std::string message;
};

void check(plcu_status st) {
    if (st == PLCU_OK) {
        return;
    }
    int code = kExitPrecondition;
    if (st == PLCU_ERR_ANCILLA_LEAK) {
        code = kExitVerify;
    } else if (st == PLCU_ERR_INTERNAL) {
        code = kExitInternal;
    }
    throw CliError{code, std::string(plcu_status_name(st)) + ": " + plcu_last_error()};
}

struct MatrixDeleter {
    void operator()(plcu_matrix *m) const {
        plcu_matrix_free(m);
    }
};
struct LcuDeleter {
    void operator()(plcu_lcu *l) const {
        plcu_lcu_free(l);
    }
};
struct CircuitDeleter {
    void operator()(plcu_circuit *c) const {
        plcu_circuit_free(c);
    }
};
struct StringDeleter {
    void operator()(char *s) const {
        plcu_string_free(s);
    }
};

using Matrix = std::unique_ptr<plcu_matrix, MatrixDeleter>;
using Lcu = std::unique_ptr<plcu_lcu, LcuDeleter>;
using CircuitPtr = std::unique_ptr<plcu_circuit, CircuitDeleter>;

std::string take(char *s) {
    std::unique_ptr<char, StringDeleter> owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw CliError{kExitPrecondition, "cannot read " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Relative output paths land in $PLCU_OUTPUT_DIR when it is set.
std::string resolve_output(const std::string &path) {
    const char *dir = std::getenv("PLCU_OUTPUT_DIR");
    std::filesystem::path p(path);
    if (dir != nullptr && *dir != '\0' && p.is_relative()) {
        std::filesystem::create_directories(dir);
        return (std::filesystem::path(dir) / p).string();
    }
    return path;
}

/// Machine output goes to --out when given (summary on stdout), else stdout.
void emit(const std::string &out_path, const std::string &payload, const std::string &summary) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::string path = resolve_output(out_path);
    std::ofstream out(path);
    if (!out) {
        throw CliError{kExitPrecondition, "cannot write " + path};
    }
    out << payload;
    if (!payload.empty() && payload.back() != '\n') {
        out << '\n';
    }
    std::cout << summary << " -> " << path << '\n';
}

double eval_poly(const std::vector<double> &a, double x) {
    double y = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        y = y * x + *it;
    }
    return y;
}

struct DecompOptions {
    std::string kind;
    std::vector<std::string> bc;
    std::vector<int> n;
    double a0 = 0.0;
    double a1 = 0.0;
    double p = 0.0;
    std::vector<double> poly;
    std::vector<int> taus;

    void attach(CLI::App *app, bool n_required = true) {
        app->add_option("--kind", kind,
                        "decomposition: periodic, dirichlet, robin, nd, first-order, first-order-poly, kharazi, "
                        "poly, cubic, tau (defaults from --bc)");
        app->add_option("--bc", bc, "boundary kind per dimension: dirichlet, periodic, robin");
        auto *opt = app->add_option("--n", n, "qubits per dimension (repeat for d > 1)");
        if (n_required) {
            opt->required();
        }
        app->add_option("--a0", a0, "Robin coefficient at x = 0");
        app->add_option("--a1", a1, "Robin coefficient at x = 1");
        app->add_option("--p", p, "constant first-order coefficient");
        app->add_option("--poly", poly, "polynomial coefficients a0 a1 ... (lowest degree first)");
        app->add_option("--tau", taus, "tau indices in {0,1,2,3}, one per qubit");
    }

    plcu_boundary boundary(std::size_t i) const {
        std::string name = bc.empty() ? "dirichlet" : bc[std::min(i, bc.size() - 1)];
        plcu_bc_kind k;
        check(plcu_boundary_parse(name.c_str(), &k));
        return plcu_boundary{k, a0, a1};
    }

    std::string kind_name() const {
        if (!kind.empty()) {
            return kind;
        }
        if (n.size() > 1) {
            return "nd";
        }
        if (bc.empty()) {
            throw CliError{kExitPrecondition, "give --kind or --bc"};
        }
        return bc.front() == "neumann" ? "robin" : bc.front();
    }
};

/// Request plus the storage its pointers refer to.
struct Request {
    plcu_decomp_request req{};
    std::vector<int> nd_n;
    std::vector<plcu_boundary> nd_bc;
    std::vector<double> poly;
    std::vector<int> taus;
    std::string name;

    Request(const DecompOptions &o, std::vector<int> ns) : nd_n(std::move(ns)), poly(o.poly), taus(o.taus) {
        name = o.kind_name();
        check(plcu_decomp_kind_parse(name.c_str(), &req.kind));
        if (req.kind == PLCU_DECOMP_ND) {
            for (std::size_t i = 0; i < nd_n.size(); i++) {
                nd_bc.push_back(o.boundary(i));
            }
            req.dims = nd_n.size();
            req.nd_n = nd_n.data();
            req.nd_bc = nd_bc.data();
        } else if (nd_n.size() != 1) {
            throw CliError{kExitPrecondition, name + " takes a single --n"};
        }
        req.n = nd_n.front();
        if (req.kind == PLCU_DECOMP_TAU) {
            if (static_cast<int>(taus.size()) != req.n) {
                throw CliError{kExitPrecondition, "--tau needs exactly n entries"};
            }
            req.taus = taus.data();
        }
        req.a0 = o.a0;
        req.a1 = o.a1;
        req.p = o.p;
        req.poly = poly.empty() ? nullptr : poly.data();
        req.poly_len = poly.size();
    }

    Lcu decompose() const {
        plcu_lcu *l = nullptr;
        check(plcu_decompose(&req, &l));
        return Lcu(l);
    }

    Matrix target() const {
        plcu_matrix *m = nullptr;
        check(plcu_decomp_target(&req, &m));
        return Matrix(m);
    }
};

int cmd_build_matrix(const DecompOptions &o, const std::string &what, const std::vector<double> &f_poly,
                     const std::vector<double> &boundary, const std::string &format, const std::string &out) {
    plcu_matrix *raw = nullptr;
    if (what == "operator") {
        if (o.n.size() == 1) {
            check(plcu_build_operator_1d(o.n[0], o.boundary(0), &raw));
        } else {
            std::vector<plcu_boundary> bcs;
            for (std::size_t i = 0; i < o.n.size(); i++) {
                bcs.push_back(o.boundary(i));
            }
            check(plcu_build_operator_nd(o.n.data(), bcs.data(), o.n.size(), &raw));
        }
    } else if (what == "laplacian") {
        std::vector<plcu_boundary> bcs;
        for (std::size_t i = 0; i < o.n.size(); i++) {
            bcs.push_back(o.boundary(i));
        }
        check(plcu_build_operator_nd(o.n.data(), bcs.data(), o.n.size(), &raw));
    } else if (what == "gradient") {
        check(plcu_build_gradient_1d(o.n.at(0), &raw));
    } else if (what == "coefficient") {
        if (o.poly.empty()) {
            throw CliError{kExitPrecondition, "coefficient matrix needs --poly"};
        }
        check(plcu_build_coefficient_diag(o.poly.data(), o.poly.size(), o.n.at(0), &raw));
    } else if (what == "forcing") {
        plcu_boundary bc = o.boundary(0);
        int n = o.n.at(0);
        std::vector<double> xs(std::size_t{1} << n);
        check(plcu_grid_points(bc.kind, n, xs.data(), xs.size()));
        std::vector<double> f(xs.size());
        for (std::size_t i = 0; i < xs.size(); i++) {
            f[i] = eval_poly(f_poly, xs[i]);
        }
        check(plcu_build_forcing_1d(n, bc, f.data(), f.size(), boundary.empty() ? nullptr : boundary.data(),
                                    boundary.size(), &raw));
    } else {
        throw CliError{kExitPrecondition, "unknown matrix kind '" + what + "'"};
    }
    Matrix m(raw);
    std::string payload;
    if (format == "csv") {
        char *s = nullptr;
        check(plcu_matrix_to_csv(m.get(), &s));
        payload = take(s);
    } else {
        char *s = nullptr;
        check(plcu_matrix_to_json(m.get(), &s));
        payload = take(s);
    }
    emit(out, payload,
         what + " " + std::to_string(plcu_matrix_rows(m.get())) + "x" + std::to_string(plcu_matrix_cols(m.get())));
    return 0;
}

int cmd_decompose(const DecompOptions &o, double tol, const std::string &out) {
    Request r(o, o.n);
    Lcu l = r.decompose();
    Matrix t = r.target();
    double dev = 0.0;
    check(plcu_lcu_verify(l.get(), t.get(), &dev));
    char *s = nullptr;
    check(plcu_lcu_to_json(l.get(), &s));
    nlohmann::json j = nlohmann::json::parse(take(s));
    j["deviation"] = dev;
    j["tolerance"] = tol;
    std::ostringstream summary;
    summary << r.name << ": " << plcu_lcu_term_count(l.get()) << " terms, deviation " << dev;
    emit(out, j.dump(2), summary.str());
    if (out.empty()) {
        std::cerr << summary.str() << '\n';
    }
    if (!(dev <= tol)) {
        std::cerr << "verification failed: deviation " << dev << " exceeds " << tol << '\n';
        return kExitVerify;
    }
    return 0;
}

int cmd_verify(const DecompOptions &o, const std::string &lcu_path, const std::string &target_path, double tol) {
    plcu_lcu *raw = nullptr;
    check(plcu_lcu_from_json(read_file(lcu_path).c_str(), &raw));
    Lcu l(raw);
    Matrix t;
    if (!target_path.empty()) {
        plcu_matrix *m = nullptr;
        check(plcu_matrix_from_json(read_file(target_path).c_str(), &m));
        t.reset(m);
    } else if (!o.n.empty()) {
        t = Request(o, o.n).target();
    } else {
        throw CliError{kExitPrecondition, "verify needs --target or the decomposition options of the target"};
    }
    double dev = 0.0;
    check(plcu_lcu_verify(l.get(), t.get(), &dev));
    nlohmann::json j{{"terms", plcu_lcu_term_count(l.get())}, {"deviation", dev}, {"tolerance", tol},
                     {"ok", dev <= tol}};
    std::cout << j.dump() << '\n';
    return dev <= tol ? 0 : kExitVerify;
}

int cmd_synth(const DecompOptions &o, int term, bool ancilla, bool controlled, bool check_matrix,
              const std::string &format, const std::string &out) {
    Request r(o, o.n);
    Lcu l = r.decompose();
    std::size_t count = plcu_lcu_term_count(l.get());
    std::vector<std::size_t> terms;
    if (term >= 0) {
        terms.push_back(static_cast<std::size_t>(term));
    } else {
        for (std::size_t i = 0; i < count; i++) {
            terms.push_back(i);
        }
    }
    std::string payload;
    nlohmann::json all = nlohmann::json::array();
    double worst = 0.0;
    for (std::size_t i : terms) {
        plcu_circuit *raw = nullptr;
        check(controlled ? plcu_synth_controlled_term(l.get(), i, &raw) : plcu_synth_term(l.get(), i, ancilla, &raw));
        CircuitPtr c(raw);
        char *s = nullptr;
        check(plcu_circuit_export(c.get(), format.c_str(), &s));
        std::string text = take(s);
        if (format == "json") {
            all.push_back(nlohmann::json::parse(text));
        } else {
            payload += "# term " + std::to_string(i) + "\n" + text;
        }
        if (check_matrix && !controlled) {
            plcu_matrix *cm = nullptr;
            plcu_matrix *tm = nullptr;
            check(plcu_circuit_matrix(c.get(), &cm));
            Matrix cmm(cm);
            check(plcu_lcu_term_matrix(l.get(), i, &tm));
            Matrix tmm(tm);
            double d = 0.0;
            check(plcu_matrix_max_abs_diff(cmm.get(), tmm.get(), &d));
            worst = std::max(worst, d);
        }
    }
    if (format == "json") {
        payload = (terms.size() == 1 ? all[0] : all).dump();
    }
    emit(out, payload, std::to_string(terms.size()) + " circuit(s)");
    if (check_matrix && !controlled) {
        std::cerr << "max deviation from term matrices: " << worst << '\n';
        if (worst > 1e-10) {
            return kExitVerify;
        }
    }
    return 0;
}

int cmd_count(const DecompOptions &o, int n_min, int n_max, int dims, const std::string &ancilla_policy,
              const std::string &out) {
    if (n_min > n_max) {
        throw CliError{kExitPrecondition, "--n-min must not exceed --n-max"};
    }
    bool ancilla = dims == 1;
    if (ancilla_policy == "on") {
        ancilla = true;
    } else if (ancilla_policy == "off") {
        ancilla = false;
    } else if (ancilla_policy != "auto") {
        throw CliError{kExitPrecondition, "--ancilla must be auto, on or off"};
    }
    char *h = nullptr;
    check(plcu_resource_csv_header(&h));
    std::string csv = take(h);
    std::vector<double> ns;
    std::vector<double> linear;
    std::vector<double> depth;
    std::string name;
    for (int n = n_min; n <= n_max; n++) {
        Request r(o, std::vector<int>(static_cast<std::size_t>(dims), n));
        name = r.name;
        Lcu l = r.decompose();
        char *rows = nullptr;
        check(plcu_resource_csv_rows(r.name.c_str(), n, l.get(), ancilla, &rows));
        csv += take(rows);
        double max_linear = 0.0;
        double max_depth = 0.0;
        for (std::size_t i = 0; i < plcu_lcu_term_count(l.get()); i++) {
            plcu_circuit *raw = nullptr;
            check(plcu_synth_term(l.get(), i, ancilla, &raw));
            CircuitPtr c(raw);
            plcu_gate_count gc;
            check(plcu_circuit_counts(c.get(), &gc));
            max_linear = std::max(max_linear, static_cast<double>(gc.x + gc.cnot + gc.toffoli));
            max_depth = std::max(max_depth, static_cast<double>(gc.depth));
        }
        csv += r.name + "," + std::to_string(n) + ",max,,,,,," + std::to_string(static_cast<long>(max_depth)) + ",\n";
        ns.push_back(n);
        linear.push_back(max_linear);
        depth.push_back(max_depth);
    }
    if (ns.size() >= 2) {
        plcu_linear_fit fl;
        plcu_linear_fit fd;
        check(plcu_fit_linear(ns.data(), linear.data(), ns.size(), &fl));
        check(plcu_fit_linear(ns.data(), depth.data(), ns.size(), &fd));
        std::ostringstream fit;
        fit << "# fit max(X+CNOT+Toffoli) = " << fl.slope << "*n + " << fl.intercept
            << " (relative residual " << fl.rel_residual << ", max pointwise " << fl.max_rel_residual << ")\n";
        fit << "# fit max depth = " << fd.slope << "*n + " << fd.intercept << " (relative residual " << fd.rel_residual
            << ", max pointwise " << fd.max_rel_residual << ")\n";
        csv += fit.str();
    }
    emit(out, csv, name + " counts for n in [" + std::to_string(n_min) + "," + std::to_string(n_max) + "]");
    return 0;
}

int cmd_simulate(const std::string &path, std::string format, std::uint64_t input, bool matrix,
                 const std::string &out) {
    if (format.empty()) {
        format = std::filesystem::path(path).extension() == ".json" ? "json" : "text";
    }
    plcu_circuit *raw = nullptr;
    check(plcu_circuit_import(read_file(path).c_str(), format.c_str(), &raw));
    CircuitPtr c(raw);
    std::string payload;
    if (matrix) {
        plcu_matrix *m = nullptr;
        check(plcu_circuit_matrix(c.get(), &m));
        Matrix mm(m);
        char *s = nullptr;
        check(plcu_matrix_to_json(mm.get(), &s));
        payload = take(s);
    } else {
        char *s = nullptr;
        check(plcu_simulate_basis(c.get(), input, &s));
        payload = take(s);
    }
    emit(out, payload, matrix ? "circuit matrix" : "final state");
    return 0;
}

int cmd_vqls(plcu_vqls_config cfg, const std::string &mode, const std::string &optimizer, const std::string &out) {
    if (mode == "shots") {
        cfg.shots = 1;
    } else if (mode != "exact") {
        throw CliError{kExitPrecondition, "--mode must be exact or shots"};
    }
    if (optimizer == "bfgs") {
        cfg.optimizer = PLCU_OPT_BFGS;
    } else if (optimizer == "nelder-mead" || optimizer == "nm") {
        cfg.optimizer = PLCU_OPT_NELDER_MEAD;
    } else if (!optimizer.empty()) {
        throw CliError{kExitPrecondition, "unknown optimizer '" + optimizer + "'"};
    }
    plcu_vqls_summary sum;
    char *s = nullptr;
    check(plcu_vqls_run(&cfg, &sum, &s));
    std::ostringstream summary;
    summary << "vqls n=" << cfg.n << " cost " << sum.cost << " fidelity " << sum.fidelity << " after "
            << sum.iterations << " iterations";
    emit(out, take(s), summary.str());
    if (out.empty()) {
        std::cerr << summary.str() << '\n';
    }
    if (!sum.converged) {
        std::cerr << "did not reach cost threshold " << cfg.threshold << '\n';
        return kExitNoConvergence;
    }
    return 0;
}

int cmd_compare_cost(int n_min, int n_max, const plcu_cost_model &m, const std::string &out) {
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (int n = n_min; n <= n_max; n++) {
        plcu_cost_comparison c;
        check(plcu_cost_compare(n, &m, &c));
        char *s = nullptr;
        check(plcu_cost_comparison_to_json(&c, &s));
        rows.push_back(nlohmann::json::parse(take(s)));
        if (c.in_regime && (c.excess < n * m.t3 || c.aggregate < static_cast<double>(n) * n * m.t3)) {
            ok = false;
        }
    }
    std::string payload = (rows.size() == 1 ? rows[0] : rows).dump(2);
    emit(out, payload, "cost comparison");
    return ok ? 0 : kExitVerify;
}

double sine_u(double x, void *) {
    return std::sin(std::numbers::pi * x);
}
double sine_du(double x, void *) {
    return std::numbers::pi * std::cos(std::numbers::pi * x);
}
double sine_f(double x, void *) {
    return -std::numbers::pi * std::numbers::pi * std::sin(std::numbers::pi * x);
}

int cmd_convergence(const DecompOptions &o, std::vector<int> ns, double min_order, double max_order,
                    const std::string &out) {
    if (ns.empty()) {
        ns = {4, 5, 6, 7};
    }
    plcu_boundary bc = o.boundary(0);
    char *s = nullptr;
    check(plcu_convergence(bc, sine_f, sine_u, sine_du, nullptr, ns.data(), ns.size(), &s));
    std::string payload = take(s);
    nlohmann::json j = nlohmann::json::parse(payload);
    bool ok = true;
    for (double order : j["order"]) {
        ok = ok && order >= min_order && order <= max_order;
    }
    j["order_window"] = {min_order, max_order};
    j["ok"] = ok;
    emit(out, j.dump(2), "convergence study");
    return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"plcu: LCU decompositions of discretized Poisson operators"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    app.add_option("-o,--out", out, "write machine output here (relative paths honor PLCU_OUTPUT_DIR)");

    DecompOptions o;
    int rc = 0;

    auto *bm = app.add_subcommand("build-matrix", "operator, gradient, coefficient or forcing matrix");
    std::string bm_kind = "operator";
    std::string bm_format = "json";
    std::vector<double> f_poly{0.0};
    std::vector<double> boundary;
    o.attach(bm);
    bm->add_option("--what", bm_kind, "operator | laplacian | gradient | coefficient | forcing");
    bm->add_option("--format", bm_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    bm->add_option("--f-poly", f_poly, "forcing f as polynomial coefficients");
    bm->add_option("--boundary", boundary, "boundary data: a b (Dirichlet) or b0 b1 (Robin)");

    auto *dec = app.add_subcommand("decompose", "LCU decomposition with verification");
    double dec_tol = 1e-9;
    o.attach(dec);
    dec->add_option("--tol", dec_tol, "maximum allowed deviation");

    auto *ver = app.add_subcommand("verify", "check an LCU JSON against its target operator");
    std::string lcu_path;
    std::string target_path;
    double ver_tol = 1e-9;
    o.attach(ver, false);
    ver->add_option("--lcu", lcu_path, "LCU report JSON")->required();
    ver->add_option("--target", target_path, "target matrix JSON (otherwise built from the options)");
    ver->add_option("--tol", ver_tol, "maximum allowed deviation");

    auto *syn = app.add_subcommand("synth", "synthesize term circuits");
    int term = -1;
    bool no_ancilla = false;
    bool controlled = false;
    bool check_matrix = false;
    std::string syn_format = "text";
    o.attach(syn);
    syn->add_option("--term", term, "term index (all terms when omitted)");
    syn->add_flag("--no-ancilla", no_ancilla, "synthesize without the helper qubit");
    syn->add_flag("--controlled", controlled, "emit the controlled variant used by the Hadamard tests");
    syn->add_flag("--check", check_matrix, "verify each circuit against its term matrix");
    syn->add_option("--format", syn_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto *cnt = app.add_subcommand("count", "gate-count CSV over a range of n");
    int n_min = 3;
    int n_max = 9;
    int dims = 1;
    std::string ancilla_policy = "auto";
    o.attach(cnt, false);
    cnt->add_option("--n-min", n_min, "smallest n");
    cnt->add_option("--n-max", n_max, "largest n");
    cnt->add_option("--dims", dims, "dimensions, each with n qubits")->check(CLI::Range(1, 4));
    cnt->add_option("--ancilla", ancilla_policy, "auto | on | off (auto: on for d = 1)");

    auto *sim = app.add_subcommand("simulate", "run a circuit file on a basis state");
    std::string circuit_path;
    std::string sim_format;
    std::uint64_t input = 0;
    bool sim_matrix = false;
    sim->add_option("--circuit", circuit_path, "circuit file")->required();
    sim->add_option("--format", sim_format, "text | json (default from extension)");
    sim->add_option("--input", input, "basis state index");
    sim->add_flag("--matrix", sim_matrix, "print the realized data-qubit matrix instead");

    auto *vq = app.add_subcommand("vqls", "VQLS on the 1-D Dirichlet sine problem");
    plcu_vqls_config cfg;
    plcu_vqls_config_default(&cfg);
    std::string mode = "exact";
    std::string optimizer;
    vq->add_option("--n", cfg.n, "qubits")->check(CLI::Range(2, 6));
    vq->add_option("--layers", cfg.layers, "ansatz layers (default n)");
    vq->add_option("--mode", mode, "exact | shots");
    vq->add_option("--shots", cfg.shot_count, "shots per Hadamard test");
    vq->add_option("--seed", cfg.seed, "random seed");
    vq->add_option("--optimizer", optimizer, "bfgs | nelder-mead");
    vq->add_option("--max-iter", cfg.max_iterations, "iteration cap");
    vq->add_option("--threshold", cfg.threshold, "cost threshold");
    vq->add_option("--init-scale", cfg.init_scale, "initial parameter range [-s, s]");

    auto *cc = app.add_subcommand("compare-cost", "Hadamard-test gate cost against the Kharazi LCU");
    std::vector<int> cc_n{8};
    plcu_cost_model model;
    plcu_cost_model_default(&model);
    cc->add_option("--n", cc_n, "n, or two values for an inclusive range")->expected(1, 2);
    cc->add_option("--x", model.x, "|X|");
    cc->add_option("--hadamard", model.h, "|H|");
    cc->add_option("--cnot", model.cnot, "|CNOT|");
    cc->add_option("--t3", model.t3, "|T3| (Toffoli)");

    auto *conv = app.add_subcommand("convergence", "FDM convergence study for u = sin(pi x)");
    std::vector<int> conv_n;
    double min_order = 1.9;
    double max_order = 2.1;
    conv->add_option("--bc", o.bc, "dirichlet | robin");
    conv->add_option("--a0", o.a0, "Robin coefficient at x = 0");
    conv->add_option("--a1", o.a1, "Robin coefficient at x = 1");
    conv->add_option("--n", conv_n, "grid sizes (default 4 5 6 7)");
    conv->add_option("--min-order", min_order, "lower bound on observed orders");
    conv->add_option("--max-order", max_order, "upper bound on observed orders");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitPrecondition;
    }

    try {
        if (bm->parsed()) {
            rc = cmd_build_matrix(o, bm_kind, f_poly, boundary, bm_format, out);
        } else if (dec->parsed()) {
            rc = cmd_decompose(o, dec_tol, out);
        } else if (ver->parsed()) {
            rc = cmd_verify(o, lcu_path, target_path, ver_tol);
        } else if (syn->parsed()) {
            rc = cmd_synth(o, term, !no_ancilla, controlled, check_matrix, syn_format, out);
        } else if (cnt->parsed()) {
            rc = cmd_count(o, n_min, n_max, dims, ancilla_policy, out);
        } else if (sim->parsed()) {
            rc = cmd_simulate(circuit_path, sim_format, input, sim_matrix, out);
        } else if (vq->parsed()) {
            rc = cmd_vqls(cfg, mode, optimizer, out);
        } else if (cc->parsed()) {
            int lo = cc_n.front();
            int hi = cc_n.back();
            rc = cmd_compare_cost(lo, hi, model, out);
        } else if (conv->parsed()) {
            rc = cmd_convergence(o, conv_n, min_order, max_order, out);
        }
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return rc;
}
