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


#include "plcu/plcu.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "json.hpp"
#include "plcu/circuit.hpp"
#include "plcu/error.hpp"
#include "plcu/grid.hpp"
#include "plcu/lcu.hpp"
#include "plcu/sim.hpp"
#include "plcu/vqls.hpp"

struct plcu_matrix {
    plcu::DenseMatrix m;
};

struct plcu_lcu {
    plcu::LcuDecomposition dec;
};

struct plcu_circuit {
    plcu::Circuit c;
};

namespace {

thread_local std::string g_last_error;

plcu_status status_of(plcu::ErrorKind kind) {
    switch (kind) {
        case plcu::ErrorKind::InvalidArgument:
            return PLCU_ERR_INVALID_ARGUMENT;
        case plcu::ErrorKind::Dimension:
            return PLCU_ERR_DIMENSION;
        case plcu::ErrorKind::Singular:
            return PLCU_ERR_SINGULAR;
        case plcu::ErrorKind::AncillaLeak:
            return PLCU_ERR_ANCILLA_LEAK;
        case plcu::ErrorKind::Parse:
            return PLCU_ERR_PARSE;
        case plcu::ErrorKind::WidthMismatch:
            return PLCU_ERR_WIDTH_MISMATCH;
    }
    return PLCU_ERR_INTERNAL;
}

template <typename F>
plcu_status guarded(F &&body) {
    try {
        body();
        g_last_error.clear();
        return PLCU_OK;
    } catch (const plcu::Error &e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return PLCU_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return PLCU_ERR_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    plcu::require(p != nullptr, plcu::ErrorKind::InvalidArgument, std::string(what) + " must not be null");
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

plcu::BoundaryKind to_bc(const plcu_boundary &b) {
    switch (b.kind) {
        case PLCU_BC_DIRICHLET:
            return plcu::BoundaryKind::dirichlet();
        case PLCU_BC_PERIODIC:
            return plcu::BoundaryKind::periodic();
        case PLCU_BC_ROBIN:
            return plcu::BoundaryKind::robin(b.a0, b.a1);
    }
    plcu::fail(plcu::ErrorKind::InvalidArgument, "unknown boundary kind " + std::to_string(static_cast<int>(b.kind)));
}

plcu::Boundary to_tag(plcu_bc_kind k) {
    return to_bc({k, 0.0, 0.0}).tag;
}

plcu::GridSpec to_spec(const int *n, const plcu_boundary *bc, std::size_t dims) {
    need(n, "grid sizes");
    need(bc, "boundary kinds");
    plcu::GridSpec spec;
    for (std::size_t i = 0; i < dims; i++) {
        spec.n.push_back(n[i]);
        spec.bc.push_back(to_bc(bc[i]));
    }
    spec.validate();
    return spec;
}

plcu::Polynomial to_poly(const plcu_decomp_request &r) {
    plcu::require(r.poly != nullptr && r.poly_len > 0, plcu::ErrorKind::InvalidArgument,
                  "polynomial coefficients are required");
    return plcu::Polynomial{std::vector<double>(r.poly, r.poly + r.poly_len)};
}

std::vector<int> to_taus(const plcu_decomp_request &r) {
    need(r.taus, "tau indices");
    plcu::require(r.n >= 1, plcu::ErrorKind::Dimension, "tau product needs n >= 1");
    return std::vector<int>(r.taus, r.taus + r.n);
}

plcu::LcuDecomposition decompose(const plcu_decomp_request &r) {
    switch (r.kind) {
        case PLCU_DECOMP_PERIODIC:
            return plcu::decompose_periodic(r.n);
        case PLCU_DECOMP_DIRICHLET:
            return plcu::decompose_dirichlet(r.n);
        case PLCU_DECOMP_ROBIN:
            return plcu::decompose_neumann_robin(r.n, r.a0, r.a1);
        case PLCU_DECOMP_ND:
            return plcu::decompose_nd(to_spec(r.nd_n, r.nd_bc, r.dims));
        case PLCU_DECOMP_FIRST_ORDER_CONST:
            return plcu::decompose_first_order_const(r.n, r.p);
        case PLCU_DECOMP_FIRST_ORDER_POLY:
            return plcu::decompose_first_order_poly(r.n, to_poly(r));
        case PLCU_DECOMP_KHARAZI:
            return plcu::decompose_kharazi(r.n);
        case PLCU_DECOMP_POLY_Z:
            return plcu::poly_z_expansion(to_poly(r), r.n);
        case PLCU_DECOMP_CUBIC: {
            plcu::require(r.poly != nullptr && r.poly_len == 4, plcu::ErrorKind::InvalidArgument,
                          "cubic closed form needs exactly 4 coefficients");
            return plcu::cubic_closed_form(r.poly[0], r.poly[1], r.poly[2], r.poly[3], r.n);
        }
        case PLCU_DECOMP_TAU: {
            std::vector<int> taus = to_taus(r);
            return plcu::tau_product_expansion(taus);
        }
    }
    plcu::fail(plcu::ErrorKind::InvalidArgument, "unknown decomposition kind");
}

plcu::DenseMatrix target(const plcu_decomp_request &r) {
    using namespace plcu;
    switch (r.kind) {
        case PLCU_DECOMP_PERIODIC:
            return build_operator_1d(r.n, BoundaryKind::periodic());
        case PLCU_DECOMP_DIRICHLET:
        case PLCU_DECOMP_KHARAZI:
            return build_operator_1d(r.n, BoundaryKind::dirichlet());
        case PLCU_DECOMP_ROBIN:
            return build_operator_1d(r.n, BoundaryKind::robin(r.a0, r.a1));
        case PLCU_DECOMP_ND:
            return build_operator_nd(to_spec(r.nd_n, r.nd_bc, r.dims));
        case PLCU_DECOMP_FIRST_ORDER_CONST: {
            double h = grid_spacing(Boundary::Dirichlet, r.n);
            DenseMatrix out = build_operator_1d(r.n, BoundaryKind::dirichlet());
            out.axpy(h * h * r.p, build_gradient_1d(r.n));
            return out;
        }
        case PLCU_DECOMP_FIRST_ORDER_POLY: {
            double h = grid_spacing(Boundary::Dirichlet, r.n);
            DenseMatrix out = build_operator_1d(r.n, BoundaryKind::dirichlet());
            out.axpy(h * h, build_coefficient_diag(to_poly(r), r.n) * build_gradient_1d(r.n));
            return out;
        }
        case PLCU_DECOMP_POLY_Z:
            return build_coefficient_diag(to_poly(r), r.n);
        case PLCU_DECOMP_CUBIC: {
            plcu::require(r.poly != nullptr && r.poly_len == 4, plcu::ErrorKind::InvalidArgument,
                          "cubic closed form needs exactly 4 coefficients");
            return build_coefficient_diag(to_poly(r), r.n);
        }
        case PLCU_DECOMP_TAU: {
            std::vector<int> taus = to_taus(r);
            DenseMatrix out = tau_matrix(taus[0]);
            for (std::size_t i = 1; i < taus.size(); i++) {
                out = kron(out, tau_matrix(taus[i]));
            }
            return out;
        }
    }
    plcu::fail(plcu::ErrorKind::InvalidArgument, "unknown decomposition kind");
}

const plcu::LcuTerm &term_at(const plcu_lcu *l, std::size_t index) {
    need(l, "decomposition");
    plcu::require(index < l->dec.terms.size(), plcu::ErrorKind::InvalidArgument,
                  "term index " + std::to_string(index) + " out of range");
    return l->dec.terms[index];
}

}  // namespace

extern "C" {

const char *plcu_version(void) {
    return "0.1.0";
}

const char *plcu_last_error(void) {
    return g_last_error.c_str();
}

const char *plcu_status_name(plcu_status status) {
    switch (status) {
        case PLCU_OK:
            return "ok";
        case PLCU_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case PLCU_ERR_DIMENSION:
            return "dimension error";
        case PLCU_ERR_SINGULAR:
            return "singular system";
        case PLCU_ERR_ANCILLA_LEAK:
            return "ancilla leak";
        case PLCU_ERR_PARSE:
            return "parse error";
        case PLCU_ERR_WIDTH_MISMATCH:
            return "width mismatch";
        case PLCU_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void plcu_string_free(char *s) {
    std::free(s);
}

plcu_status plcu_boundary_parse(const char *name, plcu_bc_kind *out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        *out = static_cast<plcu_bc_kind>(plcu::boundary_from_string(name));
    });
}

plcu_status plcu_grid_spacing(plcu_bc_kind kind, int n, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = plcu::grid_spacing(to_tag(kind), n);
    });
}

plcu_status plcu_grid_points(plcu_bc_kind kind, int n, double *out, size_t capacity) {
    return guarded([&] {
        need(out, "out");
        std::vector<double> xs = plcu::grid_points(to_tag(kind), n);
        plcu::require(capacity >= xs.size(), plcu::ErrorKind::Dimension, "output buffer too small for 2^n points");
        std::copy(xs.begin(), xs.end(), out);
    });
}

plcu_status plcu_build_operator_1d(int n, plcu_boundary bc, plcu_matrix **out) {
    return guarded([&] {
        need(out, "out");
        *out = new plcu_matrix{plcu::build_operator_1d(n, to_bc(bc))};
    });
}

plcu_status plcu_build_operator_nd(const int *n, const plcu_boundary *bc, size_t dims, plcu_matrix **out) {
    return guarded([&] {
        need(out, "out");
        *out = new plcu_matrix{plcu::build_operator_nd(to_spec(n, bc, dims))};
    });
}

plcu_status plcu_build_gradient_1d(int n, plcu_matrix **out) {
    return guarded([&] {
        need(out, "out");
        *out = new plcu_matrix{plcu::build_gradient_1d(n)};
    });
}

plcu_status plcu_build_coefficient_diag(const double *coeffs, size_t count, int n, plcu_matrix **out) {
    return guarded([&] {
        need(coeffs, "coefficients");
        need(out, "out");
        plcu::Polynomial p{std::vector<double>(coeffs, coeffs + count)};
        *out = new plcu_matrix{plcu::build_coefficient_diag(p, n)};
    });
}

plcu_status plcu_build_forcing_1d(int n, plcu_boundary bc, const double *f, size_t f_len, const double *boundary,
                                  size_t boundary_len, plcu_matrix **out) {
    return guarded([&] {
        need(f, "f");
        need(out, "out");
        plcu::require(boundary != nullptr || boundary_len == 0, plcu::ErrorKind::InvalidArgument,
                      "boundary data pointer is null");
        std::span<const double> bd = boundary_len ? std::span<const double>(boundary, boundary_len)
                                                  : std::span<const double>();
        plcu::DenseVector v = plcu::build_forcing_1d(n, to_bc(bc), {f, f_len}, bd);
        *out = new plcu_matrix{plcu::DenseMatrix(v.size(), 1, std::move(v))};
    });
}

plcu_status plcu_solve(const plcu_matrix *a, const double *rhs, size_t len, plcu_matrix **out) {
    return guarded([&] {
        need(a, "matrix");
        need(rhs, "rhs");
        need(out, "out");
        plcu::DenseVector x = plcu::solve_reference(a->m, {rhs, len});
        *out = new plcu_matrix{plcu::DenseMatrix(x.size(), 1, std::move(x))};
    });
}

plcu_status plcu_convergence(plcu_boundary bc, plcu_scalar_fn f, plcu_scalar_fn u, plcu_scalar_fn du, void *user,
                             const int *ns, size_t count, char **json) {
    return guarded([&] {
        need(reinterpret_cast<const void *>(f), "f");
        need(reinterpret_cast<const void *>(u), "u");
        need(ns, "grid sizes");
        need(json, "out");
        plcu::BoundaryKind b = to_bc(bc);
        plcu::require(b.tag != plcu::Boundary::NeumannRobin || du != nullptr, plcu::ErrorKind::InvalidArgument,
                      "Robin data needs the derivative du");
        auto wrap = [user](plcu_scalar_fn fn) {
            return [fn, user](double x) { return fn == nullptr ? 0.0 : fn(x, user); };
        };
        plcu::ConvergenceResult r = plcu::convergence_order(b, wrap(f), wrap(u), wrap(du), {ns, count});
        nlohmann::json j;
        j["boundary"] = plcu::to_string(b.tag);
        j["n"] = r.n;
        j["h"] = r.h;
        j["error"] = r.error;
        j["order"] = r.order;
        *json = dup_string(j.dump());
    });
}

void plcu_matrix_free(plcu_matrix *m) {
    delete m;
}

size_t plcu_matrix_rows(const plcu_matrix *m) {
    return m == nullptr ? 0 : m->m.rows();
}

size_t plcu_matrix_cols(const plcu_matrix *m) {
    return m == nullptr ? 0 : m->m.cols();
}

const double *plcu_matrix_data(const plcu_matrix *m) {
    return m == nullptr ? nullptr : m->m.data().data();
}

plcu_status plcu_matrix_to_json(const plcu_matrix *m, char **json) {
    return guarded([&] {
        need(m, "matrix");
        need(json, "out");
        *json = dup_string(m->m.cols() == 1 ? plcu::to_json(m->m.data()) : plcu::to_json(m->m));
    });
}

plcu_status plcu_matrix_to_csv(const plcu_matrix *m, char **csv) {
    return guarded([&] {
        need(m, "matrix");
        need(csv, "out");
        *csv = dup_string(plcu::to_csv(m->m));
    });
}

plcu_status plcu_matrix_from_json(const char *json, plcu_matrix **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new plcu_matrix{plcu::matrix_from_json(json)};
    });
}

plcu_status plcu_matrix_max_abs_diff(const plcu_matrix *a, const plcu_matrix *b, double *out) {
    return guarded([&] {
        need(a, "a");
        need(b, "b");
        need(out, "out");
        *out = plcu::max_abs_diff(a->m, b->m);
    });
}

plcu_status plcu_decomp_kind_parse(const char *name, plcu_decomp_kind *out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        static const std::pair<const char *, plcu_decomp_kind> table[] = {
            {"periodic", PLCU_DECOMP_PERIODIC},
            {"dirichlet", PLCU_DECOMP_DIRICHLET},
            {"robin", PLCU_DECOMP_ROBIN},
            {"neumann", PLCU_DECOMP_ROBIN},
            {"neumann-robin", PLCU_DECOMP_ROBIN},
            {"nd", PLCU_DECOMP_ND},
            {"first-order", PLCU_DECOMP_FIRST_ORDER_CONST},
            {"first-order-constant", PLCU_DECOMP_FIRST_ORDER_CONST},
            {"first-order-poly", PLCU_DECOMP_FIRST_ORDER_POLY},
            {"first-order-polynomial", PLCU_DECOMP_FIRST_ORDER_POLY},
            {"kharazi", PLCU_DECOMP_KHARAZI},
            {"poly", PLCU_DECOMP_POLY_Z},
            {"polynomial-z", PLCU_DECOMP_POLY_Z},
            {"cubic", PLCU_DECOMP_CUBIC},
            {"tau", PLCU_DECOMP_TAU},
        };
        for (const auto &[key, kind] : table) {
            if (std::strcmp(name, key) == 0) {
                *out = kind;
                return;
            }
        }
        plcu::fail(plcu::ErrorKind::InvalidArgument, std::string("unknown decomposition '") + name + "'");
    });
}

plcu_status plcu_decompose(const plcu_decomp_request *req, plcu_lcu **out) {
    return guarded([&] {
        need(req, "request");
        need(out, "out");
        *out = new plcu_lcu{decompose(*req)};
    });
}

plcu_status plcu_decomp_target(const plcu_decomp_request *req, plcu_matrix **out) {
    return guarded([&] {
        need(req, "request");
        need(out, "out");
        *out = new plcu_matrix{target(*req)};
    });
}

void plcu_lcu_free(plcu_lcu *l) {
    delete l;
}

int plcu_lcu_width(const plcu_lcu *l) {
    return l == nullptr ? 0 : l->dec.width;
}

size_t plcu_lcu_term_count(const plcu_lcu *l) {
    return l == nullptr ? 0 : l->dec.terms.size();
}

plcu_status plcu_lcu_coefficient(const plcu_lcu *l, size_t index, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = term_at(l, index).coeff;
    });
}

plcu_status plcu_lcu_matrix(const plcu_lcu *l, plcu_matrix **out) {
    return guarded([&] {
        need(l, "decomposition");
        need(out, "out");
        *out = new plcu_matrix{plcu::lcu_matrix(l->dec)};
    });
}

plcu_status plcu_lcu_term_matrix(const plcu_lcu *l, size_t index, plcu_matrix **out) {
    return guarded([&] {
        need(out, "out");
        *out = new plcu_matrix{plcu::term_matrix(term_at(l, index).expr)};
    });
}

plcu_status plcu_lcu_verify(const plcu_lcu *l, const plcu_matrix *target, double *deviation) {
    return guarded([&] {
        need(l, "decomposition");
        need(target, "target");
        need(deviation, "out");
        *deviation = plcu::verify_lcu(l->dec, target->m);
    });
}

plcu_status plcu_lcu_to_json(const plcu_lcu *l, char **json) {
    return guarded([&] {
        need(l, "decomposition");
        need(json, "out");
        *json = dup_string(plcu::to_json(l->dec));
    });
}

plcu_status plcu_lcu_from_json(const char *json, plcu_lcu **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new plcu_lcu{plcu::lcu_from_json(json)};
    });
}

plcu_status plcu_synth_term(const plcu_lcu *l, size_t index, int ancilla, plcu_circuit **out) {
    return guarded([&] {
        need(out, "out");
        *out = new plcu_circuit{plcu::synth_expr(term_at(l, index).expr, ancilla != 0)};
    });
}

plcu_status plcu_synth_controlled_term(const plcu_lcu *l, size_t index, plcu_circuit **out) {
    return guarded([&] {
        need(out, "out");
        *out = new plcu_circuit{plcu::controlled_expr(term_at(l, index).expr)};
    });
}

void plcu_circuit_free(plcu_circuit *c) {
    delete c;
}

int plcu_circuit_width(const plcu_circuit *c) {
    return c == nullptr ? 0 : c->c.width;
}

int plcu_circuit_phase(const plcu_circuit *c) {
    return c == nullptr ? 0 : c->c.phase;
}

plcu_status plcu_circuit_counts(const plcu_circuit *c, plcu_gate_count *out) {
    return guarded([&] {
        need(c, "circuit");
        need(out, "out");
        plcu::GateCount gc = plcu::count_resources(c->c);
        *out = plcu_gate_count{gc.x,
                               gc.z,
                               gc.h,
                               gc.cnot,
                               gc.toffoli,
                               gc.mcx(),
                               gc.z_outside_mcz,
                               gc.depth,
                               gc.expanded_depth.value_or(std::numeric_limits<size_t>::max()),
                               gc.ancilla};
    });
}

plcu_status plcu_circuit_export(const plcu_circuit *c, const char *format, char **out) {
    return guarded([&] {
        need(c, "circuit");
        need(format, "format");
        need(out, "out");
        *out = dup_string(plcu::export_circuit(c->c, format));
    });
}

plcu_status plcu_circuit_import(const char *text, const char *format, plcu_circuit **out) {
    return guarded([&] {
        need(text, "text");
        need(format, "format");
        need(out, "out");
        *out = new plcu_circuit{plcu::import_circuit(text, format)};
    });
}

plcu_status plcu_circuit_matrix(const plcu_circuit *c, plcu_matrix **out) {
    return guarded([&] {
        need(c, "circuit");
        need(out, "out");
        plcu::DenseMatrix m = plcu::circuit_matrix(c->c);
        m *= static_cast<double>(c->c.phase);
        *out = new plcu_matrix{std::move(m)};
    });
}

plcu_status plcu_resource_csv_header(char **out) {
    return guarded([&] {
        need(out, "out");
        *out = dup_string(plcu::resource_csv_header());
    });
}

plcu_status plcu_resource_csv_rows(const char *name, int n, const plcu_lcu *l, int ancilla, char **out) {
    return guarded([&] {
        need(name, "name");
        need(l, "decomposition");
        need(out, "out");
        *out = dup_string(plcu::resource_csv_rows(name, n, l->dec, ancilla != 0));
    });
}

plcu_status plcu_fit_linear(const double *x, const double *y, size_t count, plcu_linear_fit *out) {
    return guarded([&] {
        need(x, "x");
        need(y, "y");
        need(out, "out");
        plcu::LinearFit f = plcu::fit_linear({x, count}, {y, count});
        *out = plcu_linear_fit{f.slope, f.intercept, f.rel_residual, f.max_rel_residual};
    });
}

plcu_status plcu_simulate_basis(const plcu_circuit *c, uint64_t input, char **json) {
    return guarded([&] {
        need(c, "circuit");
        need(json, "out");
        plcu::StateVector s = plcu::run(c->c, plcu::StateVector::basis(c->c.width, input));
        *json = dup_string(plcu::to_json(s));
    });
}

void plcu_vqls_config_default(plcu_vqls_config *cfg) {
    if (cfg == nullptr) {
        return;
    }
    plcu::VqlsConfig d;
    *cfg = plcu_vqls_config{d.n,  d.layers,         d.shots ? 1 : 0, d.shot_count, d.seed, PLCU_OPT_DEFAULT,
                            d.max_iterations, d.threshold, d.init_scale};
}

plcu_status plcu_vqls_run(const plcu_vqls_config *cfg, plcu_vqls_summary *summary, char **json) {
    return guarded([&] {
        need(cfg, "config");
        plcu::VqlsConfig c;
        c.n = cfg->n;
        c.layers = cfg->layers;
        c.shots = cfg->shots != 0;
        c.shot_count = cfg->shot_count;
        c.seed = cfg->seed;
        switch (cfg->optimizer) {
            case PLCU_OPT_DEFAULT:
                break;
            case PLCU_OPT_BFGS:
                c.optimizer = plcu::Optimizer::Bfgs;
                break;
            case PLCU_OPT_NELDER_MEAD:
                c.optimizer = plcu::Optimizer::NelderMead;
                break;
            default:
                plcu::fail(plcu::ErrorKind::InvalidArgument, "unknown optimizer");
        }
        c.max_iterations = cfg->max_iterations;
        c.threshold = cfg->threshold;
        c.init_scale = cfg->init_scale;
        plcu::VqlsReport r = plcu::optimize(c);
        if (summary != nullptr) {
            *summary = plcu_vqls_summary{r.cost, r.fidelity, r.iterations, r.converged ? 1 : 0, r.wall_time};
        }
        if (json != nullptr) {
            *json = dup_string(plcu::to_json(r));
        }
    });
}

void plcu_cost_model_default(plcu_cost_model *m) {
    if (m == nullptr) {
        return;
    }
    plcu::CostModel d;
    *m = plcu_cost_model{d.x, d.h, d.cnot, d.t3};
}

plcu_status plcu_cost_compare(int n, const plcu_cost_model *m, plcu_cost_comparison *out) {
    return guarded([&] {
        need(m, "cost model");
        need(out, "out");
        plcu::CostComparison c = plcu::cost_compare(n, plcu::CostModel{m->x, m->h, m->cnot, m->t3});
        *out = plcu_cost_comparison{c.n,  c.controlled_shift, c.mcz_n1,   c.mcz_n,          c.g1,
                                    c.g2, c.excess,           c.aggregate, c.in_regime ? 1 : 0};
    });
}

plcu_status plcu_cost_comparison_to_json(const plcu_cost_comparison *c, char **json) {
    return guarded([&] {
        need(c, "comparison");
        need(json, "out");
        plcu::CostComparison cc{c->n,  c->controlled_shift, c->mcz_n_plus_1, c->mcz_n,          c->g1,
                                c->g2, c->excess,           c->aggregate,    c->in_regime != 0};
        *json = dup_string(plcu::to_json(cc));
    });
}

}  // extern "C"
