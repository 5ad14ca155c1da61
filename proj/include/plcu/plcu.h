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


/* C interface to the plcu library. Objects are opaque handles released with
 * the matching *_free function. Every call returns a plcu_status; on failure
 * plcu_last_error() describes the problem for the calling thread. Strings
 * returned through char ** are owned by the caller and released with
 * plcu_string_free. */

#ifndef PLCU_PLCU_H
#define PLCU_PLCU_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define PLCU_API __attribute__((visibility("default")))
#else
#define PLCU_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plcu_status {
    PLCU_OK = 0,
    PLCU_ERR_INVALID_ARGUMENT = 1,
    PLCU_ERR_DIMENSION = 2,
    PLCU_ERR_SINGULAR = 3,
    PLCU_ERR_ANCILLA_LEAK = 4,
    PLCU_ERR_PARSE = 5,
    PLCU_ERR_WIDTH_MISMATCH = 6,
    PLCU_ERR_INTERNAL = 7
} plcu_status;

typedef struct plcu_matrix plcu_matrix;
typedef struct plcu_lcu plcu_lcu;
typedef struct plcu_circuit plcu_circuit;

PLCU_API const char *plcu_version(void);
PLCU_API const char *plcu_last_error(void);
PLCU_API const char *plcu_status_name(plcu_status status);
PLCU_API void plcu_string_free(char *s);

/* ---- grid ---------------------------------------------------------------- */

typedef enum plcu_bc_kind { PLCU_BC_DIRICHLET = 1, PLCU_BC_PERIODIC = 2, PLCU_BC_ROBIN = 3 } plcu_bc_kind;

/* a0/a1 are the Robin coefficients of u' + a u = b; ignored otherwise. */
typedef struct plcu_boundary {
    plcu_bc_kind kind;
    double a0;
    double a1;
} plcu_boundary;

PLCU_API plcu_status plcu_boundary_parse(const char *name, plcu_bc_kind *out);

PLCU_API plcu_status plcu_grid_spacing(plcu_bc_kind kind, int n, double *out);
/* Writes 2^n grid coordinates into out (capacity must be at least 2^n). */
PLCU_API plcu_status plcu_grid_points(plcu_bc_kind kind, int n, double *out, size_t capacity);

/* Normalized A = h^2 L for one dimension. */
PLCU_API plcu_status plcu_build_operator_1d(int n, plcu_boundary bc, plcu_matrix **out);
/* Kronecker sum of h^-2 scaled operators; dims == 1 returns L. */
PLCU_API plcu_status plcu_build_operator_nd(const int *n, const plcu_boundary *bc, size_t dims, plcu_matrix **out);
PLCU_API plcu_status plcu_build_gradient_1d(int n, plcu_matrix **out);
/* diag(p(x_i)) on the Dirichlet grid; coeffs are a0 + a1 x + ... */
PLCU_API plcu_status plcu_build_coefficient_diag(const double *coeffs, size_t count, int n, plcu_matrix **out);
/* h^2 (f + B) as a 2^n x 1 matrix. boundary holds {a, b}, {b0, b1} or nothing. */
PLCU_API plcu_status plcu_build_forcing_1d(int n, plcu_boundary bc, const double *f, size_t f_len, const double *boundary,
                                  size_t boundary_len, plcu_matrix **out);
/* Solution of a x = rhs as a column matrix. */
PLCU_API plcu_status plcu_solve(const plcu_matrix *a, const double *rhs, size_t len, plcu_matrix **out);

typedef double (*plcu_scalar_fn)(double x, void *user);

/* Solves u'' = f for each n and returns {n, h, error, order} as JSON. du is
 * only used for Robin data and may be NULL otherwise. */
PLCU_API plcu_status plcu_convergence(plcu_boundary bc, plcu_scalar_fn f, plcu_scalar_fn u, plcu_scalar_fn du, void *user,
                             const int *ns, size_t count, char **json);

/* ---- matrices ------------------------------------------------------------ */

PLCU_API void plcu_matrix_free(plcu_matrix *m);
PLCU_API size_t plcu_matrix_rows(const plcu_matrix *m);
PLCU_API size_t plcu_matrix_cols(const plcu_matrix *m);
/* Row-major storage valid until the matrix is freed. */
PLCU_API const double *plcu_matrix_data(const plcu_matrix *m);
PLCU_API plcu_status plcu_matrix_to_json(const plcu_matrix *m, char **json);
PLCU_API plcu_status plcu_matrix_to_csv(const plcu_matrix *m, char **csv);
PLCU_API plcu_status plcu_matrix_from_json(const char *json, plcu_matrix **out);
PLCU_API plcu_status plcu_matrix_max_abs_diff(const plcu_matrix *a, const plcu_matrix *b, double *out);

/* ---- lcu ----------------------------------------------------------------- */

typedef enum plcu_decomp_kind {
    PLCU_DECOMP_PERIODIC = 0,
    PLCU_DECOMP_DIRICHLET = 1,
    PLCU_DECOMP_ROBIN = 2,
    PLCU_DECOMP_ND = 3,
    PLCU_DECOMP_FIRST_ORDER_CONST = 4,
    PLCU_DECOMP_FIRST_ORDER_POLY = 5,
    PLCU_DECOMP_KHARAZI = 6,
    PLCU_DECOMP_POLY_Z = 7,
    PLCU_DECOMP_CUBIC = 8,
    PLCU_DECOMP_TAU = 9
} plcu_decomp_kind;

/* Inputs of a decomposition. Fields that do not apply to `kind` are ignored:
 *   n                    1-D kinds and the tau product (as its length)
 *   a0, a1               Robin coefficients
 *   dims, nd_n, nd_bc    nd grid
 *   p                    constant first-order coefficient
 *   poly, poly_len       polynomial coefficients (first-order poly, poly-z,
 *                        cubic which needs exactly 4)
 *   taus                 n entries in {0, 1, 2, 3} */
typedef struct plcu_decomp_request {
    plcu_decomp_kind kind;
    int n;
    double a0;
    double a1;
    size_t dims;
    const int *nd_n;
    const plcu_boundary *nd_bc;
    double p;
    const double *poly;
    size_t poly_len;
    const int *taus;
} plcu_decomp_request;

PLCU_API plcu_status plcu_decomp_kind_parse(const char *name, plcu_decomp_kind *out);
PLCU_API plcu_status plcu_decompose(const plcu_decomp_request *req, plcu_lcu **out);
/* The operator a request is expected to reproduce. */
PLCU_API plcu_status plcu_decomp_target(const plcu_decomp_request *req, plcu_matrix **out);

PLCU_API void plcu_lcu_free(plcu_lcu *l);
PLCU_API int plcu_lcu_width(const plcu_lcu *l);
PLCU_API size_t plcu_lcu_term_count(const plcu_lcu *l);
PLCU_API plcu_status plcu_lcu_coefficient(const plcu_lcu *l, size_t index, double *out);
PLCU_API plcu_status plcu_lcu_matrix(const plcu_lcu *l, plcu_matrix **out);
PLCU_API plcu_status plcu_lcu_term_matrix(const plcu_lcu *l, size_t index, plcu_matrix **out);
PLCU_API plcu_status plcu_lcu_verify(const plcu_lcu *l, const plcu_matrix *target, double *deviation);
PLCU_API plcu_status plcu_lcu_to_json(const plcu_lcu *l, char **json);
PLCU_API plcu_status plcu_lcu_from_json(const char *json, plcu_lcu **out);

/* ---- circuits ------------------------------------------------------------ */

typedef struct plcu_gate_count {
    size_t x;
    size_t z;
    size_t h;
    size_t cnot;
    size_t toffoli;
    size_t mcx;
    size_t z_outside_mcz;
    size_t depth;
    /* SIZE_MAX when an MCX primitive has no borrowed qubit to expand with. */
    size_t expanded_depth;
    int ancilla;
} plcu_gate_count;

/* Circuit for term `index`; with ancilla the circuit carries one extra qubit. */
PLCU_API plcu_status plcu_synth_term(const plcu_lcu *l, size_t index, int ancilla, plcu_circuit **out);
/* Controlled term circuit: control on qubit 0, data 1..n, helper n + 1. */
PLCU_API plcu_status plcu_synth_controlled_term(const plcu_lcu *l, size_t index, plcu_circuit **out);

PLCU_API void plcu_circuit_free(plcu_circuit *c);
PLCU_API int plcu_circuit_width(const plcu_circuit *c);
PLCU_API int plcu_circuit_phase(const plcu_circuit *c);
PLCU_API plcu_status plcu_circuit_counts(const plcu_circuit *c, plcu_gate_count *out);
/* format is "text" or "json". */
PLCU_API plcu_status plcu_circuit_export(const plcu_circuit *c, const char *format, char **out);
PLCU_API plcu_status plcu_circuit_import(const char *text, const char *format, plcu_circuit **out);
/* Realized operator on the data qubits including the circuit phase. Fails
 * with PLCU_ERR_ANCILLA_LEAK when a non-data qubit is not restored. */
PLCU_API plcu_status plcu_circuit_matrix(const plcu_circuit *c, plcu_matrix **out);

/* CSV header with a trailing newline. */
PLCU_API plcu_status plcu_resource_csv_header(char **out);
PLCU_API plcu_status plcu_resource_csv_rows(const char *name, int n, const plcu_lcu *l, int ancilla, char **out);

typedef struct plcu_linear_fit {
    double slope;
    double intercept;
    /* ||y - fit||_2 / ||y||_2 */
    double rel_residual;
    /* largest pointwise |y_i - fit_i| / |y_i| */
    double max_rel_residual;
} plcu_linear_fit;

PLCU_API plcu_status plcu_fit_linear(const double *x, const double *y, size_t count, plcu_linear_fit *out);

/* ---- simulation ---------------------------------------------------------- */

/* Runs c on the basis state `input` and returns {width, real, imag} JSON. */
PLCU_API plcu_status plcu_simulate_basis(const plcu_circuit *c, uint64_t input, char **json);

/* ---- vqls ---------------------------------------------------------------- */

typedef enum plcu_optimizer { PLCU_OPT_DEFAULT = 0, PLCU_OPT_BFGS = 1, PLCU_OPT_NELDER_MEAD = 2 } plcu_optimizer;

typedef struct plcu_vqls_config {
    int n;
    /* Negative selects n layers. */
    int layers;
    int shots;
    uint64_t shot_count;
    uint64_t seed;
    plcu_optimizer optimizer;
    int max_iterations;
    double threshold;
    double init_scale;
} plcu_vqls_config;

PLCU_API void plcu_vqls_config_default(plcu_vqls_config *cfg);

typedef struct plcu_vqls_summary {
    double cost;
    double fidelity;
    int iterations;
    int converged;
    double wall_time;
} plcu_vqls_summary;

/* Runs the Dirichlet sine demo. json receives the full report when non-NULL. */
PLCU_API plcu_status plcu_vqls_run(const plcu_vqls_config *cfg, plcu_vqls_summary *summary, char **json);

/* ---- cost comparison ----------------------------------------------------- */

typedef struct plcu_cost_model {
    double x;
    double h;
    double cnot;
    double t3;
} plcu_cost_model;

typedef struct plcu_cost_comparison {
    int n;
    double controlled_shift;
    double mcz_n_plus_1;
    double mcz_n;
    double g1;
    double g2;
    double excess;
    double aggregate;
    int in_regime;
} plcu_cost_comparison;

PLCU_API void plcu_cost_model_default(plcu_cost_model *m);
PLCU_API plcu_status plcu_cost_compare(int n, const plcu_cost_model *m, plcu_cost_comparison *out);
PLCU_API plcu_status plcu_cost_comparison_to_json(const plcu_cost_comparison *c, char **json);

#ifdef __cplusplus
}
#endif

#endif
