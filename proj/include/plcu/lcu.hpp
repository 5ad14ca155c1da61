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

#ifndef PLCU_LCU_HPP
#define PLCU_LCU_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "plcu/dense.hpp"
#include "plcu/grid.hpp"

namespace plcu {

// Qubit slot 0 is the leftmost tensor factor and the most significant bit
// of a basis index.

enum class FactorKind {
    Identity,
    XString,
    ZAt,
    XAt,
    HAt,
    Increment,
    Decrement,
    CMinus,
    MultiZ,
    BBlock,
};

std::string to_string(FactorKind kind);
FactorKind factor_kind_from_string(const std::string &name);

/// A primitive unitary acting on qubits [first, first + count) and as the
/// identity elsewhere. Single-qubit kinds (ZAt, XAt, HAt) have count 1.
struct Factor {
    FactorKind kind = FactorKind::Identity;
    int first = 0;
    int count = 0;

    static Factor identity(int first, int count) {
        return {FactorKind::Identity, first, count};
    }
    static Factor x_string(int first, int count) {
        return {FactorKind::XString, first, count};
    }
    static Factor z_at(int slot) {
        return {FactorKind::ZAt, slot, 1};
    }
    static Factor x_at(int slot) {
        return {FactorKind::XAt, slot, 1};
    }
    static Factor h_at(int slot) {
        return {FactorKind::HAt, slot, 1};
    }
    static Factor increment(int first, int count) {
        return {FactorKind::Increment, first, count};
    }
    static Factor decrement(int first, int count) {
        return {FactorKind::Decrement, first, count};
    }
    static Factor cminus(int first, int count) {
        return {FactorKind::CMinus, first, count};
    }
    static Factor multi_z(int first, int count) {
        return {FactorKind::MultiZ, first, count};
    }
    static Factor b_block(int first, int count) {
        return {FactorKind::BBlock, first, count};
    }

    bool operator==(const Factor &) const = default;
};

/// Ordered product of factors. factors.front() is the leftmost matrix in the
/// product, so it acts last on a state.
struct UnitaryExpr {
    int width = 0;
    std::vector<Factor> factors;

    /// Canonical string used to merge like terms.
    std::string key() const;
    void validate() const;
};

struct LcuTerm {
    double coeff = 0.0;
    UnitaryExpr expr;
};

struct LcuDecomposition {
    int width = 0;
    std::string provenance;
    std::vector<LcuTerm> terms;
    std::vector<std::string> notes;

    std::vector<double> coefficients() const;
};

/// Applies expr to a real vector of length 2^width in place.
void apply_expr(const UnitaryExpr &expr, std::span<double> v);

/// Dense realization of expr; width must be at most 12.
DenseMatrix term_matrix(const UnitaryExpr &expr);

/// Sum of coefficient-weighted term matrices.
DenseMatrix lcu_matrix(const LcuDecomposition &dec);

/// Max-abs deviation between the LCU sum and target.
double verify_lcu(const LcuDecomposition &dec, const DenseMatrix &target);

LcuDecomposition decompose_periodic(int n);
LcuDecomposition decompose_dirichlet(int n);
LcuDecomposition decompose_neumann_robin(int n, double a0, double a1);
LcuDecomposition decompose_nd(const GridSpec &spec);
LcuDecomposition decompose_first_order_const(int n, double p);
LcuDecomposition decompose_first_order_poly(int n, const Polynomial &p);
LcuDecomposition decompose_kharazi(int n);

/// Index sets are bitmasks over the Z positions 1..n: bit (j-1) stands for
/// Z_j, which acts on slot j-1.
using IndexSet = std::uint32_t;

/// c_alpha(k) in J^k = sum_alpha c_alpha(k) (prod_{l in alpha} c_l) Z_alpha.
std::map<IndexSet, double> poly_power_coeffs(int k, int n);

/// c_j = -(2^n / (2^n + 1)) 2^-j.
double z_encoding_coeff(int j, int n);

/// LCU of diag(p(x_i)) in products of Z.
LcuDecomposition poly_z_expansion(const Polynomial &p, int n);

/// Closed-form cubic coefficients A0, A_i, A_ij, A_ijl.
LcuDecomposition cubic_closed_form(double a0, double a1, double a2, double a3, int n);

/// Four-term LCU of tau_{t_1} (x) ... (x) tau_{t_n} with t_i in {0, 1, 2, 3}.
LcuDecomposition tau_product_expansion(std::span<const int> taus);

/// 2x2 single-entry matrix tau_t.
DenseMatrix tau_matrix(int t);

/// Drops |c| < 1e-14 and records a note for each drop.
void drop_zero_terms(LcuDecomposition &dec);

/// Merges terms with equal canonical keys, keeping first-seen order.
void merge_like_terms(LcuDecomposition &dec);

std::string to_json(const LcuDecomposition &dec);
LcuDecomposition lcu_from_json(const std::string &text);

}  // namespace plcu

#endif
