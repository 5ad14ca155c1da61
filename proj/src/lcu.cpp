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

#include "plcu/lcu.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "plcu/error.hpp"

namespace plcu {

namespace {

constexpr int kMaxDenseWidth = 12;
constexpr double kDropThreshold = 1e-14;

struct KindName {
    FactorKind kind;
    const char *name;
};

constexpr KindName kKindNames[] = {
    {FactorKind::Identity, "identity"}, {FactorKind::XString, "x_string"},   {FactorKind::ZAt, "z_at"},
    {FactorKind::XAt, "x_at"},          {FactorKind::HAt, "h_at"},           {FactorKind::Increment, "increment"},
    {FactorKind::Decrement, "decrement"}, {FactorKind::CMinus, "c_minus"}, {FactorKind::MultiZ, "multi_z"},
    {FactorKind::BBlock, "b_block"},
};

bool single_qubit(FactorKind kind) {
    return kind == FactorKind::ZAt || kind == FactorKind::XAt || kind == FactorKind::HAt;
}

void apply_factor(const Factor &f, int width, std::span<double> v, std::vector<double> &scratch) {
    const std::size_t dim = v.size();
    const int shift = width - f.first - f.count;
    const std::uint64_t m = (std::uint64_t{1} << f.count) - 1;
    const std::uint64_t span_mask = m << shift;

    if (f.kind == FactorKind::Identity) {
        return;
    }
    if (f.kind == FactorKind::HAt) {
        const double r = 1.0 / std::sqrt(2.0);
        const std::uint64_t bit = std::uint64_t{1} << shift;
        for (std::size_t i = 0; i < dim; i++) {
            if (i & bit) {
                continue;
            }
            double a = v[i];
            double b = v[i | bit];
            v[i] = r * (a + b);
            v[i | bit] = r * (a - b);
        }
        return;
    }

    scratch.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; i++) {
        if (v[i] == 0.0) {
            continue;
        }
        std::uint64_t local = (i & span_mask) >> shift;
        std::uint64_t out = local;
        double sign = 1.0;
        switch (f.kind) {
            case FactorKind::XString:
            case FactorKind::XAt:
                out = local ^ m;
                break;
            case FactorKind::ZAt:
                sign = (local & 1) ? -1.0 : 1.0;
                break;
            case FactorKind::Increment:
                out = (local + 1) & m;
                break;
            case FactorKind::Decrement:
                out = (local + m) & m;
                break;
            case FactorKind::CMinus:
                out = local ^ m;
                sign = (local == 0 || local == m) ? 1.0 : -1.0;
                break;
            case FactorKind::MultiZ:
                sign = local == m ? -1.0 : 1.0;
                break;
            case FactorKind::BBlock:
                if (local >> (f.count - 1)) {
                    out = local ^ (m >> 1);
                }
                break;
            default:
                break;
        }
        std::size_t j = (i & ~span_mask) | (out << shift);
        scratch[j] += sign * v[i];
    }
    std::copy(scratch.begin(), scratch.end(), v.begin());
}

LcuTerm term(double c, int width, std::vector<Factor> factors) {
    return {c, UnitaryExpr{width, std::move(factors)}};
}

std::vector<Factor> identity_only(int n) {
    return {Factor::identity(0, n)};
}

/// ZAt factors for every slot in the bitmask, slot order.
std::vector<Factor> z_string(IndexSet alpha) {
    std::vector<Factor> out;
    for (int j = 0; alpha >> j; j++) {
        if ((alpha >> j) & 1u) {
            out.push_back(Factor::z_at(j));
        }
    }
    return out;
}

std::vector<Factor> concat(std::vector<Factor> a, const std::vector<Factor> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void check_n(int n) {
    require(n >= 2, ErrorKind::Dimension, "decomposition needs n >= 2");
    require(n <= 30, ErrorKind::Dimension, "qubit count too large");
}

int popcount(IndexSet a) {
    return __builtin_popcount(a);
}

/// levels[k] holds c_alpha(k) for all alpha with nonzero value.
std::vector<std::map<IndexSet, double>> power_levels(int k, int n) {
    require(k >= 0, ErrorKind::InvalidArgument, "polynomial power must be non-negative");
    require(n >= 1 && n <= 30, ErrorKind::Dimension, "Z-encoding needs 1 <= n <= 30");
    std::vector<double> c2(n);
    for (int l = 0; l < n; l++) {
        double c = z_encoding_coeff(l + 1, n);
        c2[l] = c * c;
    }
    std::vector<std::map<IndexSet, double>> levels(k + 1);
    levels[0][0] = 1.0;
    for (int p = 0; p < k; p++) {
        const auto &prev = levels[p];
        auto at = [&](IndexSet a) {
            auto it = prev.find(a);
            return it == prev.end() ? 0.0 : it->second;
        };
        std::map<IndexSet, double> next;
        // Every alpha reachable from a support set of J^p by toggling one index.
        std::vector<IndexSet> candidates;
        for (const auto &[beta, _] : prev) {
            candidates.push_back(beta);
            for (int l = 0; l < n; l++) {
                candidates.push_back(beta ^ (IndexSet{1} << l));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (IndexSet alpha : candidates) {
            int m = popcount(alpha);
            double value = 0.0;
            if (m > p + 1) {
                continue;
            }
            if (m == p + 1) {
                value = std::tgamma(p + 2.0);
            } else {
                value = at(alpha);
                for (int l = 0; l < n; l++) {
                    IndexSet bit = IndexSet{1} << l;
                    if (alpha & bit) {
                        value += at(alpha & ~bit);
                    } else {
                        value += c2[l] * at(alpha | bit);
                    }
                }
            }
            if (value != 0.0) {
                next[alpha] = value;
            }
        }
        levels[p + 1] = std::move(next);
    }
    return levels;
}

double z_product(IndexSet alpha, int n) {
    double prod = 1.0;
    for (int l = 0; l < n; l++) {
        if ((alpha >> l) & 1u) {
            prod *= z_encoding_coeff(l + 1, n);
        }
    }
    return prod;
}

/// Index sets ordered by size, then lexicographically by slot.
bool alpha_less(IndexSet a, IndexSet b) {
    if (popcount(a) != popcount(b)) {
        return popcount(a) < popcount(b);
    }
    auto slots = [](IndexSet s) {
        std::vector<int> out;
        for (int j = 0; s >> j; j++) {
            if ((s >> j) & 1u) {
                out.push_back(j);
            }
        }
        return out;
    };
    return slots(a) < slots(b);
}

std::vector<Factor> z_term(IndexSet alpha, int n) {
    return alpha == 0 ? identity_only(n) : z_string(alpha);
}

}  // namespace

std::string to_string(FactorKind kind) {
    for (const auto &kn : kKindNames) {
        if (kn.kind == kind) {
            return kn.name;
        }
    }
    return "unknown";
}

FactorKind factor_kind_from_string(const std::string &name) {
    for (const auto &kn : kKindNames) {
        if (name == kn.name) {
            return kn.kind;
        }
    }
    fail(ErrorKind::Parse, "unknown factor kind '" + name + "'");
}

std::string UnitaryExpr::key() const {
    std::ostringstream out;
    out << width << ':';
    for (const auto &f : factors) {
        if (f.kind == FactorKind::Identity) {
            continue;
        }
        out << to_string(f.kind) << '[' << f.first << ',' << f.count << ']';
    }
    return out.str();
}

void UnitaryExpr::validate() const {
    require(width >= 1, ErrorKind::Dimension, "expression width must be positive");
    for (const auto &f : factors) {
        require(f.first >= 0 && f.count >= 1 && f.first + f.count <= width, ErrorKind::Dimension,
                "factor " + to_string(f.kind) + " span out of range");
        if (single_qubit(f.kind)) {
            require(f.count == 1, ErrorKind::Dimension, "single-qubit factor must span one qubit");
        }
    }
}

std::vector<double> LcuDecomposition::coefficients() const {
    std::vector<double> out;
    out.reserve(terms.size());
    for (const auto &t : terms) {
        out.push_back(t.coeff);
    }
    return out;
}

void apply_expr(const UnitaryExpr &expr, std::span<double> v) {
    require(v.size() == (std::size_t{1} << expr.width), ErrorKind::Dimension, "vector length must be 2^width");
    std::vector<double> scratch;
    for (auto it = expr.factors.rbegin(); it != expr.factors.rend(); ++it) {
        apply_factor(*it, expr.width, v, scratch);
    }
}

DenseMatrix term_matrix(const UnitaryExpr &expr) {
    expr.validate();
    require(expr.width <= kMaxDenseWidth, ErrorKind::Dimension, "width too large for dense realization");
    std::size_t dim = std::size_t{1} << expr.width;
    DenseMatrix out(dim, dim);
    std::vector<double> col(dim);
    for (std::size_t j = 0; j < dim; j++) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        apply_expr(expr, col);
        for (std::size_t i = 0; i < dim; i++) {
            out(i, j) = col[i];
        }
    }
    DenseMatrix gram = out.transpose() * out;
    require(max_abs_diff(gram, DenseMatrix::identity(dim)) < 1e-12, ErrorKind::InvalidArgument,
            "term realization is not unitary");
    return out;
}

DenseMatrix lcu_matrix(const LcuDecomposition &dec) {
    require(dec.width <= kMaxDenseWidth, ErrorKind::Dimension, "width too large for dense realization");
    std::size_t dim = std::size_t{1} << dec.width;
    DenseMatrix out(dim, dim);
    std::vector<double> col(dim);
    for (const auto &t : dec.terms) {
        require(t.expr.width == dec.width, ErrorKind::WidthMismatch, "term width differs from decomposition width");
        t.expr.validate();
        for (std::size_t j = 0; j < dim; j++) {
            std::fill(col.begin(), col.end(), 0.0);
            col[j] = 1.0;
            apply_expr(t.expr, col);
            for (std::size_t i = 0; i < dim; i++) {
                out(i, j) += t.coeff * col[i];
            }
        }
    }
    return out;
}

double verify_lcu(const LcuDecomposition &dec, const DenseMatrix &target) {
    std::size_t dim = std::size_t{1} << dec.width;
    require(target.rows() == dim && target.cols() == dim, ErrorKind::WidthMismatch,
            "target dimension does not match decomposition width");
    return max_abs_diff(lcu_matrix(dec), target);
}

void drop_zero_terms(LcuDecomposition &dec) {
    std::vector<LcuTerm> kept;
    for (auto &t : dec.terms) {
        if (std::abs(t.coeff) < kDropThreshold) {
            dec.notes.push_back("dropped zero-coefficient term " + t.expr.key());
        } else {
            kept.push_back(std::move(t));
        }
    }
    dec.terms = std::move(kept);
}

void merge_like_terms(LcuDecomposition &dec) {
    std::vector<LcuTerm> merged;
    std::unordered_map<std::string, std::size_t> index;
    for (auto &t : dec.terms) {
        std::string k = t.expr.key();
        auto it = index.find(k);
        if (it == index.end()) {
            index.emplace(k, merged.size());
            merged.push_back(std::move(t));
        } else {
            merged[it->second].coeff += t.coeff;
        }
    }
    dec.terms = std::move(merged);
}

LcuDecomposition decompose_periodic(int n) {
    check_n(n);
    LcuDecomposition dec{n, "periodic", {}, {}};
    dec.terms.push_back(term(-2.0, n, identity_only(n)));
    dec.terms.push_back(term(1.0, n, {Factor::increment(0, n)}));
    dec.terms.push_back(term(1.0, n, {Factor::decrement(0, n)}));
    return dec;
}

LcuDecomposition decompose_dirichlet(int n) {
    check_n(n);
    LcuDecomposition dec{n, "dirichlet", {}, {}};
    dec.terms.push_back(term(-2.0, n, identity_only(n)));
    dec.terms.push_back(term(1.0, n, {Factor::increment(0, n)}));
    dec.terms.push_back(term(1.0, n, {Factor::decrement(0, n)}));
    dec.terms.push_back(term(-0.5, n, {Factor::x_string(0, n)}));
    // Realizes -C^-, hence the positive coefficient.
    dec.terms.push_back(term(0.5, n,
                             {Factor::x_at(0), Factor::b_block(0, n), Factor::x_at(0), Factor::multi_z(1, n - 1),
                              Factor::b_block(0, n), Factor::x_at(0)}));
    return dec;
}

LcuDecomposition decompose_neumann_robin(int n, double a0, double a1) {
    check_n(n);
    require(std::isfinite(a0) && std::isfinite(a1), ErrorKind::InvalidArgument, "Robin coefficients must be finite");
    double h = grid_spacing(Boundary::NeumannRobin, n);
    const int last = n - 1;
    LcuDecomposition dec{n, "neumann-robin", {}, {}};
    auto xc = [&](std::vector<Factor> tail) {
        return concat({Factor::x_string(0, n), Factor::cminus(0, n)}, tail);
    };
    dec.terms.push_back(term((-4.0 + (a0 - a1) * h) / 2.0, n, identity_only(n)));
    dec.terms.push_back(term(0.5, n, {Factor::x_at(last)}));
    dec.terms.push_back(term(-0.5, n, {Factor::x_string(0, n)}));
    dec.terms.push_back(term((a0 + a1) * h / 2.0, n, {Factor::z_at(last)}));
    dec.terms.push_back(term(1.0, n, {Factor::increment(0, n)}));
    dec.terms.push_back(term(1.0, n, {Factor::decrement(0, n)}));
    dec.terms.push_back(term(-0.5, n, {Factor::cminus(0, n)}));
    dec.terms.push_back(term((a0 - a1) * h / 2.0, n, xc({})));
    dec.terms.push_back(term((a0 + a1) * h / 2.0, n, xc({Factor::z_at(last)})));
    dec.terms.push_back(term(0.5, n, xc({Factor::x_at(last)})));
    drop_zero_terms(dec);
    return dec;
}

LcuDecomposition decompose_nd(const GridSpec &spec) {
    spec.validate();
    require(spec.dims() >= 2, ErrorKind::InvalidArgument, "multi-dimensional decomposition needs d >= 2");
    int width = spec.total_qubits();
    LcuDecomposition dec{width, "nd-kronecker", {}, {}};
    for (int i = 0; i < spec.dims(); i++) {
        int n = spec.n[i];
        const BoundaryKind &bc = spec.bc[i];
        LcuDecomposition base;
        switch (bc.tag) {
            case Boundary::Dirichlet:
                base = decompose_dirichlet(n);
                break;
            case Boundary::Periodic:
                base = decompose_periodic(n);
                break;
            case Boundary::NeumannRobin:
                base = decompose_neumann_robin(n, bc.a0, bc.a1);
                break;
        }
        double h = grid_spacing(bc.tag, n);
        int offset = spec.slot_offset(i);
        for (auto t : base.terms) {
            for (auto &f : t.expr.factors) {
                f.first += offset;
            }
            t.expr.width = width;
            t.coeff /= h * h;
            dec.terms.push_back(std::move(t));
        }
        for (const auto &note : base.notes) {
            dec.notes.push_back("axis " + std::to_string(i) + ": " + note);
        }
    }
    return dec;
}

LcuDecomposition decompose_first_order_const(int n, double p) {
    check_n(n);
    double h = grid_spacing(Boundary::Dirichlet, n);
    const int last = n - 1;
    LcuDecomposition dec{n, "first-order-constant", {}, {}};
    dec.terms.push_back(term(-2.0, n, identity_only(n)));
    dec.terms.push_back(term((2.0 - p * h) / 2.0, n, {Factor::increment(0, n)}));
    dec.terms.push_back(term((2.0 + p * h) / 2.0, n, {Factor::decrement(0, n)}));
    dec.terms.push_back(term(-0.5, n, {Factor::x_string(0, n)}));
    dec.terms.push_back(term(-0.5, n, {Factor::cminus(0, n)}));
    dec.terms.push_back(term(h * p / 4.0, n, {Factor::z_at(last), Factor::x_string(0, n)}));
    dec.terms.push_back(term(h * p / 4.0, n, {Factor::z_at(last), Factor::cminus(0, n)}));
    drop_zero_terms(dec);
    return dec;
}

double z_encoding_coeff(int j, int n) {
    double big = std::ldexp(1.0, n);
    return -(big / (big + 1.0)) * std::ldexp(1.0, -j);
}

std::map<IndexSet, double> poly_power_coeffs(int k, int n) {
    return power_levels(k, n).back();
}

LcuDecomposition poly_z_expansion(const Polynomial &p, int n) {
    require(n >= 1 && n <= 30, ErrorKind::Dimension, "Z-encoding needs 1 <= n <= 30");
    int k = p.degree();
    LcuDecomposition dec{n, "polynomial-z", {}, {}};
    if (2 * k >= n && k > 0) {
        dec.notes.push_back("degree " + std::to_string(k) + " is outside the k < n/2 regime; expansion is still exact");
    }
    auto levels = power_levels(k, n);
    std::map<IndexSet, double> weight;
    for (int j = 0; j <= k; j++) {
        double aj = j < static_cast<int>(p.a.size()) ? p.a[j] : 0.0;
        if (aj == 0.0) {
            continue;
        }
        for (const auto &[alpha, c] : levels[j]) {
            weight[alpha] += aj * c * std::ldexp(1.0, -j);
        }
    }
    std::vector<IndexSet> order;
    for (const auto &[alpha, _] : weight) {
        order.push_back(alpha);
    }
    std::stable_sort(order.begin(), order.end(), alpha_less);
    for (IndexSet alpha : order) {
        dec.terms.push_back(term(weight[alpha] * z_product(alpha, n), n, z_term(alpha, n)));
    }
    drop_zero_terms(dec);
    return dec;
}

LcuDecomposition cubic_closed_form(double a0, double a1, double a2, double a3, int n) {
    require(n >= 1 && n <= 30, ErrorKind::Dimension, "Z-encoding needs 1 <= n <= 30");
    double big = std::ldexp(1.0, n);
    LcuDecomposition dec{n, "cubic-closed-form", {}, {}};
    double c0_2 = 1.0 + (big - 1.0) / (3.0 * (big + 1.0));
    double c0_3 = 1.0 + (big - 1.0) / (big + 1.0);
    dec.terms.push_back(term(a0 + a1 / 2.0 + a2 / 4.0 * c0_2 + a3 / 8.0 * c0_3, n, identity_only(n)));
    auto c = [&](int j) { return z_encoding_coeff(j, n); };
    for (int i = 1; i <= n; i++) {
        double ci_3 = 2.0 * (2.0 * big + 1.0) / (big + 1.0) -
                      std::ldexp(1.0, 2 * n - 2 * i + 1) / ((big + 1.0) * (big + 1.0));
        double ai = (a1 / 2.0 + a2 / 2.0 + a3 / 8.0 * ci_3) * c(i);
        dec.terms.push_back(term(ai, n, {Factor::z_at(i - 1)}));
    }
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            double aij = (a2 / 2.0 + 3.0 * a3 / 4.0) * c(i) * c(j);
            dec.terms.push_back(term(aij, n, {Factor::z_at(i - 1), Factor::z_at(j - 1)}));
        }
    }
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            for (int l = j + 1; l <= n; l++) {
                double aijl = 3.0 * a3 / 4.0 * c(i) * c(j) * c(l);
                dec.terms.push_back(term(aijl, n, {Factor::z_at(i - 1), Factor::z_at(j - 1), Factor::z_at(l - 1)}));
            }
        }
    }
    drop_zero_terms(dec);
    return dec;
}

LcuDecomposition decompose_first_order_poly(int n, const Polynomial &p) {
    check_n(n);
    double h = grid_spacing(Boundary::Dirichlet, n);
    LcuDecomposition poly = poly_z_expansion(p, n);
    LcuDecomposition dec{n, "first-order-polynomial", {}, poly.notes};
    dec.terms.push_back(term(-2.0, n, identity_only(n)));
    dec.terms.push_back(term(1.0, n, {Factor::increment(0, n)}));
    dec.terms.push_back(term(1.0, n, {Factor::decrement(0, n)}));
    dec.terms.push_back(term(-0.5, n, {Factor::x_string(0, n)}));
    dec.terms.push_back(term(-0.5, n, {Factor::cminus(0, n)}));

    const IndexSet last = IndexSet{1} << (n - 1);
    for (const auto &t : poly.terms) {
        IndexSet alpha = 0;
        for (const auto &f : t.expr.factors) {
            if (f.kind == FactorKind::ZAt) {
                alpha ^= IndexSet{1} << f.first;
            }
        }
        double w = t.coeff;
        dec.terms.push_back(term(h / 2.0 * w, n, concat(z_string(alpha), {Factor::decrement(0, n)})));
        dec.terms.push_back(term(-h / 2.0 * w, n, concat(z_string(alpha), {Factor::increment(0, n)})));
        dec.terms.push_back(term(h / 4.0 * w, n, concat(z_string(alpha ^ last), {Factor::x_string(0, n)})));
        dec.terms.push_back(term(h / 4.0 * w, n, concat(z_string(alpha ^ last), {Factor::cminus(0, n)})));
    }
    merge_like_terms(dec);
    drop_zero_terms(dec);
    return dec;
}

DenseMatrix tau_matrix(int t) {
    require(t >= 0 && t <= 3, ErrorKind::InvalidArgument, "tau index must be in 0..3");
    DenseMatrix m(2, 2);
    int nu = (t == 2 || t == 3) ? 1 : 0;
    int sigma = (t == 1 || t == 3) ? 1 : 0;
    m(nu, sigma) = 1.0;
    return m;
}

LcuDecomposition tau_product_expansion(std::span<const int> taus) {
    int n = static_cast<int>(taus.size());
    require(n >= 1 && n <= 30, ErrorKind::Dimension, "tau product needs 1 <= n <= 30");
    std::vector<Factor> left;
    std::vector<Factor> right;
    for (int j = 0; j < n; j++) {
        int t = taus[j];
        require(t >= 0 && t <= 3, ErrorKind::InvalidArgument, "tau index must be in 0..3");
        if (t == 2 || t == 3) {
            left.push_back(Factor::x_at(j));
        }
        if (t == 1 || t == 3) {
            right.push_back(Factor::x_at(j));
        }
    }
    const std::vector<std::vector<Factor>> cores = {
        {},
        {Factor::z_at(n - 1)},
        {Factor::x_string(0, n), Factor::cminus(0, n)},
        {Factor::x_string(0, n), Factor::cminus(0, n), Factor::z_at(n - 1)},
    };
    LcuDecomposition dec{n, "tau-product", {}, {}};
    for (const auto &core : cores) {
        std::vector<Factor> fs = concat(concat(left, core), right);
        if (fs.empty()) {
            fs = identity_only(n);
        }
        dec.terms.push_back(term(0.25, n, std::move(fs)));
    }
    return dec;
}

LcuDecomposition decompose_kharazi(int n) {
    check_n(n);
    LcuDecomposition dec{n, "kharazi", {}, {}};
    dec.terms.push_back(term(-2.0, n, identity_only(n)));
    dec.terms.push_back(term(0.5, n, {Factor::increment(0, n)}));
    dec.terms.push_back(term(0.5, n, {Factor::decrement(0, n)}));
    dec.terms.push_back(term(0.5, n, {Factor::increment(0, n), Factor::multi_z(0, n)}));
    dec.terms.push_back(term(0.5, n, {Factor::multi_z(0, n), Factor::decrement(0, n)}));
    return dec;
}

std::string to_json(const LcuDecomposition &dec) {
    nlohmann::json j;
    j["provenance"] = dec.provenance;
    j["width"] = dec.width;
    j["terms"] = nlohmann::json::array();
    for (const auto &t : dec.terms) {
        nlohmann::json jt;
        jt["coeff"] = t.coeff;
        jt["factors"] = nlohmann::json::array();
        for (const auto &f : t.expr.factors) {
            nlohmann::json params = nlohmann::json::object();
            if (single_qubit(f.kind)) {
                params["slot"] = f.first;
            }
            jt["factors"].push_back({{"kind", to_string(f.kind)}, {"span", {f.first, f.count}}, {"params", params}});
        }
        j["terms"].push_back(jt);
    }
    if (!dec.notes.empty()) {
        j["notes"] = dec.notes;
    }
    return j.dump();
}

LcuDecomposition lcu_from_json(const std::string &text) {
    LcuDecomposition dec;
    try {
        auto j = nlohmann::json::parse(text);
        dec.provenance = j.value("provenance", "");
        dec.width = j.at("width").get<int>();
        for (const auto &jt : j.at("terms")) {
            LcuTerm t;
            t.coeff = jt.at("coeff").get<double>();
            t.expr.width = dec.width;
            for (const auto &jf : jt.at("factors")) {
                auto span = jf.at("span").get<std::vector<int>>();
                if (span.size() != 2) {
                    fail(ErrorKind::Parse, "factor span must be [first, count]");
                }
                t.expr.factors.push_back({factor_kind_from_string(jf.at("kind").get<std::string>()), span[0], span[1]});
            }
            t.expr.validate();
            dec.terms.push_back(std::move(t));
        }
        if (j.contains("notes")) {
            dec.notes = j["notes"].get<std::vector<std::string>>();
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::Parse, std::string("lcu json: ") + e.what());
    }
    return dec;
}

}  // namespace plcu
