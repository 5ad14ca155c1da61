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
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "plcu/error.hpp"
#include "plcu/lcu.hpp"

namespace {

using plcu::BoundaryKind;
using plcu::DenseMatrix;
using plcu::Factor;
using plcu::LcuDecomposition;
using plcu::UnitaryExpr;

std::vector<double> sorted_coeffs(const LcuDecomposition &dec) {
    auto c = dec.coefficients();
    std::sort(c.begin(), c.end());
    return c;
}

std::map<std::string, double> by_key(const LcuDecomposition &dec) {
    std::map<std::string, double> out;
    for (const auto &t : dec.terms) {
        out[t.expr.key()] += t.coeff;
    }
    return out;
}

DenseMatrix scaled(DenseMatrix m, double s) {
    m *= s;
    return m;
}

DenseMatrix corners(int n) {
    std::size_t d = oracle::dim(n);
    DenseMatrix m(d, d);
    m(0, d - 1) = 1.0;
    m(d - 1, 0) = 1.0;
    return m;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

TEST(TermMatrix, Increment) {
    DenseMatrix m = plcu::term_matrix({2, {Factor::increment(0, 2)}});
    EXPECT_EQ(m, oracle::shift(2));
}

TEST(TermMatrix, CMinus) {
    DenseMatrix m = plcu::term_matrix({2, {Factor::cminus(0, 2)}});
    EXPECT_EQ(m, oracle::c_minus(2));
}

TEST(TermMatrix, XStringSquared) {
    for (int n = 1; n <= 6; n++) {
        DenseMatrix m = plcu::term_matrix({n, {Factor::x_string(0, n), Factor::x_string(0, n)}});
        EXPECT_EQ(m, oracle::eye(oracle::dim(n)));
    }
}

TEST(TermMatrix, ProductOrder) {
    // leftmost factor acts last: Z_last * S on |0> gives Z_last |1> = -|1>
    DenseMatrix m = plcu::term_matrix({3, {Factor::z_at(2), Factor::increment(0, 3)}});
    EXPECT_EQ(m, oracle::matmul(oracle::z_last(3), oracle::shift(3)));
}

TEST(TermMatrix, CornerSplit) {
    for (int n = 2; n <= 10; n++) {
        DenseMatrix cm = plcu::term_matrix({n, {Factor::cminus(0, n)}});
        DenseMatrix xs = plcu::term_matrix({n, {Factor::x_string(0, n)}});
        EXPECT_EQ(scaled(cm, 0.5) + scaled(xs, 0.5), corners(n));
    }
}

TEST(Periodic, TermsAndMatrix) {
    for (int n = 2; n <= 8; n++) {
        auto dec = plcu::decompose_periodic(n);
        ASSERT_EQ(dec.terms.size(), 3u);
        EXPECT_EQ(dec.coefficients(), (std::vector<double>{-2.0, 1.0, 1.0}));
        EXPECT_LT(plcu::verify_lcu(dec, oracle::periodic_a(n)), 1e-13);
    }
}

TEST(Dirichlet, TermsAndMatrix) {
    for (int n = 2; n <= 8; n++) {
        auto dec = plcu::decompose_dirichlet(n);
        ASSERT_EQ(dec.terms.size(), 5u);
        EXPECT_EQ(sorted_coeffs(dec), (std::vector<double>{-2.0, -0.5, 0.5, 1.0, 1.0}));
        EXPECT_LT(plcu::verify_lcu(dec, oracle::dirichlet_a(n)), 1e-13);
    }
}

TEST(Dirichlet, CompositeTermIsNegatedCMinus) {
    for (int n = 2; n <= 8; n++) {
        auto dec = plcu::decompose_dirichlet(n);
        const auto &t = dec.terms.back();
        EXPECT_DOUBLE_EQ(t.coeff, 0.5);
        EXPECT_EQ(plcu::term_matrix(t.expr), scaled(oracle::c_minus(n), -1.0));
    }
}

TEST(NeumannRobin, TermCounts) {
    EXPECT_EQ(plcu::decompose_neumann_robin(4, 0.0, 0.0).terms.size(), 7u);
    EXPECT_EQ(plcu::decompose_neumann_robin(4, 0.7, -1.3).terms.size(), 10u);
    auto zero = plcu::decompose_neumann_robin(4, 0.0, 0.0);
    EXPECT_EQ(zero.notes.size(), 3u);
}

TEST(NeumannRobin, MatchesRobinOperator) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int n = 2; n <= 8; n++) {
        for (int trial = 0; trial < 3; trial++) {
            double a0 = u(rng);
            double a1 = u(rng);
            auto dec = plcu::decompose_neumann_robin(n, a0, a1);
            EXPECT_LE(dec.terms.size(), 10u);
            EXPECT_LT(plcu::verify_lcu(dec, oracle::robin_a(n, a0, a1)), 1e-12);
            // difference against the Dirichlet set is exactly the boundary correction
            DenseMatrix diff = plcu::lcu_matrix(dec) - plcu::lcu_matrix(plcu::decompose_dirichlet(n));
            EXPECT_LT(oracle::max_abs_diff(diff, oracle::robin_a(n, a0, a1) - oracle::dirichlet_a(n)), 1e-12);
        }
    }
}

TEST(Nd, TermCountsAndMatrix) {
    plcu::GridSpec dd{{3, 3}, {BoundaryKind::dirichlet(), BoundaryKind::dirichlet()}};
    plcu::GridSpec dp{{3, 4}, {BoundaryKind::dirichlet(), BoundaryKind::periodic()}};
    auto a = plcu::decompose_nd(dd);
    auto b = plcu::decompose_nd(dp);
    EXPECT_EQ(a.terms.size(), 10u);
    EXPECT_EQ(b.terms.size(), 8u);
    double h = oracle::h_dirichlet(3);
    DenseMatrix l = scaled(oracle::dirichlet_a(3), 1.0 / (h * h));
    DenseMatrix want = oracle::tensor(oracle::eye(8), l) + oracle::tensor(l, oracle::eye(8));
    EXPECT_LT(plcu::verify_lcu(a, want), 1e-9);
    EXPECT_NEAR(std::abs(a.terms.front().coeff), 2.0 * 81.0, 1e-9);
}

TEST(Nd, RejectsSingleAxisAndSmallAxes) {
    EXPECT_THROW(plcu::decompose_nd({{4}, {BoundaryKind::dirichlet()}}), plcu::Error);
    EXPECT_THROW(plcu::decompose_nd({{2, 3}, {BoundaryKind::dirichlet(), BoundaryKind::dirichlet()}}), plcu::Error);
}

TEST(FirstOrderConst, Terms) {
    EXPECT_EQ(plcu::decompose_first_order_const(4, 0.0).terms.size(), 5u);
    auto dec = plcu::decompose_first_order_const(4, 1.5);
    ASSERT_EQ(dec.terms.size(), 7u);
    double h = oracle::h_dirichlet(4);
    std::vector<double> want{-2.0, (2.0 - 1.5 * h) / 2.0, (2.0 + 1.5 * h) / 2.0, -0.5, -0.5, 1.5 * h / 4.0,
                             1.5 * h / 4.0};
    std::sort(want.begin(), want.end());
    auto got = sorted_coeffs(dec);
    for (std::size_t i = 0; i < want.size(); i++) {
        EXPECT_DOUBLE_EQ(got[i], want[i]);
    }
}

TEST(FirstOrderConst, MatchesTarget) {
    for (int n = 2; n <= 8; n++) {
        for (double p : {1.0, -2.5}) {
            double h = oracle::h_dirichlet(n);
            DenseMatrix want = oracle::dirichlet_a(n) + scaled(oracle::gradient(n), p * h * h);
            EXPECT_LT(plcu::verify_lcu(plcu::decompose_first_order_const(n, p), want), 1e-13) << n;
        }
    }
}

TEST(ZEncoding, CoefficientsRebuildGrid) {
    for (int n = 1; n <= 8; n++) {
        std::size_t d = oracle::dim(n);
        DenseMatrix j = oracle::eye(d);
        for (int k = 1; k <= n; k++) {
            j += scaled(oracle::on_slot(n, k - 1, oracle::pauli_z()), plcu::z_encoding_coeff(k, n));
        }
        auto x = oracle::dirichlet_x(n);
        for (std::size_t i = 0; i < d; i++) {
            EXPECT_NEAR(j(i, i), 2.0 * x[i], 1e-14);
        }
    }
}

TEST(PolyPower, KnownValues) {
    for (int n = 2; n <= 8; n++) {
        double big = std::ldexp(1.0, n);
        EXPECT_NEAR(plcu::poly_power_coeffs(2, n).at(0), 1.0 + (big - 1.0) / (3.0 * (big + 1.0)), 1e-14);
        auto c3 = plcu::poly_power_coeffs(3, n);
        for (int i = 0; i < n; i++) {
            for (int j = i + 1; j < n; j++) {
                EXPECT_DOUBLE_EQ(c3.at((1u << i) | (1u << j)), 6.0);
            }
        }
    }
}

TEST(PolyPower, TopLevelAndSupport) {
    for (int k = 0; k <= 4; k++) {
        for (const auto &[alpha, c] : plcu::poly_power_coeffs(k, 6)) {
            int m = __builtin_popcount(alpha);
            EXPECT_LE(m, k);
            if (m == k) {
                EXPECT_DOUBLE_EQ(c, std::tgamma(k + 1.0));
            }
        }
    }
}

TEST(PolyPower, MatchesBruteForce) {
    for (auto [k, n] : {std::pair{3, 4}, std::pair{2, 5}, std::pair{4, 4}}) {
        std::size_t d = oracle::dim(n);
        DenseMatrix j(d, d);
        auto x = oracle::dirichlet_x(n);
        for (std::size_t i = 0; i < d; i++) {
            j(i, i) = 2.0 * x[i];
        }
        DenseMatrix jk = oracle::eye(d);
        for (int p = 0; p < k; p++) {
            jk = oracle::matmul(jk, j);
        }
        auto map = plcu::poly_power_coeffs(k, n);
        for (unsigned alpha = 0; alpha < (1u << n); alpha++) {
            double proj = oracle::z_projection(jk, n, alpha);
            double prod = 1.0;
            for (int l = 0; l < n; l++) {
                if ((alpha >> l) & 1u) {
                    prod *= plcu::z_encoding_coeff(l + 1, n);
                }
            }
            auto it = map.find(alpha);
            double got = it == map.end() ? 0.0 : it->second;
            EXPECT_NEAR(got * prod, proj, 1e-12) << "k=" << k << " alpha=" << alpha;
        }
    }
}

TEST(PolyZ, LinearExample) {
    auto dec = plcu::poly_z_expansion({{0.0, 1.0}}, 3);
    ASSERT_EQ(dec.terms.size(), 4u);
    EXPECT_DOUBLE_EQ(dec.terms[0].coeff, 0.5);
    for (int j = 1; j <= 3; j++) {
        double cj = -(8.0 / 9.0) * std::ldexp(1.0, -j);
        EXPECT_NEAR(dec.terms[j].coeff, 0.5 * cj, 1e-15);
        EXPECT_EQ(dec.terms[j].expr.factors, std::vector<Factor>{Factor::z_at(j - 1)});
    }
}

TEST(PolyZ, ConstantIsIdentity) {
    auto dec = plcu::poly_z_expansion({{2.5}}, 4);
    ASSERT_EQ(dec.terms.size(), 1u);
    EXPECT_EQ(plcu::term_matrix(dec.terms[0].expr), oracle::eye(16));
    EXPECT_DOUBLE_EQ(dec.terms[0].coeff, 2.5);
}

TEST(PolyZ, RandomCubic) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> a{u(rng), u(rng), u(rng), u(rng)};
    auto dec = plcu::poly_z_expansion({a}, 6);
    EXPECT_LT(plcu::verify_lcu(dec, oracle::diag_poly(a, 6)), 1e-12);
    std::size_t bound = 0;
    for (int j = 0; j <= 3; j++) {
        bound += static_cast<std::size_t>(binomial(6, j));
    }
    EXPECT_LE(dec.terms.size(), bound);
}

TEST(Cubic, ClosedFormMatchesExpansion) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double a0 = u(rng), a1 = u(rng), a2 = u(rng), a3 = u(rng);
    int n = 5;
    auto closed = plcu::cubic_closed_form(a0, a1, a2, a3, n);
    auto general = plcu::poly_z_expansion({{a0, a1, a2, a3}}, n);
    auto ck = by_key(closed);
    auto gk = by_key(general);
    ASSERT_EQ(ck.size(), gk.size());
    for (const auto &[k, v] : gk) {
        ASSERT_TRUE(ck.count(k)) << k;
        EXPECT_NEAR(ck[k], v, 1e-13) << k;
    }
    EXPECT_LT(plcu::verify_lcu(closed, oracle::diag_poly({a0, a1, a2, a3}, n)), 1e-12);
}

TEST(Cubic, TripleCoefficient) {
    int n = 5;
    double a3 = 1.7;
    auto dec = plcu::cubic_closed_form(0.3, -0.2, 0.9, a3, n);
    for (const auto &t : dec.terms) {
        if (t.expr.factors.size() == 3) {
            double want = 0.75 * a3;
            for (const auto &f : t.expr.factors) {
                want *= plcu::z_encoding_coeff(f.first + 1, n);
            }
            EXPECT_NEAR(t.coeff, want, 1e-15);
        }
    }
}

TEST(Cubic, LowerDegreeDropsHighTerms) {
    auto dec = plcu::cubic_closed_form(1.0, 2.0, 0.0, 0.0, 5);
    for (const auto &t : dec.terms) {
        EXPECT_LE(t.expr.factors.size(), 1u);
    }
    EXPECT_EQ(dec.terms.size(), 6u);
}

TEST(FirstOrderPoly, ConstantMatchesConstSet) {
    for (double p : {1.0, -0.75}) {
        auto poly = by_key(plcu::decompose_first_order_poly(4, {{p}}));
        auto cons = by_key(plcu::decompose_first_order_const(4, p));
        ASSERT_EQ(poly.size(), cons.size());
        for (const auto &[k, v] : cons) {
            ASSERT_TRUE(poly.count(k)) << k;
            EXPECT_NEAR(poly[k], v, 1e-15) << k;
        }
    }
}

TEST(FirstOrderPoly, MatchesTarget) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> a{u(rng), u(rng), u(rng)};
    int n = 5;
    double h = oracle::h_dirichlet(n);
    DenseMatrix want =
        oracle::dirichlet_a(n) + scaled(oracle::matmul(oracle::diag_poly(a, n), oracle::gradient(n)), h * h);
    auto dec = plcu::decompose_first_order_poly(n, {a});
    EXPECT_LT(plcu::verify_lcu(dec, want), 1e-12);
    EXPECT_LE(dec.terms.size(), 5u + 4u * static_cast<std::size_t>(binomial(5, 0) + binomial(5, 1) + binomial(5, 2)));
}

TEST(FirstOrderPoly, CountBound) {
    auto dec = plcu::decompose_first_order_poly(8, {{0.1, 0.2, 0.3, 0.4}});
    double bound = 4.0 * std::pow(8.0 * std::exp(1.0) / 3.0, 3.0) + 5.0;
    EXPECT_LE(static_cast<double>(dec.terms.size()), bound);
}

TEST(Tau, RelationsAndMatrices) {
    DenseMatrix x = oracle::pauli_x();
    for (int t = 0; t < 4; t++) {
        EXPECT_EQ(plcu::tau_matrix(t), oracle::tau(t));
    }
    EXPECT_EQ(oracle::matmul(x, plcu::tau_matrix(0)), plcu::tau_matrix(2));
    EXPECT_EQ(oracle::matmul(plcu::tau_matrix(0), x), plcu::tau_matrix(1));
    EXPECT_EQ(oracle::matmul(oracle::matmul(x, plcu::tau_matrix(0)), x), plcu::tau_matrix(3));
}

TEST(Tau, ZeroStringTerms) {
    for (int n = 1; n <= 5; n++) {
        std::vector<int> ts(n, 0);
        auto dec = plcu::tau_product_expansion(ts);
        ASSERT_EQ(dec.terms.size(), 4u);
        for (const auto &t : dec.terms) {
            EXPECT_DOUBLE_EQ(t.coeff, 0.25);
        }
        EXPECT_EQ(plcu::term_matrix(dec.terms[0].expr), oracle::eye(oracle::dim(n)));
        EXPECT_EQ(plcu::term_matrix(dec.terms[1].expr), oracle::z_last(n));
        DenseMatrix xc = oracle::matmul(oracle::x_string(n), oracle::c_minus(n));
        EXPECT_EQ(plcu::term_matrix(dec.terms[2].expr), xc);
        EXPECT_EQ(plcu::term_matrix(dec.terms[3].expr), oracle::matmul(xc, oracle::z_last(n)));
    }
}

TEST(Tau, OnesStringIsLastProjector) {
    std::vector<int> ts(4, 3);
    DenseMatrix want(16, 16);
    want(15, 15) = 1.0;
    EXPECT_LT(plcu::verify_lcu(plcu::tau_product_expansion(ts), want), 1e-15);
}

TEST(Tau, MixedPairPlacement) {
    std::vector<int> ts{2, 1};
    DenseMatrix m = plcu::lcu_matrix(plcu::tau_product_expansion(ts));
    for (std::size_t i = 0; i < 4; i++) {
        for (std::size_t j = 0; j < 4; j++) {
            EXPECT_DOUBLE_EQ(m(i, j), (i == 2 && j == 1) ? 1.0 : 0.0);
        }
    }
}

TEST(Tau, RandomStrings) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int n = 1; n <= 6; n++) {
        std::vector<int> ts(n);
        DenseMatrix want(1, 1, {1.0});
        for (int &t : ts) {
            t = pick(rng);
            want = oracle::tensor(want, oracle::tau(t));
        }
        EXPECT_LT(plcu::verify_lcu(plcu::tau_product_expansion(ts), want), 1e-14);
    }
}

TEST(Kharazi, ExactOnDirichlet) {
    for (int n = 2; n <= 8; n++) {
        auto dec = plcu::decompose_kharazi(n);
        ASSERT_EQ(dec.terms.size(), 5u);
        EXPECT_LT(plcu::verify_lcu(dec, oracle::dirichlet_a(n)), 1e-13);
        auto c = dec.coefficients();
        for (double &v : c) {
            v = std::abs(v);
        }
        std::sort(c.begin(), c.end());
        EXPECT_EQ(c, (std::vector<double>{0.5, 0.5, 0.5, 0.5, 2.0}));
    }
}

TEST(Verify, PerturbationIsDetected) {
    auto dec = plcu::decompose_dirichlet(4);
    EXPECT_LT(plcu::verify_lcu(dec, oracle::dirichlet_a(4)), 1e-13);
    dec.terms[1].coeff += 1e-3;
    EXPECT_GE(plcu::verify_lcu(dec, oracle::dirichlet_a(4)), 1e-3 * (1 - 1e-9));
}

TEST(Verify, WidthMismatch) {
    try {
        plcu::verify_lcu(plcu::decompose_dirichlet(3), oracle::dirichlet_a(4));
        FAIL();
    } catch (const plcu::Error &e) {
        EXPECT_EQ(e.kind(), plcu::ErrorKind::WidthMismatch);
    }
}

TEST(Json, RoundTrip) {
    std::vector<LcuDecomposition> decs{plcu::decompose_dirichlet(4), plcu::decompose_neumann_robin(3, 0.0, 0.0),
                                       plcu::decompose_first_order_poly(4, {{0.5, 1.0}})};
    for (const auto &dec : decs) {
        auto back = plcu::lcu_from_json(plcu::to_json(dec));
        EXPECT_EQ(back.width, dec.width);
        EXPECT_EQ(back.provenance, dec.provenance);
        ASSERT_EQ(back.terms.size(), dec.terms.size());
        for (std::size_t i = 0; i < dec.terms.size(); i++) {
            EXPECT_EQ(back.terms[i].coeff, dec.terms[i].coeff);
            EXPECT_EQ(back.terms[i].expr.factors, dec.terms[i].expr.factors);
        }
        EXPECT_EQ(back.notes, dec.notes);
    }
}

TEST(Json, BadInput) {
    EXPECT_THROW(plcu::lcu_from_json("{not json"), plcu::Error);
    EXPECT_THROW(plcu::lcu_from_json(R"({"width":2,"terms":[{"coeff":1,"factors":[{"kind":"nope","span":[0,2]}]}]})"),
                 plcu::Error);
}

}  // namespace
