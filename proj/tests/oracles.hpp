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


// Reference matrices built straight from their definitions. Nothing here
// calls the library's builders; DenseMatrix is only used as storage.

#ifndef PLCU_TESTS_ORACLES_HPP
#define PLCU_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "plcu/dense.hpp"

namespace oracle {

using plcu::DenseMatrix;

inline std::size_t dim(int n) {
    return std::size_t{1} << n;
}

inline DenseMatrix eye(std::size_t d) {
    DenseMatrix m(d, d);
    for (std::size_t i = 0; i < d; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

inline DenseMatrix pauli_x() {
    return DenseMatrix(2, 2, {0, 1, 1, 0});
}

inline DenseMatrix pauli_z() {
    return DenseMatrix(2, 2, {1, 0, 0, -1});
}

inline DenseMatrix tensor(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            for (std::size_t k = 0; k < b.rows(); k++) {
                for (std::size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            double v = a(i, k);
            if (v == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); j++) {
                out(i, j) += v * b(k, j);
            }
        }
    }
    return out;
}

/// Single-qubit matrix g on slot `slot` of an n-qubit register (slot 0 is
/// the leftmost factor).
inline DenseMatrix on_slot(int n, int slot, const DenseMatrix &g) {
    DenseMatrix out(1, 1, {1.0});
    for (int s = 0; s < n; s++) {
        out = tensor(out, s == slot ? g : eye(2));
    }
    return out;
}

inline DenseMatrix x_string(int n) {
    DenseMatrix out(1, 1, {1.0});
    for (int s = 0; s < n; s++) {
        out = tensor(out, pauli_x());
    }
    return out;
}

/// I^(n-1) (x) Z.
inline DenseMatrix z_last(int n) {
    return on_slot(n, n - 1, pauli_z());
}

/// S|i> = |i + 1 mod 2^n>.
inline DenseMatrix shift(int n) {
    std::size_t d = dim(n);
    DenseMatrix m(d, d);
    for (std::size_t i = 0; i < d; i++) {
        m((i + 1) % d, i) = 1.0;
    }
    return m;
}

/// Antidiagonal with +1 at both corners and -1 in between.
inline DenseMatrix c_minus(int n) {
    std::size_t d = dim(n);
    DenseMatrix m(d, d);
    for (std::size_t i = 0; i < d; i++) {
        m(i, d - 1 - i) = (i == 0 || i == d - 1) ? 1.0 : -1.0;
    }
    return m;
}

/// tau_0 = |0><0|, tau_1 = |0><1|, tau_2 = |1><0|, tau_3 = |1><1|.
inline DenseMatrix tau(int t) {
    DenseMatrix m(2, 2);
    m(t >= 2 ? 1 : 0, (t == 1 || t == 3) ? 1 : 0) = 1.0;
    return m;
}

inline double h_dirichlet(int n) {
    return 1.0 / (std::ldexp(1.0, n) + 1.0);
}

inline double h_periodic(int n) {
    return 1.0 / std::ldexp(1.0, n);
}

inline double h_robin(int n) {
    return 1.0 / (std::ldexp(1.0, n) - 1.0);
}

/// Tridiagonal (1, -2, 1).
inline DenseMatrix tridiag(int n) {
    std::size_t d = dim(n);
    DenseMatrix m(d, d);
    for (std::size_t i = 0; i < d; i++) {
        m(i, i) = -2.0;
        if (i + 1 < d) {
            m(i, i + 1) = 1.0;
            m(i + 1, i) = 1.0;
        }
    }
    return m;
}

inline DenseMatrix dirichlet_a(int n) {
    return tridiag(n);
}

inline DenseMatrix periodic_a(int n) {
    DenseMatrix m = tridiag(n);
    std::size_t d = dim(n);
    m(0, d - 1) = 1.0;
    m(d - 1, 0) = 1.0;
    return m;
}

/// Robin rows from ghost-point elimination of u' + a u = b.
inline DenseMatrix robin_a(int n, double a0, double a1) {
    DenseMatrix m = tridiag(n);
    std::size_t d = dim(n);
    double h = h_robin(n);
    m(0, 0) = -2.0 + 2.0 * a0 * h;
    m(0, 1) = 2.0;
    m(d - 1, d - 2) = 2.0;
    m(d - 1, d - 1) = -2.0 - 2.0 * a1 * h;
    return m;
}

/// Central difference (u_{i+1} - u_{i-1}) / (2h) on the Dirichlet grid.
inline DenseMatrix gradient(int n) {
    std::size_t d = dim(n);
    double h = h_dirichlet(n);
    DenseMatrix m(d, d);
    for (std::size_t i = 0; i + 1 < d; i++) {
        m(i, i + 1) = 1.0 / (2.0 * h);
        m(i + 1, i) = -1.0 / (2.0 * h);
    }
    return m;
}

/// x_i = (i + 1) h on the Dirichlet grid.
inline std::vector<double> dirichlet_x(int n) {
    std::vector<double> x(dim(n));
    for (std::size_t i = 0; i < x.size(); i++) {
        x[i] = static_cast<double>(i + 1) * h_dirichlet(n);
    }
    return x;
}

inline DenseMatrix diag_poly(const std::vector<double> &a, int n) {
    std::vector<double> x = dirichlet_x(n);
    DenseMatrix m(x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        double v = 0.0;
        double p = 1.0;
        for (double c : a) {
            v += c * p;
            p *= x[i];
        }
        m(i, i) = v;
    }
    return m;
}

/// Z_alpha for a bitmask alpha over slots (bit l -> slot l).
inline DenseMatrix z_alpha(int n, unsigned alpha) {
    DenseMatrix out(1, 1, {1.0});
    for (int s = 0; s < n; s++) {
        out = tensor(out, (alpha >> s) & 1U ? pauli_z() : eye(2));
    }
    return out;
}

/// (1 / 2^n) tr(Z_alpha M) for diagonal M.
inline double z_projection(const DenseMatrix &m, int n, unsigned alpha) {
    double s = 0.0;
    std::size_t d = dim(n);
    for (std::size_t i = 0; i < d; i++) {
        int parity = 0;
        for (int slot = 0; slot < n; slot++) {
            if ((alpha >> slot) & 1U) {
                parity ^= static_cast<int>((i >> (n - 1 - slot)) & 1U);
            }
        }
        s += (parity ? -1.0 : 1.0) * m(i, i);
    }
    return s / static_cast<double>(d);
}

inline double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

inline std::vector<double> random_unit(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<double> v(d);
    double s = 0.0;
    for (double &x : v) {
        x = g(rng);
        s += x * x;
    }
    for (double &x : v) {
        x /= std::sqrt(s);
    }
    return v;
}

/// v^T M w.
inline double quad(const std::vector<double> &v, const DenseMatrix &m, const std::vector<double> &w) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            s += v[i] * m(i, j) * w[j];
        }
    }
    return s;
}

}  // namespace oracle

#endif
