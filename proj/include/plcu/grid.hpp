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

#ifndef PLCU_GRID_HPP
#define PLCU_GRID_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "plcu/dense.hpp"

namespace plcu {

enum class Boundary { Dirichlet = 1, Periodic = 2, NeumannRobin = 3 };

/// Boundary condition of one axis. a0/a1 are the Robin coefficients in
/// u'(0) + a0 u(0) = b0, u'(1) + a1 u(1) = b1 and are ignored otherwise.
struct BoundaryKind {
    Boundary tag = Boundary::Dirichlet;
    double a0 = 0.0;
    double a1 = 0.0;

    static BoundaryKind dirichlet() {
        return {Boundary::Dirichlet, 0.0, 0.0};
    }
    static BoundaryKind periodic() {
        return {Boundary::Periodic, 0.0, 0.0};
    }
    static BoundaryKind robin(double a0, double a1) {
        return {Boundary::NeumannRobin, a0, a1};
    }
};

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string &name);

/// h1 = 1/(2^n+1), h2 = 1/2^n, h3 = 1/(2^n-1).
double grid_spacing(Boundary b, int n);

/// Coordinate of vector index i. Dirichlet grids start at x_1 = h, the
/// others at x_0 = 0.
double grid_point(Boundary b, int n, std::size_t i);
std::vector<double> grid_points(Boundary b, int n);

/// Real polynomial a[0] + a[1] x + ... + a[k] x^k.
struct Polynomial {
    std::vector<double> a;

    double operator()(double x) const;
    int degree() const;
};

/// Tensor-product grid. Dimension 0 of `n` is the x axis and occupies the
/// least significant qubits; the last dimension is leftmost.
struct GridSpec {
    std::vector<int> n;
    std::vector<BoundaryKind> bc;

    int dims() const {
        return static_cast<int>(n.size());
    }
    int total_qubits() const;
    std::size_t size() const;
    /// First qubit slot of dimension i.
    int slot_offset(int i) const;
    void validate() const;
};

/// Normalized A = h^2 L, 2^n x 2^n.
DenseMatrix build_operator_1d(int n, const BoundaryKind &bc);

/// L = A / h^2.
DenseMatrix build_laplacian_1d(int n, const BoundaryKind &bc);

/// h^2 (f + B). Boundary data is {a, b} for Dirichlet, {b0, b1} for Robin
/// and empty for periodic.
DenseVector build_forcing_1d(int n, const BoundaryKind &bc, std::span<const double> f,
                             std::span<const double> boundary);

/// Central difference first derivative on the Dirichlet grid.
DenseMatrix build_gradient_1d(int n);

/// diag(p(x_1), ..., p(x_{2^n})) on the Dirichlet grid.
DenseMatrix build_coefficient_diag(const Polynomial &p, int n);

/// Kronecker sum of the h^-2 scaled 1-D operators. A single dimension
/// returns L itself.
DenseMatrix build_operator_nd(const GridSpec &spec);

/// f + B for the two-dimensional Dirichlet (x) by Robin (y) problem.
/// g0/g1 are sampled on the y grid, b0/b1 on the x grid.
DenseVector build_forcing_2d(const GridSpec &spec, std::span<const double> f, std::span<const double> g0,
                             std::span<const double> g1, std::span<const double> b0,
                             std::span<const double> b1);

/// Dense LU solve. Throws Singular when the smallest pivot falls below
/// 1e-12 * ||A||_inf.
DenseVector solve_reference(const DenseMatrix &a, std::span<const double> rhs);

struct ConvergenceResult {
    std::vector<int> n;
    std::vector<double> h;
    std::vector<double> error;
    std::vector<double> order;
};

/// Solves u'' = f for each n and reports max-norm errors and observed
/// orders log(e_k / e_{k+1}) / log(h_k / h_{k+1}). du is only consulted
/// for Robin data.
ConvergenceResult convergence_order(const BoundaryKind &bc, const std::function<double(double)> &f,
                                    const std::function<double(double)> &u,
                                    const std::function<double(double)> &du, std::span<const int> ns);

}  // namespace plcu

#endif
