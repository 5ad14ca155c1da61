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

#include "plcu/grid.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_linalg.h>
#include <gsl/gsl_matrix.h>
#include <gsl/gsl_permutation.h>
#include <gsl/gsl_vector.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "plcu/error.hpp"

namespace plcu {

namespace {

constexpr int kMaxQubits = 14;

std::size_t dim_of(int n) {
    return std::size_t{1} << n;
}

void check_qubits(int n) {
    require(n >= 2, ErrorKind::Dimension, "qubit count must be at least 2, got " + std::to_string(n));
    require(n <= kMaxQubits, ErrorKind::Dimension, "qubit count too large for dense storage");
}

}  // namespace

std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::Dirichlet:
            return "dirichlet";
        case Boundary::Periodic:
            return "periodic";
        case Boundary::NeumannRobin:
            return "robin";
    }
    return "unknown";
}

Boundary boundary_from_string(const std::string &name) {
    if (name == "dirichlet" || name == "1") {
        return Boundary::Dirichlet;
    }
    if (name == "periodic" || name == "2") {
        return Boundary::Periodic;
    }
    if (name == "robin" || name == "neumann" || name == "neumann-robin" || name == "3") {
        return Boundary::NeumannRobin;
    }
    fail(ErrorKind::InvalidArgument, "unknown boundary kind '" + name + "'");
}

double grid_spacing(Boundary b, int n) {
    double big = std::ldexp(1.0, n);
    switch (b) {
        case Boundary::Dirichlet:
            return 1.0 / (big + 1.0);
        case Boundary::Periodic:
            return 1.0 / big;
        case Boundary::NeumannRobin:
            return 1.0 / (big - 1.0);
    }
    fail(ErrorKind::InvalidArgument, "unknown boundary kind");
}

double grid_point(Boundary b, int n, std::size_t i) {
    double h = grid_spacing(b, n);
    return b == Boundary::Dirichlet ? static_cast<double>(i + 1) * h : static_cast<double>(i) * h;
}

std::vector<double> grid_points(Boundary b, int n) {
    std::vector<double> xs(dim_of(n));
    for (std::size_t i = 0; i < xs.size(); i++) {
        xs[i] = grid_point(b, n, i);
    }
    return xs;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

int Polynomial::degree() const {
    int k = static_cast<int>(a.size()) - 1;
    while (k > 0 && a[k] == 0.0) {
        k--;
    }
    return std::max(k, 0);
}

int GridSpec::total_qubits() const {
    int total = 0;
    for (int q : n) {
        total += q;
    }
    return total;
}

std::size_t GridSpec::size() const {
    return dim_of(total_qubits());
}

int GridSpec::slot_offset(int i) const {
    int off = 0;
    for (int k = i + 1; k < dims(); k++) {
        off += n[k];
    }
    return off;
}

void GridSpec::validate() const {
    require(!n.empty(), ErrorKind::Dimension, "grid needs at least one dimension");
    require(n.size() == bc.size(), ErrorKind::InvalidArgument, "one boundary kind per dimension is required");
    for (int q : n) {
        check_qubits(q);
        if (dims() >= 2) {
            require(q > 2, ErrorKind::InvalidArgument, "multi-dimensional grids need more than 2 qubits per axis");
        }
    }
    require(total_qubits() <= kMaxQubits, ErrorKind::Dimension, "grid too large for dense storage");
}

DenseMatrix build_operator_1d(int n, const BoundaryKind &bc) {
    check_qubits(n);
    std::size_t size = dim_of(n);
    DenseMatrix a(size, size);
    for (std::size_t i = 0; i < size; i++) {
        a(i, i) = -2.0;
        if (i + 1 < size) {
            a(i, i + 1) = 1.0;
            a(i + 1, i) = 1.0;
        }
    }
    if (bc.tag == Boundary::Periodic) {
        a(0, size - 1) = 1.0;
        a(size - 1, 0) = 1.0;
    } else if (bc.tag == Boundary::NeumannRobin) {
        require(std::isfinite(bc.a0) && std::isfinite(bc.a1), ErrorKind::InvalidArgument,
                "Robin coefficients must be finite");
        double h = grid_spacing(bc.tag, n);
        a(0, 0) = -2.0 + 2.0 * bc.a0 * h;
        a(0, 1) = 2.0;
        a(size - 1, size - 2) = 2.0;
        a(size - 1, size - 1) = -2.0 - 2.0 * bc.a1 * h;
    }
    return a;
}

DenseMatrix build_laplacian_1d(int n, const BoundaryKind &bc) {
    double h = grid_spacing(bc.tag, n);
    return build_operator_1d(n, bc) * (1.0 / (h * h));
}

DenseVector build_forcing_1d(int n, const BoundaryKind &bc, std::span<const double> f,
                             std::span<const double> boundary) {
    check_qubits(n);
    std::size_t size = dim_of(n);
    require(f.size() == size, ErrorKind::Dimension, "forcing samples must have length 2^n");
    double h = grid_spacing(bc.tag, n);
    DenseVector rhs(f.begin(), f.end());
    switch (bc.tag) {
        case Boundary::Dirichlet:
            require(boundary.size() == 2, ErrorKind::InvalidArgument, "Dirichlet data needs exactly (a, b)");
            rhs.front() -= boundary[0] / (h * h);
            rhs.back() -= boundary[1] / (h * h);
            break;
        case Boundary::Periodic:
            require(boundary.empty(), ErrorKind::InvalidArgument, "periodic problems take no boundary data");
            break;
        case Boundary::NeumannRobin:
            require(boundary.size() == 2, ErrorKind::InvalidArgument, "Robin data needs exactly (b0, b1)");
            rhs.front() += 2.0 * boundary[0] / h;
            rhs.back() -= 2.0 * boundary[1] / h;
            break;
    }
    for (double &v : rhs) {
        v *= h * h;
    }
    return rhs;
}

DenseMatrix build_gradient_1d(int n) {
    check_qubits(n);
    std::size_t size = dim_of(n);
    double s = 1.0 / (2.0 * grid_spacing(Boundary::Dirichlet, n));
    DenseMatrix d(size, size);
    for (std::size_t i = 0; i + 1 < size; i++) {
        d(i, i + 1) = s;
        d(i + 1, i) = -s;
    }
    return d;
}

DenseMatrix build_coefficient_diag(const Polynomial &p, int n) {
    check_qubits(n);
    std::vector<double> values = grid_points(Boundary::Dirichlet, n);
    for (double &x : values) {
        x = p(x);
    }
    return DenseMatrix::diagonal(values);
}

DenseMatrix build_operator_nd(const GridSpec &spec) {
    spec.validate();
    if (spec.dims() == 1) {
        return build_laplacian_1d(spec.n[0], spec.bc[0]);
    }
    std::size_t total = spec.size();
    DenseMatrix out(total, total);
    for (int i = 0; i < spec.dims(); i++) {
        DenseMatrix l = build_laplacian_1d(spec.n[i], spec.bc[i]);
        std::size_t right = std::size_t{1} << (spec.total_qubits() - spec.slot_offset(i) - spec.n[i]);
        std::size_t block = l.rows();
        std::size_t left = total / (block * right);
        for (std::size_t hi = 0; hi < left; hi++) {
            for (std::size_t r = 0; r < block; r++) {
                for (std::size_t c = 0; c < block; c++) {
                    double v = l(r, c);
                    if (v == 0.0) {
                        continue;
                    }
                    for (std::size_t lo = 0; lo < right; lo++) {
                        out((hi * block + r) * right + lo, (hi * block + c) * right + lo) += v;
                    }
                }
            }
        }
    }
    return out;
}

DenseVector build_forcing_2d(const GridSpec &spec, std::span<const double> f, std::span<const double> g0,
                             std::span<const double> g1, std::span<const double> b0,
                             std::span<const double> b1) {
    require(spec.dims() == 2 && spec.bc.size() == 2, ErrorKind::InvalidArgument,
            "2-D forcing needs exactly two axes");
    require(spec.n[0] >= 2 && spec.n[1] >= 2, ErrorKind::Dimension, "qubit count must be at least 2 per axis");
    require(spec.total_qubits() <= kMaxQubits, ErrorKind::Dimension, "grid too large for dense storage");
    require( spec.bc[0].tag == Boundary::Dirichlet && spec.bc[1].tag == Boundary::NeumannRobin,
            ErrorKind::InvalidArgument, "2-D forcing expects a Dirichlet x axis and a Robin y axis");
    std::size_t n1 = dim_of(spec.n[0]);
    std::size_t n2 = dim_of(spec.n[1]);
    require(f.size() == n1 * n2, ErrorKind::Dimension, "interior samples must have length N1*N2");
    require(g0.size() == n2 && g1.size() == n2, ErrorKind::Dimension, "g0/g1 samples must have length N2");
    require(b0.size() == n1 && b1.size() == n1, ErrorKind::Dimension, "b0/b1 samples must have length N1");
    double h1 = grid_spacing(Boundary::Dirichlet, spec.n[0]);
    double h3 = grid_spacing(Boundary::NeumannRobin, spec.n[1]);
    DenseVector rhs(f.begin(), f.end());
    for (std::size_t j = 0; j < n2; j++) {
        rhs[j * n1] -= g0[j] / (h1 * h1);
        rhs[j * n1 + n1 - 1] -= g1[j] / (h1 * h1);
    }
    for (std::size_t i = 0; i < n1; i++) {
        rhs[i] += 2.0 * b0[i] / h3;
        rhs[(n2 - 1) * n1 + i] -= 2.0 * b1[i] / h3;
    }
    return rhs;
}

DenseVector solve_reference(const DenseMatrix &a, std::span<const double> rhs) {
    require(a.is_square(), ErrorKind::Dimension, "reference solve needs a square matrix");
    require(a.rows() == rhs.size(), ErrorKind::Dimension, "right-hand side length mismatch");
    static const gsl_error_handler_t *previous = gsl_set_error_handler_off();
    (void)previous;
    std::size_t size = a.rows();
    double scale = a.norm_inf();
    require(size > 0 && scale > 0.0, ErrorKind::Singular, "matrix is zero");

    std::unique_ptr<gsl_matrix, decltype(&gsl_matrix_free)> lu(gsl_matrix_alloc(size, size), gsl_matrix_free);
    std::unique_ptr<gsl_permutation, decltype(&gsl_permutation_free)> perm(gsl_permutation_alloc(size),
                                                                           gsl_permutation_free);
    std::copy(a.data().begin(), a.data().end(), lu->data);
    int signum = 0;
    gsl_linalg_LU_decomp(lu.get(), perm.get(), &signum);

    double min_pivot = INFINITY;
    for (std::size_t i = 0; i < size; i++) {
        min_pivot = std::min(min_pivot, std::abs(gsl_matrix_get(lu.get(), i, i)));
    }
    if (min_pivot < 1e-12 * scale) {
        fail(ErrorKind::Singular,
             "matrix is numerically singular (smallest pivot " + std::to_string(min_pivot) +
                 "); periodic and pure Neumann operators have a constant null vector, and Robin operators are "
                 "only invertible for admissible (a0, a1, h3)");
    }

    DenseVector x(rhs.begin(), rhs.end());
    gsl_vector_view xv = gsl_vector_view_array(x.data(), size);
    gsl_linalg_LU_svx(lu.get(), perm.get(), &xv.vector);
    return x;
}

ConvergenceResult convergence_order(const BoundaryKind &bc, const std::function<double(double)> &f,
                                    const std::function<double(double)> &u,
                                    const std::function<double(double)> &du, std::span<const int> ns) {
    require(ns.size() >= 2, ErrorKind::InvalidArgument, "convergence study needs at least two grid sizes");
    require(bc.tag != Boundary::NeumannRobin || static_cast<bool>(du), ErrorKind::InvalidArgument,
            "Robin convergence needs the derivative of the exact solution");
    ConvergenceResult out;
    for (int n : ns) {
        std::vector<double> xs = grid_points(bc.tag, n);
        std::vector<double> fs(xs.size());
        std::transform(xs.begin(), xs.end(), fs.begin(), f);
        std::vector<double> boundary;
        if (bc.tag == Boundary::Dirichlet) {
            boundary = {u(0.0), u(1.0)};
        } else if (bc.tag == Boundary::NeumannRobin) {
            boundary = {du(0.0) + bc.a0 * u(0.0), du(1.0) + bc.a1 * u(1.0)};
        }
        DenseVector rhs = build_forcing_1d(n, bc, fs, boundary);
        DenseVector sol = solve_reference(build_operator_1d(n, bc), rhs);
        double err = 0.0;
        for (std::size_t i = 0; i < xs.size(); i++) {
            err = std::max(err, std::abs(sol[i] - u(xs[i])));
        }
        out.n.push_back(n);
        out.h.push_back(grid_spacing(bc.tag, n));
        out.error.push_back(err);
    }
    for (std::size_t i = 0; i + 1 < out.error.size(); i++) {
        out.order.push_back(std::log(out.error[i] / out.error[i + 1]) / std::log(out.h[i] / out.h[i + 1]));
    }
    return out;
}

}  // namespace plcu
