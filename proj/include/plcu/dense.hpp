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

#ifndef PLCU_DENSE_HPP
#define PLCU_DENSE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace plcu {

using DenseVector = std::vector<double>;

/// Row-major real matrix. Used for operators, verification oracles and
/// realized unitaries; none of those leave the real numbers.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static DenseMatrix identity(std::size_t size);
    static DenseMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    double &operator()(std::size_t r, std::size_t c) noexcept {
        return data_[r * cols_ + c];
    }
    double operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    std::span<const double> data() const noexcept {
        return data_;
    }
    std::span<double> data() noexcept {
        return data_;
    }
    std::span<const double> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    DenseMatrix transpose() const;
    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseVector operator*(std::span<const double> v) const;
    DenseMatrix &operator+=(const DenseMatrix &rhs);
    DenseMatrix &operator-=(const DenseMatrix &rhs);
    DenseMatrix &operator*=(double s);
    DenseMatrix operator+(const DenseMatrix &rhs) const;
    DenseMatrix operator-(const DenseMatrix &rhs) const;
    DenseMatrix operator*(double s) const;

    /// Adds s * rhs in place.
    void axpy(double s, const DenseMatrix &rhs);

    double max_abs() const noexcept;
    double norm_inf() const noexcept;

    bool operator==(const DenseMatrix &) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
double norm_inf(std::span<const double> v) noexcept;
double norm2(std::span<const double> v) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;

/// {dims, format:"dense-rowmajor", data:[...]}
std::string to_json(const DenseMatrix &m);
std::string to_json(std::span<const double> v);
DenseMatrix matrix_from_json(const std::string &text);
std::string to_csv(const DenseMatrix &m);

/// Least-squares line y = slope * x + intercept. rel_residual is
/// ||y - fit||_2 / ||y||_2; max_rel_residual is the largest pointwise
/// |y_i - fit_i| / |y_i| over points with y_i != 0.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rel_residual = 0.0;
    double max_rel_residual = 0.0;
};

LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

}  // namespace plcu

#endif
