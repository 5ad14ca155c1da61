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

#include "plcu/dense.hpp"

#include <gsl/gsl_fit.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "plcu/error.hpp"

namespace plcu {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows * cols, ErrorKind::Dimension, "matrix data length does not match dims");
}

DenseMatrix DenseMatrix::identity(std::size_t size) {
    DenseMatrix m(size, size);
    for (std::size_t i = 0; i < size; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
    DenseMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    require(cols_ == rhs.rows_, ErrorKind::Dimension, "matrix product dimension mismatch");
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            double a = (*this)(r, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

DenseVector DenseMatrix::operator*(std::span<const double> v) const {
    require(cols_ == v.size(), ErrorKind::Dimension, "matrix-vector dimension mismatch");
    DenseVector out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; r++) {
        double acc = 0.0;
        for (std::size_t c = 0; c < cols_; c++) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &rhs) {
    axpy(1.0, rhs);
    return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &rhs) {
    axpy(-1.0, rhs);
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(double s) {
    for (double &x : data_) {
        x *= s;
    }
    return *this;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &rhs) const {
    DenseMatrix out = *this;
    out += rhs;
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix &rhs) const {
    DenseMatrix out = *this;
    out -= rhs;
    return out;
}

DenseMatrix DenseMatrix::operator*(double s) const {
    DenseMatrix out = *this;
    out *= s;
    return out;
}

void DenseMatrix::axpy(double s, const DenseMatrix &rhs) {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorKind::Dimension, "matrix sum dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); i++) {
        data_[i] += s * rhs.data_[i];
    }
}

double DenseMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double x : data_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double DenseMatrix::norm_inf() const noexcept {
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; r++) {
        double s = 0.0;
        for (double x : row(r)) {
            s += std::abs(x);
        }
        m = std::max(m, s);
    }
    return m;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            double s = a(ar, ac);
            if (s == 0.0) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Dimension, "matrix comparison dimension mismatch");
    return max_abs_diff(a.data(), b.data());
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), ErrorKind::Dimension, "vector comparison length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

double norm_inf(std::span<const double> v) noexcept {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double norm2(std::span<const double> v) noexcept {
    return std::sqrt(dot(v, v));
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); i++) {
        s += a[i] * b[i];
    }
    return s;
}

std::string to_json(const DenseMatrix &m) {
    nlohmann::json j;
    j["dims"] = {m.rows(), m.cols()};
    j["format"] = "dense-rowmajor";
    j["data"] = std::vector<double>(m.data().begin(), m.data().end());
    return j.dump();
}

std::string to_json(std::span<const double> v) {
    nlohmann::json j;
    j["dims"] = {v.size()};
    j["format"] = "dense-rowmajor";
    j["data"] = std::vector<double>(v.begin(), v.end());
    return j.dump();
}

DenseMatrix matrix_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::Parse, std::string("matrix json: ") + e.what());
    }
    if (!j.contains("dims") || !j.contains("data") || j.value("format", "") != "dense-rowmajor") {
        fail(ErrorKind::Parse, "matrix json: expected {dims, format:\"dense-rowmajor\", data}");
    }
    auto dims = j["dims"].get<std::vector<std::size_t>>();
    auto data = j["data"].get<std::vector<double>>();
    std::size_t rows = dims.empty() ? 0 : dims[0];
    std::size_t cols = dims.size() > 1 ? dims[1] : 1;
    if (rows * cols != data.size()) {
        fail(ErrorKind::Parse, "matrix json: data length does not match dims");
    }
    return DenseMatrix(rows, cols, std::move(data));
}

std::string to_csv(const DenseMatrix &m) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            if (c) {
                out << ',';
            }
            out << m(r, c);
        }
        out << '\n';
    }
    return out.str();
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    require(x.size() == y.size() && x.size() >= 2, ErrorKind::Dimension, "linear fit needs two or more paired points");
    LinearFit out;
    double cov00 = 0.0;
    double cov01 = 0.0;
    double cov11 = 0.0;
    double sumsq = 0.0;
    gsl_fit_linear(x.data(), 1, y.data(), 1, x.size(), &out.intercept, &out.slope, &cov00, &cov01, &cov11, &sumsq);
    double ynorm = norm2(y);
    out.rel_residual = ynorm > 0.0 ? std::sqrt(sumsq) / ynorm : 0.0;
    for (std::size_t i = 0; i < x.size(); i++) {
        if (y[i] != 0.0) {
            double r = std::abs(y[i] - (out.slope * x[i] + out.intercept)) / std::abs(y[i]);
            out.max_rel_residual = std::max(out.max_rel_residual, r);
        }
    }
    return out;
}

}  // namespace plcu
