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

#ifndef PLCU_SIM_HPP
#define PLCU_SIM_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "plcu/circuit.hpp"
#include "plcu/dense.hpp"

namespace plcu {

using Amplitude = std::complex<double>;

/// Dense statevector. Qubit 0 is the most significant bit of the index.
class StateVector {
   public:
    explicit StateVector(int width);

    static StateVector basis(int width, std::uint64_t index);
    /// Normalized copy of a real amplitude vector of length 2^width.
    static StateVector from_real(std::span<const double> amplitudes);

    int width() const noexcept {
        return width_;
    }
    std::size_t size() const noexcept {
        return amp_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amp_;
    }
    std::span<Amplitude> amplitudes() noexcept {
        return amp_;
    }
    Amplitude operator[](std::size_t i) const noexcept {
        return amp_[i];
    }

    void apply(const Gate &g);
    /// exp(-i theta Y / 2) on qubit q.
    void apply_ry(int q, double theta);
    /// (I - 2 w w^T) on the register [first, first + count); w must be a unit
    /// real vector of length 2^count.
    void apply_reflection(int first, int count, std::span<const double> w);

    double norm() const;
    /// Real parts of the amplitudes.
    std::vector<double> real() const;
    /// Width-extended copy: this (x) |0...0> over `extra` trailing qubits,
    /// optionally preceded by `lead` leading |0> qubits.
    StateVector embed(int lead, int extra) const;

   private:
    std::uint64_t mask(int q) const noexcept {
        return std::uint64_t{1} << (width_ - 1 - q);
    }

    int width_;
    std::vector<Amplitude> amp_;
};

StateVector run(const Circuit &c, StateVector s);

/// Columns from data basis states with every non-data qubit in |0>; the
/// circuit phase is not applied. Throws AncillaLeak when amplitude ends up
/// outside the data subspace.
DenseMatrix circuit_matrix(const Circuit &c, double leak_tolerance = 1e-10);

/// <s|Z_j|s>.
double expectation_z(const StateVector &s, int j);

struct SampleMode {
    bool shots = false;
    std::uint64_t count = 0;
    std::mt19937_64 *rng = nullptr;
};

/// Hadamard test with the control on qubit 0, prep on qubits 1..n and a
/// helper qubit n + 1 in |0>. body acts on the (n + 2)-qubit state between
/// the two Hadamards. Exact mode returns 2 P(0) - 1; shots mode replaces
/// P(0) by a binomial sample frequency.
double hadamard_test(const StateVector &prep, const std::function<void(StateVector &)> &body,
                     const SampleMode &mode = {});

/// Hadamard test of a controlled circuit laid out as in controlled_expr.
/// Returns Re<prep|U|prep> for the gate product U (phase not applied).
double hadamard_test(const Circuit &controlled, const StateVector &prep, const SampleMode &mode = {});

std::string to_json(const StateVector &s);

}  // namespace plcu

#endif
