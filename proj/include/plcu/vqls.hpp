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

#ifndef PLCU_VQLS_HPP
#define PLCU_VQLS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plcu/circuit.hpp"
#include "plcu/lcu.hpp"
#include "plcu/sim.hpp"

namespace plcu {

/// Layers of RY rotations on every qubit, each followed by a CNOT ladder
/// (q, q + 1), then a closing RY layer. theta = 0 prepares |0...0>.
struct Ansatz {
    int n = 2;
    int layers = 2;

    std::size_t parameter_count() const {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(layers + 1);
    }
};

StateVector ansatz_state(const Ansatz &a, std::span<const double> theta);

/// Normalized amplitude encoding of rhs.
StateVector prepare_b(std::span<const double> rhs);

/// LCU, right-hand side and the controlled term circuits used by the
/// Hadamard tests.
struct VqlsProblem {
    int n = 0;
    LcuDecomposition dec;
    std::vector<double> b;
    /// Householder vector of U_b = I - 2 w w^T mapping |0> to |b>; empty
    /// when b is already |0>.
    std::vector<double> w;
    std::vector<Circuit> controlled;

    static VqlsProblem make(LcuDecomposition dec, std::span<const double> rhs);
};

/// <psi|R_l'^T R_l|psi>.
double beta(const VqlsProblem &p, std::size_t l, std::size_t lp, const StateVector &psi, const SampleMode &mode = {});

/// <psi|R_l'^T U_b Z_j U_b^T R_l|psi> for j in 1..n.
double delta(const VqlsProblem &p, int j, std::size_t l, std::size_t lp, const StateVector &psi,
             const SampleMode &mode = {});

struct CostBreakdown {
    DenseMatrix beta;
    std::vector<DenseMatrix> delta;
    double numerator = 0.0;
    double denominator = 0.0;
    double cost = 0.0;
    std::size_t beta_evaluations = 0;
    std::size_t delta_evaluations = 0;
};

/// C = 1/2 - (1/(2n)) sum_j sum_ll' c_l c_l' delta^(j)_ll' / sum_ll' c_l c_l' beta_ll'.
CostBreakdown local_cost(const VqlsProblem &p, const StateVector &psi, const SampleMode &mode = {});

enum class Optimizer { Bfgs, NelderMead };

std::string to_string(Optimizer o);
Optimizer optimizer_from_string(const std::string &name);

struct VqlsConfig {
    int n = 2;
    /// Defaults to n when negative.
    int layers = -1;
    bool shots = false;
    std::uint64_t shot_count = 10000;
    std::uint64_t seed = 7;
    /// Bfgs in exact mode, NelderMead in shots mode when unset.
    std::optional<Optimizer> optimizer;
    int max_iterations = 2000;
    double threshold = 1e-4;
    std::vector<double> theta0;
    double init_scale = 0.3;
};

struct TracePoint {
    int iter = 0;
    double cost = 0.0;
};

struct VqlsReport {
    std::string problem;
    std::string provenance;
    std::string mode;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string optimizer;
    std::vector<TracePoint> trace;
    std::vector<double> theta;
    double cost = 0.0;
    double fidelity = 0.0;
    bool converged = false;
    int iterations = 0;
    double wall_time = 0.0;
};

/// 1-D Dirichlet Poisson problem with u = sin(pi x).
VqlsProblem dirichlet_sine_problem(int n);

VqlsReport optimize(const VqlsConfig &config);
std::string to_json(const VqlsReport &r);

/// Unit gate weights. |S_n| = n |T3| and |C(0; S_n)| = |X| + |S_{n+1}|.
struct CostModel {
    double x = 1.0;
    double h = 1.0;
    double cnot = 1.0;
    double t3 = 6.0;
};

struct CostComparison {
    int n = 0;
    double controlled_shift = 0.0;
    double mcz_n1 = 0.0;
    double mcz_n = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double excess = 0.0;
    /// Excess summed over the n local-cost observables.
    double aggregate = 0.0;
    bool in_regime = true;
};

CostComparison cost_compare(int n, const CostModel &model);
std::string to_json(const CostComparison &c);

}  // namespace plcu

#endif
