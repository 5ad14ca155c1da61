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

#ifndef PLCU_CIRCUIT_HPP
#define PLCU_CIRCUIT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plcu/lcu.hpp"

namespace plcu {

enum class GateKind { X, Z, H, CNOT, Toffoli, MCX };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string &name);

/// Qubit list holds controls first and the target last.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> qubits;
    /// Set on gates emitted while expanding a multicontrol-Z.
    bool in_mcz = false;

    int target() const {
        return qubits.back();
    }
    std::span<const int> controls() const {
        return {qubits.data(), qubits.size() - 1};
    }
    bool operator==(const Gate &other) const {
        return kind == other.kind && qubits == other.qubits;
    }
};

/// Data qubits occupy [0, data_width); an ancilla, when present, sits at
/// index data_width and starts and ends in |0>. The realized operator is
/// phase * (product of gates).
struct Circuit {
    int width = 0;
    int data_width = 0;
    bool ancilla = false;
    int phase = 1;
    std::vector<Gate> gates;

    void add(Gate g);
    void append(const Circuit &other);
    /// Gate order reversed; every gate in the set is self-inverse.
    Circuit inverse() const;
    void validate() const;
};

struct GateCount {
    std::size_t x = 0;
    std::size_t z = 0;
    std::size_t h = 0;
    std::size_t cnot = 0;
    std::size_t toffoli = 0;
    std::map<int, std::size_t> mcx_by_controls;
    std::size_t z_outside_mcz = 0;
    std::size_t depth = 0;
    /// Depth after expanding MCX gates; nullopt when no borrowed qubit exists.
    std::optional<std::size_t> expanded_depth;
    int ancilla = 0;

    std::size_t mcx() const;
    std::size_t total() const;
    /// X + CNOT + Toffoli.
    std::size_t linear_budget() const;
};

/// Multicontrol NOT using Toffoli ladders over borrowed (dirty) qubits.
/// Three or more controls need at least one borrowed qubit.
Circuit synth_mcx(std::span<const int> controls, int target, std::span<const int> borrowed, int width);

/// C_k(Z) on qubits [first, first + k). Four or more qubits need a borrowed
/// qubit outside the span.
Circuit synth_mcz(int first, int k, int width, std::optional<int> borrowed);

/// |i> -> |i+1 mod 2^n>. With ancilla the circuit has width n + 1 and a
/// linear gate count; without it an MCX cascade is emitted.
Circuit synth_increment(int n, bool ancilla);
Circuit synth_decrement(int n, bool ancilla);

/// Realizes -C_n^- (phase is set to -1 so the circuit times phase equals C_n^-).
Circuit synth_cminus(int n);

/// Factor circuits in application order (rightmost factor first). With
/// ancilla the width is expr.width + 1; otherwise MCX gates that have no
/// borrowed qubit available stay as primitives.
Circuit synth_expr(const UnitaryExpr &expr, bool ancilla);

/// |0><0| (x) I + |1><1| (x) R with the control on qubit 0, R's data on
/// qubits 1..n and a helper ancilla at n + 1.
Circuit controlled_expr(const UnitaryExpr &expr);

/// Expands MCX primitives in place using qubits outside each gate as
/// borrowed qubits. Throws when a gate has none.
Circuit expand_mcx(const Circuit &c);

std::size_t circuit_depth(const Circuit &c);
GateCount count_resources(const Circuit &c);

std::string export_circuit(const Circuit &c, const std::string &format);
Circuit import_circuit(const std::string &text, const std::string &format);

/// Per-term table with columns decomposition,n,term,X,Z,H,CNOT,Toffoli,depth.
std::string resource_csv_header();
std::string resource_csv_rows(const std::string &name, int n, const LcuDecomposition &dec, bool ancilla);

}  // namespace plcu

#endif
