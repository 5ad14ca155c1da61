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

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"
#include "plcu/circuit.hpp"
#include "plcu/error.hpp"

namespace plcu {

namespace {

struct GateName {
    GateKind kind;
    const char *name;
    int arity;  // -1: variable
};

constexpr GateName kGateNames[] = {
    {GateKind::X, "X", 1},          {GateKind::Z, "Z", 1},
    {GateKind::H, "H", 1},          {GateKind::CNOT, "CNOT", 2},
    {GateKind::Toffoli, "TOFFOLI", 3}, {GateKind::MCX, "MCX", -1},
};

int arity(GateKind kind) {
    for (const auto &g : kGateNames) {
        if (g.kind == kind) {
            return g.arity;
        }
    }
    return -1;
}

}  // namespace

std::string to_string(GateKind kind) {
    for (const auto &g : kGateNames) {
        if (g.kind == kind) {
            return g.name;
        }
    }
    return "?";
}

GateKind gate_kind_from_string(const std::string &name) {
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (upper == "CX") {
        return GateKind::CNOT;
    }
    if (upper == "CCX") {
        return GateKind::Toffoli;
    }
    for (const auto &g : kGateNames) {
        if (upper == g.name) {
            return g.kind;
        }
    }
    fail(ErrorKind::Parse, "unknown gate kind '" + name + "'");
}

void Circuit::add(Gate g) {
    gates.push_back(std::move(g));
}

void Circuit::append(const Circuit &other) {
    require(other.width <= width, ErrorKind::WidthMismatch, "appended circuit is wider than the target");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    phase *= other.phase;
}

Circuit Circuit::inverse() const {
    Circuit out = *this;
    std::reverse(out.gates.begin(), out.gates.end());
    return out;
}

void Circuit::validate() const {
    require(width >= 1, ErrorKind::Dimension, "circuit width must be positive");
    require(data_width >= 1 && data_width <= width, ErrorKind::Dimension, "data width out of range");
    require(phase == 1 || phase == -1, ErrorKind::InvalidArgument, "phase must be +1 or -1");
    for (const auto &g : gates) {
        int a = arity(g.kind);
        require(a < 0 ? g.qubits.size() >= 2 : static_cast<int>(g.qubits.size()) == a, ErrorKind::InvalidArgument,
                to_string(g.kind) + " has the wrong number of qubits");
        std::set<int> seen;
        for (int q : g.qubits) {
            require(q >= 0 && q < width, ErrorKind::Dimension,
                    to_string(g.kind) + " qubit " + std::to_string(q) + " out of range");
            require(seen.insert(q).second, ErrorKind::InvalidArgument, to_string(g.kind) + " repeats a qubit");
        }
    }
}

std::size_t GateCount::mcx() const {
    std::size_t total = 0;
    for (const auto &[_, c] : mcx_by_controls) {
        total += c;
    }
    return total;
}

std::size_t GateCount::total() const {
    return x + z + h + cnot + toffoli + mcx();
}

std::size_t GateCount::linear_budget() const {
    return x + cnot + toffoli;
}

std::size_t circuit_depth(const Circuit &c) {
    std::vector<std::size_t> level(static_cast<std::size_t>(c.width), 0);
    std::size_t depth = 0;
    for (const auto &g : c.gates) {
        std::size_t layer = 0;
        for (int q : g.qubits) {
            layer = std::max(layer, level[q]);
        }
        layer++;
        for (int q : g.qubits) {
            level[q] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

GateCount count_resources(const Circuit &c) {
    GateCount gc;
    bool has_mcx = false;
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
                gc.x++;
                break;
            case GateKind::Z:
                gc.z++;
                if (!g.in_mcz) {
                    gc.z_outside_mcz++;
                }
                break;
            case GateKind::H:
                gc.h++;
                break;
            case GateKind::CNOT:
                gc.cnot++;
                break;
            case GateKind::Toffoli:
                gc.toffoli++;
                break;
            case GateKind::MCX:
                gc.mcx_by_controls[static_cast<int>(g.qubits.size()) - 1]++;
                has_mcx = true;
                break;
        }
    }
    gc.depth = circuit_depth(c);
    gc.ancilla = c.ancilla ? 1 : 0;
    if (!has_mcx) {
        gc.expanded_depth = gc.depth;
    } else {
        try {
            gc.expanded_depth = circuit_depth(expand_mcx(c));
        } catch (const Error &) {
            gc.expanded_depth.reset();
        }
    }
    return gc;
}

std::string export_circuit(const Circuit &c, const std::string &format) {
    if (format == "json") {
        nlohmann::json j;
        j["width"] = c.width;
        j["data_width"] = c.data_width;
        j["ancilla"] = c.ancilla;
        j["phase"] = c.phase;
        j["gates"] = nlohmann::json::array();
        for (const auto &g : c.gates) {
            j["gates"].push_back({{"kind", to_string(g.kind)}, {"qubits", g.qubits}});
        }
        return j.dump();
    }
    require(format == "text", ErrorKind::InvalidArgument, "circuit format must be text or json");
    std::ostringstream out;
    out << "# width " << c.width << " data " << c.data_width << " ancilla " << (c.ancilla ? 1 : 0) << " phase "
        << c.phase << '\n';
    for (const auto &g : c.gates) {
        out << to_string(g.kind);
        for (int q : g.qubits) {
            out << " q" << q;
        }
        out << '\n';
    }
    return out.str();
}

Circuit import_circuit(const std::string &text, const std::string &format) {
    Circuit c;
    if (format == "json") {
        try {
            auto j = nlohmann::json::parse(text);
            c.width = j.at("width").get<int>();
            c.ancilla = j.value("ancilla", false);
            c.data_width = j.value("data_width", c.width - (c.ancilla ? 1 : 0));
            c.phase = j.value("phase", 1);
            for (const auto &jg : j.at("gates")) {
                c.gates.push_back(
                    Gate{gate_kind_from_string(jg.at("kind").get<std::string>()), jg.at("qubits").get<std::vector<int>>()});
            }
        } catch (const nlohmann::json::exception &e) {
            fail(ErrorKind::Parse, std::string("circuit json: ") + e.what());
        }
        c.validate();
        return c;
    }
    require(format == "text", ErrorKind::InvalidArgument, "circuit format must be text or json");
    std::istringstream in(text);
    std::string line;
    int max_qubit = -1;
    bool header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            continue;
        }
        if (word[0] == '#') {
            std::string key;
            int value = 0;
            while (ls >> key >> value) {
                if (key == "width") {
                    c.width = value;
                    header = true;
                } else if (key == "data") {
                    c.data_width = value;
                } else if (key == "ancilla") {
                    c.ancilla = value != 0;
                } else if (key == "phase") {
                    c.phase = value;
                }
            }
            continue;
        }
        Gate g{gate_kind_from_string(word), {}};
        std::string tok;
        while (ls >> tok) {
            if (tok.size() < 2 || tok[0] != 'q') {
                fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected q<index>, got '" + tok + "'");
            }
            try {
                g.qubits.push_back(std::stoi(tok.substr(1)));
            } catch (const std::exception &) {
                fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad qubit '" + tok + "'");
            }
            max_qubit = std::max(max_qubit, g.qubits.back());
        }
        c.gates.push_back(std::move(g));
    }
    if (!header) {
        c.width = std::max(max_qubit + 1, 1);
    }
    if (c.data_width == 0) {
        c.data_width = c.width - (c.ancilla ? 1 : 0);
    }
    c.validate();
    return c;
}

std::string resource_csv_header() {
    return "decomposition,n,term,X,Z,H,CNOT,Toffoli,depth,ancilla\n";
}

std::string resource_csv_rows(const std::string &name, int n, const LcuDecomposition &dec, bool ancilla) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dec.terms.size(); i++) {
        GateCount gc = count_resources(synth_expr(dec.terms[i].expr, ancilla));
        out << name << ',' << n << ',' << i << ',' << gc.x << ',' << gc.z << ',' << gc.h << ',' << gc.cnot << ','
            << gc.toffoli << ',' << gc.depth << ',' << gc.ancilla << '\n';
    }
    return out.str();
}

}  // namespace plcu
