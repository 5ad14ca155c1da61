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
#include <numeric>
#include <set>

#include "plcu/circuit.hpp"
#include "plcu/error.hpp"

namespace plcu {

namespace {

// Synthesis first produces abstract operations, then lowers them to gates.
// Multicontrol operations carry a preferred list of borrowed qubits.
struct Op {
    enum Kind { X, Z, H, MCX, MCZ } kind;
    std::vector<int> q;
    std::vector<int> hint;
    bool keep = false;
};

using Ops = std::vector<Op>;

Op op_x(int q) {
    return {Op::X, {q}, {}, false};
}

Op op_cx(int c, int t) {
    return {Op::MCX, {c, t}, {}, false};
}

Op op_ccx(int c0, int c1, int t) {
    return {Op::MCX, {c0, c1, t}, {}, false};
}

Op op_mcx(std::vector<int> controls, int t, std::vector<int> hint) {
    controls.push_back(t);
    return {Op::MCX, std::move(controls), std::move(hint), false};
}

void append(Ops &a, const Ops &b) {
    a.insert(a.end(), b.begin(), b.end());
}

Ops reversed(Ops ops) {
    std::reverse(ops.begin(), ops.end());
    return ops;
}

bool contains(const std::vector<int> &v, int q) {
    return std::find(v.begin(), v.end(), q) != v.end();
}

void emit(std::vector<Gate> &out, GateKind kind, std::vector<int> qubits, bool in_mcz) {
    out.push_back(Gate{kind, std::move(qubits), in_mcz});
}

/// Toffoli-level multicontrol NOT over dirty borrowed qubits.
void emit_mcx(std::vector<Gate> &out, const std::vector<int> &ctrls, int t, const std::vector<int> &borrowed,
              bool in_mcz) {
    const std::size_t m = ctrls.size();
    if (m == 0) {
        emit(out, GateKind::X, {t}, in_mcz);
        return;
    }
    if (m == 1) {
        emit(out, GateKind::CNOT, {ctrls[0], t}, in_mcz);
        return;
    }
    if (m == 2) {
        emit(out, GateKind::Toffoli, {ctrls[0], ctrls[1], t}, in_mcz);
        return;
    }
    std::vector<int> b;
    for (int q : borrowed) {
        if (!contains(ctrls, q) && q != t && !contains(b, q)) {
            b.push_back(q);
        }
    }
    require(!b.empty(), ErrorKind::InvalidArgument,
            "multicontrol NOT with " + std::to_string(m) + " controls needs a borrowed qubit");

    if (b.size() >= m - 2) {
        // Ladder: the two halves each toggle t by c-products, the repeated
        // pass cancels the garbage left on the borrowed qubits.
        std::vector<std::vector<int>> mid;
        for (std::size_t i = m - 2; i >= 2; i--) {
            mid.push_back({ctrls[i], b[i - 2], b[i - 1]});
        }
        std::vector<int> top = {ctrls[m - 1], b[m - 3], t};
        std::vector<int> base = {ctrls[0], ctrls[1], b[0]};
        for (int pass = 0; pass < 2; pass++) {
            emit(out, GateKind::Toffoli, top, in_mcz);
            for (const auto &g : mid) {
                emit(out, GateKind::Toffoli, g, in_mcz);
            }
            emit(out, GateKind::Toffoli, base, in_mcz);
            for (auto it = mid.rbegin(); it != mid.rend(); ++it) {
                emit(out, GateKind::Toffoli, *it, in_mcz);
            }
        }
        return;
    }

    // One borrowed qubit: split the controls and conjugate.
    int a = b[0];
    std::size_t m1 = (m + 1) / 2;
    std::vector<int> g1(ctrls.begin(), ctrls.begin() + static_cast<long>(m1));
    std::vector<int> g2(ctrls.begin() + static_cast<long>(m1), ctrls.end());
    std::vector<int> others(b.begin() + 1, b.end());
    std::vector<int> pool1 = g2;
    pool1.push_back(t);
    pool1.insert(pool1.end(), others.begin(), others.end());
    std::vector<int> c2 = g2;
    c2.push_back(a);
    std::vector<int> pool2 = g1;
    pool2.insert(pool2.end(), others.begin(), others.end());
    std::vector<Gate> p1;
    std::vector<Gate> p2;
    emit_mcx(p1, g1, a, pool1, in_mcz);
    emit_mcx(p2, c2, t, pool2, in_mcz);
    for (int rep = 0; rep < 2; rep++) {
        out.insert(out.end(), p1.begin(), p1.end());
        out.insert(out.end(), p2.begin(), p2.end());
    }
}

std::vector<int> free_qubits(const std::vector<int> &used, int width) {
    std::vector<int> out;
    for (int q = 0; q < width; q++) {
        if (!contains(used, q)) {
            out.push_back(q);
        }
    }
    return out;
}

void lower_mcx(std::vector<Gate> &out, const std::vector<int> &q, const std::vector<int> &hint, bool keep,
               int width, bool in_mcz) {
    std::vector<int> ctrls(q.begin(), q.end() - 1);
    int t = q.back();
    if (ctrls.size() >= 3) {
        if (keep) {
            emit(out, GateKind::MCX, q, in_mcz);
            return;
        }
        std::vector<int> pool;
        for (int b : hint) {
            if (!contains(q, b)) {
                pool.push_back(b);
            }
        }
        if (pool.empty()) {
            pool = free_qubits(q, width);
        }
        if (pool.empty()) {
            emit(out, GateKind::MCX, q, in_mcz);
            return;
        }
        emit_mcx(out, ctrls, t, pool, in_mcz);
        return;
    }
    emit_mcx(out, ctrls, t, {}, in_mcz);
}

std::vector<Gate> lower(const Ops &ops, int width) {
    std::vector<Gate> out;
    for (const auto &op : ops) {
        switch (op.kind) {
            case Op::X:
                emit(out, GateKind::X, op.q, false);
                break;
            case Op::Z:
                emit(out, GateKind::Z, op.q, false);
                break;
            case Op::H:
                emit(out, GateKind::H, op.q, false);
                break;
            case Op::MCX:
                lower_mcx(out, op.q, op.hint, op.keep, width, false);
                break;
            case Op::MCZ: {
                int t = op.q.back();
                if (op.q.size() == 1) {
                    emit(out, GateKind::Z, {t}, true);
                    break;
                }
                emit(out, GateKind::H, {t}, true);
                lower_mcx(out, op.q, op.hint, op.keep, width, true);
                emit(out, GateKind::H, {t}, true);
                break;
            }
        }
    }
    return out;
}

/// b += a over N bits (LSB-first lists), carry-out XORed into z when z >= 0.
/// Ancilla-free ripple adder.
Ops ripple_add(const std::vector<int> &a, const std::vector<int> &b, int z) {
    const std::size_t n = a.size();
    Ops g;
    if (n == 1) {
        if (z >= 0) {
            g.push_back(op_ccx(a[0], b[0], z));
        }
        g.push_back(op_cx(a[0], b[0]));
        return g;
    }
    for (std::size_t i = 1; i < n; i++) {
        g.push_back(op_cx(a[i], b[i]));
    }
    if (z >= 0) {
        g.push_back(op_cx(a[n - 1], z));
    }
    for (std::size_t i = n - 2; i >= 1; i--) {
        g.push_back(op_cx(a[i], a[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < n; i++) {
        g.push_back(op_ccx(b[i], a[i], a[i + 1]));
    }
    if (z >= 0) {
        g.push_back(op_ccx(b[n - 1], a[n - 1], z));
    }
    for (std::size_t i = n - 1; i >= 1; i--) {
        g.push_back(op_cx(a[i], b[i]));
        g.push_back(op_ccx(b[i - 1], a[i - 1], a[i]));
    }
    for (std::size_t i = 1; i + 1 < n; i++) {
        g.push_back(op_cx(a[i], a[i + 1]));
    }
    for (std::size_t i = 0; i < n; i++) {
        g.push_back(op_cx(a[i], b[i]));
    }
    return g;
}

/// R += 1 using at least |R| - 1 dirty qubits G. Subtracting G twice with
/// G complemented in between adds one.
Ops increment_dirty(const std::vector<int> &r, const std::vector<int> &g) {
    const std::size_t k = r.size();
    if (k == 1) {
        return {op_x(r[0])};
    }
    if (k == 2) {
        return {op_cx(r[0], r[1]), op_x(r[0])};
    }
    std::vector<int> gs(g.begin(), g.begin() + static_cast<long>(k - 1));
    std::vector<int> low(r.begin(), r.end() - 1);
    Ops sub = reversed(ripple_add(gs, low, r.back()));
    Ops nots;
    for (int q : gs) {
        nots.push_back(op_x(q));
    }
    Ops out;
    append(out, sub);
    append(out, nots);
    append(out, sub);
    append(out, nots);
    out.push_back(op_x(r.back()));
    return out;
}

/// H += 1 when every qubit of L is set; a is dirty.
Ops controlled_increment_dirty(const std::vector<int> &h, int a, const std::vector<int> &l) {
    Op t = op_mcx(l, a, h);
    std::vector<int> reg = {a};
    reg.insert(reg.end(), h.begin(), h.end());
    Ops inc = increment_dirty(reg, l);
    inc.push_back(op_x(a));
    Ops spread;
    for (int q : h) {
        spread.push_back(op_cx(a, q));
    }
    Ops out;
    append(out, spread);
    out.push_back(t);
    append(out, inc);
    out.push_back(t);
    append(out, reversed(inc));
    append(out, spread);
    return out;
}

Ops increment_cascade(const std::vector<int> &r) {
    Ops out;
    for (std::size_t j = r.size() - 1; j >= 1; j--) {
        Op op = op_mcx(std::vector<int>(r.begin(), r.begin() + static_cast<long>(j)), r[j], {});
        op.keep = true;
        out.push_back(op);
    }
    out.push_back(op_x(r[0]));
    return out;
}

/// R (LSB first) += 1 with one extra qubit in any state.
Ops increment_ops(const std::vector<int> &r, int extra) {
    const std::size_t n = r.size();
    if (extra < 0) {
        return increment_cascade(r);
    }
    if (n <= 2) {
        Ops out;
        for (std::size_t j = n - 1; j >= 1; j--) {
            out.push_back(op_mcx(std::vector<int>(r.begin(), r.begin() + static_cast<long>(j)), r[j], {extra}));
        }
        out.push_back(op_x(r[0]));
        return out;
    }
    std::size_t m = (n + 1) / 2;
    std::vector<int> low(r.begin(), r.begin() + static_cast<long>(m));
    std::vector<int> high(r.begin() + static_cast<long>(m), r.end());
    Ops out = controlled_increment_dirty(high, extra, low);
    std::vector<int> pool = high;
    pool.push_back(extra);
    append(out, increment_dirty(low, pool));
    return out;
}

std::vector<int> span_lsb_first(int first, int count) {
    std::vector<int> r(count);
    for (int i = 0; i < count; i++) {
        r[i] = first + count - 1 - i;
    }
    return r;
}

Ops cminus_ops(int first, int count) {
    Ops b;
    for (int t = first + 1; t < first + count; t++) {
        b.push_back(op_cx(first, t));
    }
    std::vector<int> zs(count - 1);
    std::iota(zs.begin(), zs.end(), first + 1);
    Ops out;
    out.push_back(op_x(first));
    append(out, b);
    out.push_back({Op::MCZ, zs, {first}, false});
    out.push_back(op_x(first));
    append(out, b);
    out.push_back(op_x(first));
    return out;
}

struct SynthContext {
    int width = 0;
    int data_width = 0;
    int ancilla = -1;
    std::vector<int> support;

    /// A qubit outside `span`, preferring the term's own support, then other
    /// data qubits, then the ancilla.
    int borrowed_outside(int first, int count) const {
        auto outside = [&](int q) { return q < first || q >= first + count; };
        for (int q : support) {
            if (outside(q)) {
                return q;
            }
        }
        for (int q = 0; q < data_width; q++) {
            if (outside(q)) {
                return q;
            }
        }
        return ancilla;
    }
};

Ops factor_ops(const Factor &f, const SynthContext &ctx, int &phase) {
    Ops out;
    switch (f.kind) {
        case FactorKind::Identity:
            break;
        case FactorKind::XString:
            for (int q = f.first; q < f.first + f.count; q++) {
                out.push_back(op_x(q));
            }
            break;
        case FactorKind::XAt:
            out.push_back(op_x(f.first));
            break;
        case FactorKind::ZAt:
            out.push_back({Op::Z, {f.first}, {}, false});
            break;
        case FactorKind::HAt:
            out.push_back({Op::H, {f.first}, {}, false});
            break;
        case FactorKind::Increment:
            out = increment_ops(span_lsb_first(f.first, f.count), ctx.borrowed_outside(f.first, f.count));
            break;
        case FactorKind::Decrement:
            out = reversed(increment_ops(span_lsb_first(f.first, f.count), ctx.borrowed_outside(f.first, f.count)));
            break;
        case FactorKind::CMinus:
            require(f.count >= 2, ErrorKind::Dimension, "C^- needs at least two qubits");
            out = cminus_ops(f.first, f.count);
            phase = -phase;
            break;
        case FactorKind::MultiZ: {
            std::vector<int> zs(f.count);
            std::iota(zs.begin(), zs.end(), f.first);
            int b = ctx.borrowed_outside(f.first, f.count);
            out.push_back({Op::MCZ, zs, b >= 0 ? std::vector<int>{b} : std::vector<int>{}, false});
            break;
        }
        case FactorKind::BBlock:
            for (int t = f.first + 1; t < f.first + f.count; t++) {
                out.push_back(op_cx(f.first, t));
            }
            break;
    }
    return out;
}

std::vector<int> expr_support(const UnitaryExpr &expr) {
    std::set<int> s;
    for (const auto &f : expr.factors) {
        if (f.kind == FactorKind::Identity) {
            continue;
        }
        for (int q = f.first; q < f.first + f.count; q++) {
            s.insert(q);
        }
    }
    return {s.begin(), s.end()};
}

Circuit make_circuit(int data_width, bool ancilla) {
    Circuit c;
    c.data_width = data_width;
    c.ancilla = ancilla;
    c.width = data_width + (ancilla ? 1 : 0);
    return c;
}

Op add_control(Op op, int control) {
    switch (op.kind) {
        case Op::X:
            return op_cx(control, op.q[0]);
        case Op::Z:
            return {Op::MCZ, {control, op.q[0]}, {}, false};
        case Op::H:
            fail(ErrorKind::InvalidArgument, "controlled Hadamard factors are not supported");
        case Op::MCX:
        case Op::MCZ:
            op.q.insert(op.q.begin(), control);
            return op;
    }
    return op;
}

}  // namespace

Circuit synth_mcx(std::span<const int> controls, int target, std::span<const int> borrowed, int width) {
    require(!controls.empty(), ErrorKind::InvalidArgument, "multicontrol NOT needs at least one control");
    std::vector<int> ctrls(controls.begin(), controls.end());
    std::vector<int> pool(borrowed.begin(), borrowed.end());
    Circuit c = make_circuit(width, false);
    emit_mcx(c.gates, ctrls, target, pool, false);
    c.validate();
    return c;
}

Circuit synth_mcz(int first, int k, int width, std::optional<int> borrowed) {
    require(k >= 1, ErrorKind::InvalidArgument, "multicontrol Z needs at least one qubit");
    require(first >= 0 && first + k <= width, ErrorKind::Dimension, "multicontrol Z span out of range");
    require(k < 4 || borrowed.has_value(), ErrorKind::InvalidArgument,
            "multicontrol Z on 4 or more qubits needs a borrowed qubit");
    std::vector<int> zs(k);
    std::iota(zs.begin(), zs.end(), first);
    std::vector<int> hint;
    if (borrowed) {
        require(*borrowed >= 0 && *borrowed < width && (*borrowed < first || *borrowed >= first + k),
                ErrorKind::InvalidArgument, "borrowed qubit must lie outside the span");
        hint.push_back(*borrowed);
    }
    Circuit c = make_circuit(width, false);
    Ops ops = {{Op::MCZ, zs, hint, false}};
    c.gates = lower(ops, 0);
    c.validate();
    return c;
}

Circuit synth_increment(int n, bool ancilla) {
    require(n >= 1, ErrorKind::InvalidArgument, "increment needs n >= 1");
    Circuit c = make_circuit(n, ancilla && n >= 2);
    c.gates = lower(increment_ops(span_lsb_first(0, n), c.ancilla ? n : -1), c.width);
    c.validate();
    return c;
}

Circuit synth_decrement(int n, bool ancilla) {
    return synth_increment(n, ancilla).inverse();
}

Circuit synth_cminus(int n) {
    require(n >= 2, ErrorKind::Dimension, "C^- needs n >= 2");
    Circuit c = make_circuit(n, false);
    c.gates = lower(cminus_ops(0, n), n);
    c.phase = -1;
    c.validate();
    return c;
}

Circuit synth_expr(const UnitaryExpr &expr, bool ancilla) {
    expr.validate();
    Circuit c = make_circuit(expr.width, ancilla);
    SynthContext ctx{c.width, expr.width, ancilla ? expr.width : -1, expr_support(expr)};
    Ops ops;
    int phase = 1;
    for (auto it = expr.factors.rbegin(); it != expr.factors.rend(); ++it) {
        append(ops, factor_ops(*it, ctx, phase));
    }
    c.gates = lower(ops, c.width);
    c.phase = phase;
    c.validate();
    return c;
}

Circuit controlled_expr(const UnitaryExpr &expr) {
    expr.validate();
    const int n = expr.width;
    Circuit c = make_circuit(n + 1, true);
    const int control = 0;
    const int helper = n + 1;
    SynthContext ctx{c.width, n + 1, helper, {}};
    for (int q : expr_support(expr)) {
        ctx.support.push_back(q + 1);
    }
    Ops ops;
    int phase = 1;
    for (auto it = expr.factors.rbegin(); it != expr.factors.rend(); ++it) {
        Factor f = *it;
        f.first += 1;
        if (f.kind == FactorKind::Increment || f.kind == FactorKind::Decrement) {
            // Increment of (R : control) with the control as least significant
            // bit, followed by X on the control.
            std::vector<int> reg = {control};
            std::vector<int> r = span_lsb_first(f.first, f.count);
            reg.insert(reg.end(), r.begin(), r.end());
            Ops inc = increment_ops(reg, helper);
            inc.push_back(op_x(control));
            append(ops, f.kind == FactorKind::Increment ? inc : reversed(inc));
            continue;
        }
        for (const auto &op : factor_ops(f, ctx, phase)) {
            ops.push_back(add_control(op, control));
        }
    }
    c.gates = lower(ops, c.width);
    c.phase = phase;
    c.validate();
    return c;
}

Circuit expand_mcx(const Circuit &c) {
    Circuit out = c;
    out.gates.clear();
    for (const auto &g : c.gates) {
        if (g.kind != GateKind::MCX) {
            out.gates.push_back(g);
            continue;
        }
        std::vector<int> pool = free_qubits(g.qubits, c.width);
        require(!pool.empty(), ErrorKind::InvalidArgument, "no borrowed qubit available to expand MCX");
        std::vector<int> ctrls(g.qubits.begin(), g.qubits.end() - 1);
        emit_mcx(out.gates, ctrls, g.target(), pool, g.in_mcz);
    }
    return out;
}

}  // namespace plcu
