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

#include "plcu/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "plcu/error.hpp"

namespace plcu {

namespace {

constexpr int kMaxSimWidth = 24;

}  // namespace

StateVector::StateVector(int width) : width_(width) {
    require(width >= 1 && width <= kMaxSimWidth, ErrorKind::Dimension, "statevector width out of range");
    amp_.assign(std::size_t{1} << width, Amplitude{0.0, 0.0});
    amp_[0] = 1.0;
}

StateVector StateVector::basis(int width, std::uint64_t index) {
    StateVector s(width);
    require(index < s.size(), ErrorKind::Dimension, "basis index out of range");
    s.amp_[0] = 0.0;
    s.amp_[index] = 1.0;
    return s;
}

StateVector StateVector::from_real(std::span<const double> amplitudes) {
    std::size_t n = amplitudes.size();
    require(n >= 2 && (n & (n - 1)) == 0, ErrorKind::Dimension, "amplitude count must be a power of two");
    double nrm = norm2(amplitudes);
    require(nrm > 0.0, ErrorKind::InvalidArgument, "cannot normalize a zero vector");
    StateVector s(std::countr_zero(n));
    for (std::size_t i = 0; i < n; i++) {
        s.amp_[i] = amplitudes[i] / nrm;
    }
    return s;
}

void StateVector::apply(const Gate &g) {
    const std::uint64_t t = mask(g.target());
    std::uint64_t cmask = 0;
    for (int q : g.controls()) {
        cmask |= mask(q);
    }
    const std::size_t dim = amp_.size();
    switch (g.kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::Toffoli:
        case GateKind::MCX:
            for (std::size_t i = 0; i < dim; i++) {
                if ((i & t) == 0 && (i & cmask) == cmask) {
                    std::swap(amp_[i], amp_[i | t]);
                }
            }
            break;
        case GateKind::Z:
            for (std::size_t i = 0; i < dim; i++) {
                if (i & t) {
                    amp_[i] = -amp_[i];
                }
            }
            break;
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; i++) {
                if (i & t) {
                    continue;
                }
                Amplitude a = amp_[i];
                Amplitude b = amp_[i | t];
                amp_[i] = r * (a + b);
                amp_[i | t] = r * (a - b);
            }
            break;
        }
    }
}

void StateVector::apply_ry(int q, double theta) {
    require(q >= 0 && q < width_, ErrorKind::Dimension, "rotation qubit out of range");
    const std::uint64_t t = mask(q);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::size_t i = 0; i < amp_.size(); i++) {
        if (i & t) {
            continue;
        }
        Amplitude a = amp_[i];
        Amplitude b = amp_[i | t];
        amp_[i] = c * a - s * b;
        amp_[i | t] = s * a + c * b;
    }
}

void StateVector::apply_reflection(int first, int count, std::span<const double> w) {
    require(first >= 0 && count >= 1 && first + count <= width_, ErrorKind::Dimension, "register out of range");
    const std::size_t reg = std::size_t{1} << count;
    require(w.size() == reg, ErrorKind::Dimension, "reflection vector length must be 2^count");
    const int shift = width_ - first - count;
    const std::size_t low = std::size_t{1} << shift;
    const std::size_t high = amp_.size() / (reg * low);
    for (std::size_t hi = 0; hi < high; hi++) {
        for (std::size_t lo = 0; lo < low; lo++) {
            Amplitude proj = 0.0;
            for (std::size_t r = 0; r < reg; r++) {
                proj += w[r] * amp_[(hi * reg + r) * low + lo];
            }
            for (std::size_t r = 0; r < reg; r++) {
                amp_[(hi * reg + r) * low + lo] -= 2.0 * w[r] * proj;
            }
        }
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amp_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::vector<double> StateVector::real() const {
    std::vector<double> out(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); i++) {
        out[i] = amp_[i].real();
    }
    return out;
}

StateVector StateVector::embed(int lead, int extra) const {
    require(lead >= 0 && extra >= 0, ErrorKind::InvalidArgument, "embedding sizes must be non-negative");
    StateVector out(width_ + lead + extra);
    out.amp_[0] = 0.0;
    for (std::size_t i = 0; i < amp_.size(); i++) {
        out.amp_[i << extra] = amp_[i];
    }
    return out;
}

StateVector run(const Circuit &c, StateVector s) {
    require(c.width == s.width(), ErrorKind::WidthMismatch, "circuit and state widths differ");
    for (const auto &g : c.gates) {
        s.apply(g);
    }
    return s;
}

DenseMatrix circuit_matrix(const Circuit &c, double leak_tolerance) {
    require(c.width <= 14, ErrorKind::Dimension, "circuit too wide for dense realization");
    const int extra = c.width - c.data_width;
    const std::size_t dim = std::size_t{1} << c.data_width;
    DenseMatrix out(dim, dim);
    for (std::size_t j = 0; j < dim; j++) {
        StateVector s = run(c, StateVector::basis(c.width, j << extra));
        double leak = 0.0;
        for (std::size_t i = 0; i < s.size(); i++) {
            std::size_t low = i & ((std::size_t{1} << extra) - 1);
            if (low != 0) {
                leak += std::norm(s[i]);
            } else {
                out(i >> extra, j) = s[i].real();
            }
        }
        if (std::sqrt(leak) > leak_tolerance) {
            std::ostringstream msg;
            msg << "ancilla not restored for data basis state " << j << " (leaked amplitude norm " << std::sqrt(leak)
                << ")";
            fail(ErrorKind::AncillaLeak, msg.str());
        }
    }
    return out;
}

double expectation_z(const StateVector &s, int j) {
    require(j >= 0 && j < s.width(), ErrorKind::Dimension, "qubit index out of range");
    const std::uint64_t t = std::uint64_t{1} << (s.width() - 1 - j);
    double e = 0.0;
    for (std::size_t i = 0; i < s.size(); i++) {
        e += (i & t) ? -std::norm(s[i]) : std::norm(s[i]);
    }
    return e;
}

double hadamard_test(const StateVector &prep, const std::function<void(StateVector &)> &body, const SampleMode &mode) {
    StateVector s = prep.embed(1, 1);
    s.apply(Gate{GateKind::H, {0}});
    body(s);
    s.apply(Gate{GateKind::H, {0}});
    double p0 = 0.0;
    const std::size_t half = s.size() / 2;
    for (std::size_t i = 0; i < half; i++) {
        p0 += std::norm(s[i]);
    }
    p0 = std::clamp(p0, 0.0, 1.0);
    if (!mode.shots) {
        return 2.0 * p0 - 1.0;
    }
    require(mode.count > 0 && mode.rng != nullptr, ErrorKind::InvalidArgument,
            "shots mode needs a positive shot count and a generator");
    std::binomial_distribution<std::uint64_t> dist(mode.count, p0);
    double freq = static_cast<double>(dist(*mode.rng)) / static_cast<double>(mode.count);
    return 2.0 * freq - 1.0;
}

double hadamard_test(const Circuit &controlled, const StateVector &prep, const SampleMode &mode) {
    require(controlled.width == prep.width() + 2, ErrorKind::WidthMismatch,
            "controlled circuit must have one control and one helper qubit around the data");
    return hadamard_test(
        prep,
        [&](StateVector &s) {
            for (const auto &g : controlled.gates) {
                s.apply(g);
            }
        },
        mode);
}

std::string to_json(const StateVector &s) {
    nlohmann::json j;
    j["width"] = s.width();
    std::vector<double> re;
    std::vector<double> im;
    for (const auto &a : s.amplitudes()) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    j["real"] = re;
    j["imag"] = im;
    return j.dump();
}

}  // namespace plcu
