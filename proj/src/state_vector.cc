// Copyright 2026 The QPS Authors
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

#include "qps/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

namespace qps {

namespace {

constexpr int kMaxQubits = 30;
constexpr int kMaxBlockQubits = 12;
constexpr double kExtractTolerance = 1e-10;
// Below this many outer iterations a gate always runs on the calling thread.
constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;

struct ControlMask {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;

    bool fires(std::uint64_t index) const {
        return (index & mask) == value;
    }
};

ControlMask control_mask(std::span<const Control> controls) {
    ControlMask m;
    for (const auto &c : controls) {
        std::uint64_t bit = std::uint64_t{1} << c.qubit;
        m.mask |= bit;
        if (c.polarity == Polarity::kPositive) {
            m.value |= bit;
        }
    }
    return m;
}

/// Spreads `x` over the bit positions not in `sorted_zero_bits`.
std::uint64_t insert_zero_bits(std::uint64_t x, std::span<const int> sorted_zero_bits) {
    for (int p : sorted_zero_bits) {
        std::uint64_t low = x & ((std::uint64_t{1} << p) - 1);
        x = ((x >> p) << (p + 1)) | low;
    }
    return x;
}

template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body body) {
    if (threads <= 1 || count < kParallelThreshold) {
        body(std::uint64_t{0}, count);
        return;
    }
    std::vector<std::jthread> workers;
    std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; w++) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) {
            break;
        }
        workers.emplace_back([=] { body(lo, hi); });
    }
}

void check_register(const StateVector &state, const QubitRegister &reg) {
    if (reg.offset < 0 || reg.width <= 0 || reg.offset + reg.width > state.num_qubits()) {
        throw std::out_of_range("register " + reg.name + " lies outside the state");
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("state vector supports 0.." + std::to_string(kMaxQubits) + " qubits");
    }
    num_qubits_ = num_qubits;
    amps_.assign(std::size_t{1} << num_qubits, Complex{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    StateVector s;
    s.num_qubits_ = std::countr_zero(amplitudes.size());
    if (s.num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("too many qubits");
    }
    s.amps_ = std::move(amplitudes);
    return s;
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void StateVector::apply(const Gate &gate, unsigned threads) {
    for (Qubit q : gate.qubits()) {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("gate qubit " + std::to_string(q) + " outside state");
        }
    }
    auto ctrl = control_mask(gate.controls);
    Complex *amps = amps_.data();

    if (gate.kind == GateKind::kUnitaryBlock) {
        if (!gate.matrix) {
            throw std::invalid_argument("block '" + gate.label + "' has no matrix and cannot be simulated");
        }
        int k = static_cast<int>(gate.targets.size());
        if (k > kMaxBlockQubits) {
            throw std::invalid_argument("blocks are limited to " + std::to_string(kMaxBlockQubits) + " qubits");
        }
        std::vector<int> sorted(gate.targets.begin(), gate.targets.end());
        std::sort(sorted.begin(), sorted.end());
        std::size_t local_dim = std::size_t{1} << k;
        std::vector<std::uint64_t> offsets(local_dim, 0);
        for (std::size_t local = 0; local < local_dim; local++) {
            for (int t = 0; t < k; t++) {
                if ((local >> t) & 1) {
                    offsets[local] |= std::uint64_t{1} << gate.targets[t];
                }
            }
        }
        const DenseMatrix &m = *gate.matrix;
        std::uint64_t outer = amps_.size() >> k;
        parallel_for(outer, threads, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<Complex> in(local_dim), out(local_dim);
            for (std::uint64_t x = lo; x < hi; x++) {
                std::uint64_t base = insert_zero_bits(x, sorted);
                if (!ctrl.fires(base)) {
                    continue;
                }
                for (std::size_t l = 0; l < local_dim; l++) {
                    in[l] = amps[base | offsets[l]];
                }
                for (std::size_t r = 0; r < local_dim; r++) {
                    Complex acc = 0;
                    auto row = m.row(r);
                    for (std::size_t c = 0; c < local_dim; c++) {
                        acc += row[c] * in[c];
                    }
                    out[r] = acc;
                }
                for (std::size_t l = 0; l < local_dim; l++) {
                    amps[base | offsets[l]] = out[l];
                }
            }
        });
        return;
    }

    double c = 1, s = 0;
    if (gate.kind == GateKind::kRotY) {
        c = std::cos(gate.angle / 2);
        s = std::sin(gate.angle / 2);
    }
    bool is_not = gate.kind != GateKind::kRotY;
    std::uint64_t outer = amps_.size() >> 1;
    for (Qubit t : gate.targets) {
        int pos[1] = {t};
        std::uint64_t bit = std::uint64_t{1} << t;
        parallel_for(outer, threads, [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t x = lo; x < hi; x++) {
                std::uint64_t i0 = insert_zero_bits(x, pos);
                if (!ctrl.fires(i0)) {
                    continue;
                }
                std::uint64_t i1 = i0 | bit;
                Complex a0 = amps[i0];
                Complex a1 = amps[i1];
                if (is_not) {
                    amps[i0] = a1;
                    amps[i1] = a0;
                } else {
                    amps[i0] = c * a0 - s * a1;
                    amps[i1] = s * a0 + c * a1;
                }
            }
        });
    }
}

StateVector apply(const StateVector &state, const Circuit &circuit, unsigned threads) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(circuit.num_qubits()) + " qubits but state has " +
            std::to_string(state.num_qubits()));
    }
    StateVector out = state;
    for (const auto &g : circuit.gates()) {
        out.apply(g, threads);
    }
    return out;
}

StateVector inject_register(const StateVector &state, const QubitRegister &reg, std::span<const Complex> amplitudes) {
    check_register(state, reg);
    std::size_t reg_dim = std::size_t{1} << reg.width;
    if (amplitudes.size() > reg_dim) {
        throw std::invalid_argument("too many amplitudes for register " + reg.name);
    }
    double nrm = 0;
    for (const auto &a : amplitudes) {
        nrm += std::norm(a);
    }
    if (nrm == 0) {
        throw std::invalid_argument("cannot inject a zero vector");
    }
    nrm = std::sqrt(nrm);

    std::uint64_t reg_mask = ((std::uint64_t{1} << reg.width) - 1) << reg.offset;
    for (std::size_t i = 0; i < state.dim(); i++) {
        if ((i & reg_mask) != 0 && std::abs(state[i]) != 0) {
            throw std::invalid_argument("register " + reg.name + " is not in its ground state");
        }
    }

    std::vector<Complex> out(state.dim(), Complex{0, 0});
    for (std::size_t i = 0; i < state.dim(); i++) {
        if ((i & reg_mask) != 0 || state[i] == Complex{0, 0}) {
            continue;
        }
        for (std::size_t v = 0; v < amplitudes.size(); v++) {
            out[i | (static_cast<std::uint64_t>(v) << reg.offset)] = state[i] * amplitudes[v] / nrm;
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

StateVector inject_register(const StateVector &state, const QubitRegister &reg, std::span<const double> amplitudes) {
    std::vector<Complex> c(amplitudes.begin(), amplitudes.end());
    return inject_register(state, reg, std::span<const Complex>(c));
}

PostselectResult postselect(
    const StateVector &state, std::span<const Qubit> qubits, std::span<const int> outcome, double floor) {
    if (qubits.size() != outcome.size()) {
        throw std::invalid_argument("postselect needs one outcome bit per qubit");
    }
    std::vector<Control> pattern;
    for (std::size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k] < 0 || qubits[k] >= state.num_qubits()) {
            throw std::out_of_range("postselected qubit outside state");
        }
        if (outcome[k] != 0 && outcome[k] != 1) {
            throw std::invalid_argument("outcome bits must be 0 or 1");
        }
        pattern.push_back({qubits[k], outcome[k] ? Polarity::kPositive : Polarity::kNegative});
    }
    auto sel = control_mask(pattern);

    double p = 0;
    for (std::size_t i = 0; i < state.dim(); i++) {
        if (sel.fires(i)) {
            p += std::norm(state[i]);
        }
    }
    if (p < floor) {
        throw PostselectionError("postselection impossible: outcome probability " + std::to_string(p));
    }
    double scale = 1 / std::sqrt(p);
    std::vector<Complex> out(state.dim(), Complex{0, 0});
    for (std::size_t i = 0; i < state.dim(); i++) {
        if (sel.fires(i)) {
            out[i] = state[i] * scale;
        }
    }
    return {p, StateVector::from_amplitudes(std::move(out))};
}

std::vector<Complex> extract_register(
    const StateVector &state, const QubitRegister &reg, std::span<const RegisterAssignment> fixed) {
    check_register(state, reg);
    std::uint64_t reg_mask = ((std::uint64_t{1} << reg.width) - 1) << reg.offset;
    std::uint64_t pin_value = 0;
    for (const auto &a : fixed) {
        check_register(state, a.reg);
        std::uint64_t m = ((std::uint64_t{1} << a.reg.width) - 1) << a.reg.offset;
        if (m & reg_mask) {
            throw std::invalid_argument("pinned register " + a.reg.name + " overlaps the extracted register");
        }
        if (a.value >> a.reg.width) {
            throw std::invalid_argument("pinned value does not fit register " + a.reg.name);
        }
        pin_value |= a.value << a.reg.offset;
    }

    std::vector<Complex> out(std::size_t{1} << reg.width, Complex{0, 0});
    double inside = 0, total = 0;
    for (std::size_t i = 0; i < state.dim(); i++) {
        double w = std::norm(state[i]);
        total += w;
        if ((i & ~reg_mask) == pin_value) {
            out[(i & reg_mask) >> reg.offset] = state[i];
            inside += w;
        }
    }
    if (inside == 0) {
        throw std::runtime_error("pinned slice of register " + reg.name + " is empty");
    }
    if (total - inside > kExtractTolerance * total) {
        throw std::runtime_error(
            "register " + reg.name + " is not separable under the pinned assignment (residual mass " +
            std::to_string((total - inside) / total) + ")");
    }
    double scale = 1 / std::sqrt(inside);
    for (auto &a : out) {
        a *= scale;
    }
    return out;
}

double fidelity(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fidelity needs vectors of equal length");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return std::norm(acc);
}

double fidelity(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fidelity needs vectors of equal length");
    }
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        acc += a[i] * b[i];
    }
    return acc * acc;
}

}  // namespace qps
