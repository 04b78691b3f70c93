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

#include "qps/circuit.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qps {

namespace {

constexpr double kUnitaryTolerance = 1e-12;
constexpr std::string_view kAdjointSuffix = "^dag";

std::string adjoint_label(const std::string &label) {
    if (label.size() >= kAdjointSuffix.size() &&
        label.compare(label.size() - kAdjointSuffix.size(), kAdjointSuffix.size(), kAdjointSuffix) == 0) {
        return label.substr(0, label.size() - kAdjointSuffix.size());
    }
    return label + std::string(kAdjointSuffix);
}

void write_qubit_list(std::ostream &out, std::span<const Qubit> qubits) {
    for (std::size_t k = 0; k < qubits.size(); k++) {
        if (k) {
            out << ',';
        }
        out << qubits[k];
    }
}

void write_controls(std::ostream &out, std::span<const Control> controls) {
    if (controls.empty()) {
        return;
    }
    out << " c=";
    for (std::size_t k = 0; k < controls.size(); k++) {
        if (k) {
            out << ',';
        }
        out << controls[k].qubit << (controls[k].polarity == Polarity::kPositive ? '+' : '-');
    }
}

}  // namespace

Qubit QubitRegister::qubit(int bit) const {
    if (bit < 0 || bit >= width) {
        throw std::out_of_range("bit " + std::to_string(bit) + " outside register " + name);
    }
    return offset + bit;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double DenseMatrix::unitarity_error() const {
    double worst = 0;
    for (std::size_t a = 0; a < dim_; a++) {
        for (std::size_t b = a; b < dim_; b++) {
            // (M^dagger M)_ab = sum_r conj(M_ra) M_rb
            Complex acc = 0;
            for (std::size_t r = 0; r < dim_; r++) {
                acc += std::conj((*this)(r, a)) * (*this)(r, b);
            }
            if (a == b) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::kRotY:
            return "RY";
        case GateKind::kPauliX:
            return "X";
        case GateKind::kControlledNot:
            return "CX";
        case GateKind::kUnitaryBlock:
            return "BLOCK";
    }
    throw std::invalid_argument("unknown gate kind");
}

Gate Gate::ry(double angle, std::vector<Qubit> targets, std::vector<Control> controls) {
    Gate g;
    g.kind = GateKind::kRotY;
    g.angle = angle;
    g.targets = std::move(targets);
    g.controls = std::move(controls);
    return g;
}

Gate Gate::x(std::vector<Qubit> targets) {
    Gate g;
    g.kind = GateKind::kPauliX;
    g.targets = std::move(targets);
    return g;
}

Gate Gate::cnot(std::vector<Qubit> targets, std::vector<Control> controls) {
    Gate g;
    g.kind = GateKind::kControlledNot;
    g.targets = std::move(targets);
    g.controls = std::move(controls);
    return g;
}

Gate Gate::block(std::string label, std::vector<Qubit> targets, std::shared_ptr<const DenseMatrix> matrix) {
    Gate g;
    g.kind = GateKind::kUnitaryBlock;
    g.label = std::move(label);
    g.targets = std::move(targets);
    g.matrix = std::move(matrix);
    return g;
}

Gate Gate::adjoint() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::kRotY:
            g.angle = -angle;
            break;
        case GateKind::kPauliX:
        case GateKind::kControlledNot:
            break;
        case GateKind::kUnitaryBlock:
            g.label = adjoint_label(label);
            if (matrix) {
                g.matrix = std::make_shared<const DenseMatrix>(matrix->adjoint());
            }
            break;
    }
    return g;
}

std::vector<Qubit> Gate::qubits() const {
    std::vector<Qubit> out = targets;
    for (const auto &c : controls) {
        out.push_back(c.qubit);
    }
    return out;
}

void Gate::validate() const {
    if (targets.empty()) {
        throw std::invalid_argument(gate_kind_name(kind) + " gate has no targets");
    }
    auto all = qubits();
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument(gate_kind_name(kind) + " gate uses a qubit twice");
    }
    if (kind == GateKind::kPauliX && !controls.empty()) {
        throw std::invalid_argument("X gate cannot carry controls; use CX");
    }
    if (kind == GateKind::kControlledNot && controls.empty()) {
        throw std::invalid_argument("CX gate needs at least one control");
    }
    if (kind == GateKind::kUnitaryBlock && matrix) {
        if (matrix->dim() != (std::size_t{1} << targets.size())) {
            throw std::invalid_argument("block matrix does not match its target count");
        }
        if (matrix->unitarity_error() > kUnitaryTolerance) {
            throw std::invalid_argument("block '" + label + "' is not unitary");
        }
    }
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || angle != other.angle || targets != other.targets || controls != other.controls ||
        label != other.label) {
        return false;
    }
    if (matrix == other.matrix) {
        return true;
    }
    if (!matrix || !other.matrix) {
        return false;
    }
    return *matrix == *other.matrix;
}

Circuit::Circuit(std::vector<QubitRegister> registers) : registers_(std::move(registers)) {
    std::vector<std::pair<int, int>> spans;
    for (const auto &r : registers_) {
        if (r.width <= 0) {
            throw std::invalid_argument("register " + r.name + " must have positive width");
        }
        spans.emplace_back(r.offset, r.width);
    }
    std::sort(spans.begin(), spans.end());
    int next = 0;
    for (auto [offset, width] : spans) {
        if (offset != next) {
            throw std::invalid_argument("registers must tile the qubit range without gaps or overlap");
        }
        next = offset + width;
    }
    num_qubits_ = next;
}

const QubitRegister *Circuit::find_reg(const std::string &name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

const QubitRegister &Circuit::reg(const std::string &name) const {
    const auto *r = find_reg(name);
    if (r == nullptr) {
        throw std::out_of_range("circuit has no register named " + name);
    }
    return *r;
}

Circuit &Circuit::append(Gate gate) {
    for (Qubit q : gate.qubits()) {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range(
                "qubit " + std::to_string(q) + " outside circuit of " + std::to_string(num_qubits_) + " qubits");
        }
    }
    gate.validate();
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.registers_ != registers_) {
        throw std::invalid_argument("cannot append circuits with different register layouts");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit compose(const Circuit &a, const Circuit &b) {
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit adjoint(const Circuit &circuit) {
    Circuit out(circuit.registers());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        out.append(it->adjoint());
    }
    return out;
}

void write_text(std::ostream &out, const Circuit &circuit) {
    for (const auto &r : circuit.registers()) {
        out << "REG " << r.name << ' ' << r.offset << ' ' << r.width << '\n';
    }
    char buf[64];
    for (const auto &g : circuit.gates()) {
        out << gate_kind_name(g.kind);
        if (g.kind == GateKind::kRotY) {
            std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
            out << ' ' << buf;
        } else if (g.kind == GateKind::kUnitaryBlock) {
            out << ' ' << g.label;
        }
        out << " t=";
        write_qubit_list(out, g.targets);
        write_controls(out, g.controls);
        out << '\n';
    }
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream ss;
    write_text(ss, circuit);
    return ss.str();
}

}  // namespace qps
