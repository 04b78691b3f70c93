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

#ifndef QPS_CIRCUIT_H
#define QPS_CIRCUIT_H

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qps {

using Complex = std::complex<double>;

/// Global qubit index. Qubit 0 is the least significant bit of a basis-state index.
using Qubit = int;

/// A contiguous block of qubits. Bit q of a register value lives on qubit offset + q.
struct QubitRegister {
    std::string name;
    int width = 0;
    int offset = 0;

    Qubit qubit(int bit) const;
    bool contains(Qubit q) const {
        return q >= offset && q < offset + width;
    }
    bool operator==(const QubitRegister &) const = default;
};

enum class Polarity { kPositive, kNegative };

/// A control fires when the qubit is |1> (positive) or |0> (negative).
struct Control {
    Qubit qubit = 0;
    Polarity polarity = Polarity::kPositive;

    bool operator==(const Control &) const = default;
};

inline Control pos(Qubit q) {
    return {q, Polarity::kPositive};
}
inline Control neg(Qubit q) {
    return {q, Polarity::kNegative};
}

/// Dense square complex matrix, row-major.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    }

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }
    std::span<const Complex> row(std::size_t r) const {
        return {data_.data() + r * dim_, dim_};
    }

    DenseMatrix adjoint() const;
    /// max |(M^dagger M - I)_rc|.
    double unitarity_error() const;
    bool operator==(const DenseMatrix &) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

enum class GateKind { kRotY, kPauliX, kControlledNot, kUnitaryBlock };

std::string gate_kind_name(GateKind kind);

/// One IR instruction.
///
/// Gates with several targets apply the same single-qubit operation to each
/// target under the shared controls, except kUnitaryBlock where the targets
/// index the block's local basis (targets[t] is bit t of the block row index).
/// RotY(angle) maps |0> to cos(angle/2)|0> + sin(angle/2)|1>.
struct Gate {
    GateKind kind = GateKind::kPauliX;
    double angle = 0;
    std::vector<Qubit> targets;
    std::vector<Control> controls;
    // kUnitaryBlock only. `matrix` may be null for construction-only circuits
    // that are counted but never simulated.
    std::string label;
    std::shared_ptr<const DenseMatrix> matrix;

    static Gate ry(double angle, std::vector<Qubit> targets, std::vector<Control> controls = {});
    static Gate x(std::vector<Qubit> targets);
    static Gate cnot(std::vector<Qubit> targets, std::vector<Control> controls);
    static Gate block(std::string label, std::vector<Qubit> targets, std::shared_ptr<const DenseMatrix> matrix);

    Gate adjoint() const;
    /// Targets followed by control qubits.
    std::vector<Qubit> qubits() const;
    /// Throws std::invalid_argument on overlapping qubits, bad block shape or a
    /// non-unitary block.
    void validate() const;

    bool operator==(const Gate &other) const;
};

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::vector<QubitRegister> registers);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<QubitRegister> &registers() const {
        return registers_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }

    /// Throws std::out_of_range for a missing register name.
    const QubitRegister &reg(const std::string &name) const;
    const QubitRegister *find_reg(const std::string &name) const;

    /// Validates the gate against the register bounds before appending.
    Circuit &append(Gate gate);
    /// Appends every gate of `other`. Register layouts must match.
    Circuit &append(const Circuit &other);

    bool operator==(const Circuit &other) const = default;

   private:
    std::vector<QubitRegister> registers_;
    int num_qubits_ = 0;
    std::vector<Gate> gates_;
};

Circuit compose(const Circuit &a, const Circuit &b);

/// Reverses gate order and inverts each gate.
Circuit adjoint(const Circuit &circuit);

/// Line-oriented text form, one gate per line:
///     REG <name> <offset> <width>
///     RY <angle> t=<q,...> [c=<q+|q-,...>]
///     X t=<q,...>
///     CX t=<q,...> c=<...>
///     BLOCK <label> t=<q,...> [c=<...>]
/// Angles use 17 significant digits.
void write_text(std::ostream &out, const Circuit &circuit);
std::string to_text(const Circuit &circuit);

}  // namespace qps

#endif
