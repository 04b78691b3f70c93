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

#ifndef QPS_STATE_VECTOR_H
#define QPS_STATE_VECTOR_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qps/circuit.h"

namespace qps {

/// Raised when a postselected outcome has probability below the floor.
class PostselectionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Dense amplitudes over num_qubits qubits; basis index bit q is qubit q.
class StateVector {
   public:
    /// |0...0> on num_qubits qubits. Limited to 30 qubits.
    explicit StateVector(int num_qubits);
    /// Takes the amplitudes as given; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t dim() const {
        return amps_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amps_;
    }
    const Complex &operator[](std::size_t index) const {
        return amps_[index];
    }
    double norm() const;

    /// Applies one gate in place. `threads` > 1 splits the amplitude range into
    /// fixed chunks; every amplitude is computed by the same arithmetic either way.
    void apply(const Gate &gate, unsigned threads = 1);

    bool operator==(const StateVector &) const = default;

   private:
    StateVector() = default;

    int num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Loads a normalized copy of `amplitudes` into `reg`, which must be in |0...0>
/// with nothing else entangled with it.
StateVector inject_register(const StateVector &state, const QubitRegister &reg, std::span<const Complex> amplitudes);
StateVector inject_register(const StateVector &state, const QubitRegister &reg, std::span<const double> amplitudes);

/// Applies every gate of the circuit.
StateVector apply(const StateVector &state, const Circuit &circuit, unsigned threads = 1);

struct PostselectResult {
    double probability = 0;
    StateVector state;
};

constexpr double kDefaultPostselectFloor = 1e-12;

/// Projects onto the given qubit outcomes and renormalizes.
PostselectResult postselect(
    const StateVector &state,
    std::span<const Qubit> qubits,
    std::span<const int> outcome,
    double floor = kDefaultPostselectFloor);

/// A fixed value for every qubit of a register, as the register's integer value.
struct RegisterAssignment {
    QubitRegister reg;
    std::uint64_t value = 0;
};

/// Reads out `reg` with every other qubit pinned by `fixed`. Throws
/// std::runtime_error if more than 1e-10 of the probability mass sits outside
/// the pinned assignment, or if the pinned slice is empty. Qubits not covered by
/// `reg` or `fixed` are pinned to 0.
std::vector<Complex> extract_register(
    const StateVector &state, const QubitRegister &reg, std::span<const RegisterAssignment> fixed);

/// |<a, b>|^2.
double fidelity(std::span<const Complex> a, std::span<const Complex> b);
double fidelity(std::span<const double> a, std::span<const double> b);

}  // namespace qps

#endif
