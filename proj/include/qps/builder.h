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

#ifndef QPS_BUILDER_H
#define QPS_BUILDER_H

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qps/circuit.h"
#include "qps/resources.h"

namespace qps {

enum class Mode { kSerial, kParallel };
enum class RyConstruction { kSemantic, kBitwise };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string &name);
std::string ry_name(RyConstruction ry);
RyConstruction parse_ry(const std::string &name);

struct QpsConfig {
    int n = 2;
    Mode mode = Mode::kSerial;
    RyConstruction ry = RyConstruction::kBitwise;
    CostModel cost;
    // False builds the basis-conversion blocks without their dense matrices,
    // for resource counting at sizes that cannot be simulated.
    bool materialize_blocks = true;
    // Test hook: perturbs one rotation angle of the inversion stage.
    bool inject_fault = false;

    /// Throws std::invalid_argument for n < 2, parallel mode with n < 3, or
    /// parallel mode with the semantic construction.
    void validate() const;
};

/// Register layout of the solver circuit.
///
///     B      qubits [0, n)            problem register; qubit b.offset + q holds bit q of j
///     E      qubits [n, 3n-2)         inversion workspace; pair t is E[2t], E[2t+1]
///     Anc    qubit  3n-2              success flag (also scratch during inversion)
///     BCaux  qubit  3n-1              basis-conversion embedding ancilla, idle in simulation
///     C      qubits [3n, 4n-2)        parallel mode only; C[m-1] holds module m's selector
///
/// In the MSB-first numbering j = j_1 j_2 ... j_n, digit j_k is bit n-k and so
/// lives on qubit b.offset + n - k.
struct QpsLayout {
    int n = 0;
    Mode mode = Mode::kSerial;
    QubitRegister b;
    QubitRegister e;
    QubitRegister anc;
    QubitRegister bc_aux;
    std::optional<QubitRegister> c;

    static QpsLayout make(int n, Mode mode);

    std::vector<QubitRegister> registers() const;
    int num_qubits() const;
    /// Qubit holding bit `bit` (LSB = 0) of the B register value.
    Qubit b_bit(int bit) const;
    /// Qubit holding digit j_k, k = 1..n, most significant first.
    Qubit msb_digit(int k) const;
    /// The two E qubits of pair t, t = 0..n-2.
    std::vector<Qubit> pair(int t) const;
    Circuit empty_circuit() const;
};

/// The embedded sine transform: entry (j, k) = sqrt(2/N) sin(j k pi / N) for
/// 1 <= j, k <= N-1, entry (0, 0) = 1, the rest of row and column 0 zero.
/// Row j is the eigenvector u_j, so the block maps u_j to |j>. It is real
/// symmetric and orthogonal, hence its own inverse.
DenseMatrix sine_transform_matrix(int n);

/// Basis-conversion block on qubits 0..n-1, 2 <= n <= 12.
Gate build_bc(int n, bool materialize = true);

/// Eigenvalue inversion with the rotation modules applied one after another.
/// Leaves E pair t in (cos a_t |0> + sin a_t |1>)^{(x)2} for each basis input
/// |j>, with a_t = inversion_angles(n, j).angles[t]. The bitwise form borrows
/// Anc as a selector for modules m >= 1 and returns it to |0>.
Circuit build_inversion_serial(const QpsLayout &layout, RyConstruction ry);
Circuit build_inversion_serial(int n, RyConstruction ry);

/// The same action with module selectors held in register C, rotation units
/// regrouped so that units of one group touch disjoint E pairs and B bits.
/// C and Anc are restored to |0>. Requires n >= 3.
Circuit build_inversion_parallel(const QpsLayout &layout);
Circuit build_inversion_parallel(int n);

/// The selector (C register) computation alone; its adjoint uncomputes it.
Circuit build_control_parallelization(const QpsLayout &layout);

/// NOT on Anc controlled by every E qubit.
Circuit build_flag(const QpsLayout &layout);
Circuit build_flag(int n);

/// Inversion stage for the configuration (serial or parallel).
Circuit build_inversion(const QpsConfig &config, const QpsLayout &layout);

/// BC, inversion, flag, BC^dagger over the configuration's layout.
Circuit build_qps(const QpsConfig &config);

}  // namespace qps

#endif
