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

#ifndef QPS_RESOURCES_H
#define QPS_RESOURCES_H

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qps/circuit.h"

namespace qps {

/// Elementary one/two-qubit gate counts for each IR gate shape.
///
/// Multi-target gates are charged once for the whole target set when
/// controlled (a controlled R_y pair is one unit), and once per target when
/// uncontrolled. Negative controls cost the same as positive ones.
struct CostModel {
    // RotY with one control.
    std::int64_t rot_y_1 = 2;
    // CX with one control, per target.
    std::int64_t cnot_1 = 1;
    // RotY with two controls.
    std::int64_t two_control = 8;
    // Linear rule for RotY with c >= 3 controls and CX with c >= 2:
    // per_control * (c - 1).
    std::int64_t multi_control_per_control = 16;
    // Dense blocks over w qubits are declared as block_coefficient * w^2.
    std::int64_t block_coefficient = 2;

    std::int64_t cost(const Gate &gate) const;
    /// Layers the gate occupies on its qubits after expansion.
    std::int64_t depth(const Gate &gate) const;

    /// Overrides any subset of the fields above from a JSON object.
    static CostModel from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;
    /// Reads the file named by QPS_COST_MODEL when set, else the defaults.
    static CostModel from_environment();
};

struct ResourceReport {
    int qubits = 0;
    std::int64_t ir_gates = 0;
    std::int64_t elementary_gates = 0;
    // Greedy layering with each gate weighted by its expanded depth.
    std::int64_t depth_serial = 0;
    // Greedy layering of the IR gates as built.
    std::int64_t depth_native = 0;

    nlohmann::json to_json() const;
};

/// ASAP layering: each gate starts at the first layer where all of its qubits are
/// free and holds them for `weight(gate)` layers.
std::int64_t depth(const Circuit &circuit);
std::int64_t expanded_depth(const Circuit &circuit, const CostModel &model);

ResourceReport count_resources(const Circuit &circuit, const CostModel &model);

}  // namespace qps

#endif
