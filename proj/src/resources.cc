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

#include "qps/resources.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace qps {

namespace {

template <typename Weight>
std::int64_t layered_depth(const Circuit &circuit, Weight weight) {
    std::vector<std::int64_t> free_at(circuit.num_qubits(), 0);
    std::int64_t total = 0;
    for (const auto &g : circuit.gates()) {
        auto qs = g.qubits();
        std::int64_t start = 0;
        for (Qubit q : qs) {
            start = std::max(start, free_at[q]);
        }
        std::int64_t end = start + weight(g);
        for (Qubit q : qs) {
            free_at[q] = end;
        }
        total = std::max(total, end);
    }
    return total;
}

void read_field(const nlohmann::json &j, const char *key, std::int64_t &field) {
    if (!j.contains(key)) {
        return;
    }
    auto v = j.at(key).get<std::int64_t>();
    if (v < 0) {
        throw std::invalid_argument(std::string("cost model field ") + key + " must be non-negative");
    }
    field = v;
}

}  // namespace

std::int64_t CostModel::cost(const Gate &gate) const {
    auto c = static_cast<std::int64_t>(gate.controls.size());
    auto t = static_cast<std::int64_t>(gate.targets.size());
    switch (gate.kind) {
        case GateKind::kRotY:
            if (c == 0) {
                return t;
            }
            if (c == 1) {
                return rot_y_1;
            }
            if (c == 2) {
                return two_control;
            }
            return multi_control_per_control * (c - 1);
        case GateKind::kPauliX:
            return t;
        case GateKind::kControlledNot:
            if (c == 1) {
                return cnot_1 * t;
            }
            return multi_control_per_control * (c - 1);
        case GateKind::kUnitaryBlock: {
            std::int64_t base = block_coefficient * t * t;
            return c == 0 ? base : base + multi_control_per_control * c;
        }
    }
    throw std::invalid_argument("unknown gate kind in cost model");
}

std::int64_t CostModel::depth(const Gate &gate) const {
    if (gate.controls.empty() && gate.kind != GateKind::kUnitaryBlock) {
        return 1;
    }
    return std::max<std::int64_t>(1, cost(gate));
}

CostModel CostModel::from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("cost model must be a JSON object");
    }
    CostModel m;
    read_field(j, "rot_y_1", m.rot_y_1);
    read_field(j, "two_control", m.two_control);
    read_field(j, "cnot_1", m.cnot_1);
    read_field(j, "multi_control_per_control", m.multi_control_per_control);
    read_field(j, "block_coefficient", m.block_coefficient);
    return m;
}

nlohmann::json CostModel::to_json() const {
    return {
        {"rot_y_1", rot_y_1},
        {"two_control", two_control},
        {"cnot_1", cnot_1},
        {"multi_control_per_control", multi_control_per_control},
        {"block_coefficient", block_coefficient},
    };
}

CostModel CostModel::from_environment() {
    const char *path = std::getenv("QPS_COST_MODEL");
    if (path == nullptr || *path == '\0') {
        return {};
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(std::string("cannot open cost model file ") + path);
    }
    return from_json(nlohmann::json::parse(in));
}

nlohmann::json ResourceReport::to_json() const {
    return {
        {"qubits", qubits},
        {"ir_gates", ir_gates},
        {"elementary_gates", elementary_gates},
        {"depth_serial", depth_serial},
        {"depth_native", depth_native},
    };
}

std::int64_t depth(const Circuit &circuit) {
    return layered_depth(circuit, [](const Gate &) { return std::int64_t{1}; });
}

std::int64_t expanded_depth(const Circuit &circuit, const CostModel &model) {
    return layered_depth(circuit, [&](const Gate &g) { return model.depth(g); });
}

ResourceReport count_resources(const Circuit &circuit, const CostModel &model) {
    ResourceReport r;
    r.qubits = circuit.num_qubits();
    r.ir_gates = static_cast<std::int64_t>(circuit.size());
    for (const auto &g : circuit.gates()) {
        r.elementary_gates += model.cost(g);
    }
    r.depth_native = depth(circuit);
    r.depth_serial = expanded_depth(circuit, model);
    return r;
}

}  // namespace qps
