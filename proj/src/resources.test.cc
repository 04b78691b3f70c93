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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qps/builder.h"

using namespace qps;

namespace {

Circuit line(int n) {
    return Circuit({{"Q", n, 0}});
}

}  // namespace

TEST(cost_model, default_gate_costs) {
    CostModel m;
    ASSERT_EQ(m.cost(Gate::ry(1, {0})), 1);
    ASSERT_EQ(m.cost(Gate::ry(1, {0, 1})), 2);
    ASSERT_EQ(m.cost(Gate::x({0, 1, 2})), 3);
    ASSERT_EQ(m.cost(Gate::ry(1, {0, 1}, {pos(2)})), 2);
    // The doubly controlled rotation pair: 8 two-qubit gates.
    ASSERT_EQ(m.cost(Gate::ry(1, {0, 1}, {pos(2), neg(3)})), 8);
    ASSERT_EQ(m.cost(Gate::ry(1, {0}, {pos(1), pos(2), pos(3)})), 32);
    ASSERT_EQ(m.cost(Gate::cnot({0}, {pos(1)})), 1);
    ASSERT_EQ(m.cost(Gate::cnot({0, 4}, {pos(1)})), 2);
    ASSERT_EQ(m.cost(Gate::cnot({0}, {pos(1), pos(2)})), 16);
    ASSERT_EQ(m.cost(Gate::cnot({0}, {pos(1), neg(2), pos(3), pos(4)})), 48);
    ASSERT_EQ(m.cost(Gate::block("BC", {0, 1, 2}, nullptr)), 18);
}

TEST(cost_model, polarity_does_not_change_cost) {
    CostModel m;
    ASSERT_EQ(m.cost(Gate::ry(1, {0}, {pos(1), pos(2)})), m.cost(Gate::ry(1, {0}, {neg(1), neg(2)})));
    ASSERT_EQ(m.cost(Gate::cnot({0}, {pos(1), pos(2), pos(3)})), m.cost(Gate::cnot({0}, {neg(1), pos(2), neg(3)})));
}

TEST(cost_model, json_round_trip_and_overrides) {
    CostModel m;
    m.multi_control_per_control = 5;
    ASSERT_EQ(CostModel::from_json(m.to_json()).to_json(), m.to_json());
    auto partial = CostModel::from_json(nlohmann::json{{"two_control", 6}});
    ASSERT_EQ(partial.two_control, 6);
    ASSERT_EQ(partial.rot_y_1, 2);
    ASSERT_THROW(CostModel::from_json(nlohmann::json{{"rot_y_1", -1}}), std::invalid_argument);
    ASSERT_THROW(CostModel::from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST(cost_model, environment_file) {
    auto path = std::filesystem::temp_directory_path() / "qps_cost_model_test.json";
    {
        std::ofstream f(path);
        f << R"({"block_coefficient": 3})";
    }
    ::setenv("QPS_COST_MODEL", path.c_str(), 1);
    ASSERT_EQ(CostModel::from_environment().block_coefficient, 3);
    ::setenv("QPS_COST_MODEL", "/nonexistent/qps.json", 1);
    ASSERT_THROW(CostModel::from_environment(), std::runtime_error);
    ::unsetenv("QPS_COST_MODEL");
    ASSERT_EQ(CostModel::from_environment().block_coefficient, 2);
    std::filesystem::remove(path);
}

TEST(resources, single_rotation) {
    auto c = line(1);
    c.append(Gate::ry(1, {0}));
    auto r = count_resources(c, CostModel{});
    ASSERT_EQ(r.qubits, 1);
    ASSERT_EQ(r.elementary_gates, 1);
    ASSERT_EQ(r.depth_serial, 1);
    ASSERT_EQ(r.depth_native, 1);
}

TEST(resources, depth_layering) {
    auto c = line(3);
    c.append(Gate::ry(1, {0}));
    c.append(Gate::ry(1, {1}));
    ASSERT_EQ(depth(c), 1);
    c.append(Gate::cnot({2}, {pos(1)}));
    ASSERT_EQ(depth(c), 2);
    c.append(Gate::x({0}));
    ASSERT_EQ(depth(c), 2);
    // Controls occupy their qubit too.
    c.append(Gate::ry(1, {0}, {pos(2)}));
    ASSERT_EQ(depth(c), 3);
}

TEST(resources, expanded_depth_weights_gates) {
    auto c = line(4);
    c.append(Gate::ry(1, {0, 1}, {pos(2), pos(3)}));
    c.append(Gate::ry(1, {0}));
    ASSERT_EQ(expanded_depth(c, CostModel{}), 9);
    ASSERT_EQ(depth(c), 2);
}

TEST(resources, compose_adds_and_adjoint_preserves) {
    std::mt19937_64 rng(21);
    CostModel m;
    for (int trial = 0; trial < 20; trial++) {
        auto a = oracle::random_circuit(6, 25, rng);
        auto b = oracle::random_circuit(6, 25, rng);
        auto ra = count_resources(a, m);
        auto rb = count_resources(b, m);
        auto rc = count_resources(compose(a, b), m);
        ASSERT_EQ(rc.elementary_gates, ra.elementary_gates + rb.elementary_gates);
        ASSERT_EQ(rc.ir_gates, ra.ir_gates + rb.ir_gates);
        ASSERT_LE(rc.depth_serial, ra.depth_serial + rb.depth_serial);
        ASSERT_LE(rc.depth_native, ra.depth_native + rb.depth_native);
        auto radj = count_resources(adjoint(a), m);
        ASSERT_EQ(radj.to_json(), ra.to_json());
        ASSERT_GE(ra.elementary_gates, ra.ir_gates);
        ASSERT_LE(ra.depth_serial, ra.elementary_gates);
    }
}

TEST(resources, report_json_fields) {
    ResourceReport r{6, 8, 76, 68, 7};
    auto j = r.to_json();
    ASSERT_EQ(j["qubits"], 6);
    ASSERT_EQ(j["elementary_gates"], 76);
    ASSERT_EQ(j["depth_serial"], 68);
    ASSERT_EQ(j["depth_native"], 7);
}
