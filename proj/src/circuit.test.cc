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

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qps/state_vector.h"

using namespace qps;

namespace {

Circuit two_registers() {
    return Circuit({{"A", 2, 0}, {"B", 3, 2}});
}

}  // namespace

TEST(circuit, registers_must_tile) {
    ASSERT_NO_THROW(Circuit({{"B", 2, 0}, {"E", 2, 2}}));
    ASSERT_NO_THROW(Circuit({{"E", 2, 2}, {"B", 2, 0}}));
    ASSERT_THROW(Circuit({{"B", 2, 0}, {"E", 2, 3}}), std::invalid_argument);
    ASSERT_THROW(Circuit({{"B", 2, 0}, {"E", 2, 1}}), std::invalid_argument);
    ASSERT_THROW(Circuit({{"B", 0, 0}}), std::invalid_argument);
}

TEST(circuit, register_lookup) {
    auto c = two_registers();
    ASSERT_EQ(c.num_qubits(), 5);
    ASSERT_EQ(c.reg("B").qubit(2), 4);
    ASSERT_TRUE(c.reg("B").contains(2));
    ASSERT_FALSE(c.reg("B").contains(1));
    ASSERT_THROW(c.reg("C"), std::out_of_range);
    ASSERT_EQ(c.find_reg("C"), nullptr);
    ASSERT_THROW(c.reg("A").qubit(2), std::out_of_range);
}

TEST(circuit, append_checks_bounds_and_shape) {
    auto c = two_registers();
    ASSERT_THROW(c.append(Gate::x({5})), std::out_of_range);
    ASSERT_THROW(c.append(Gate::ry(1, {0}, {pos(7)})), std::out_of_range);
    ASSERT_THROW(c.append(Gate::ry(1, {0}, {pos(0)})), std::invalid_argument);
    ASSERT_THROW(c.append(Gate::ry(1, {0, 0})), std::invalid_argument);
    ASSERT_THROW(c.append(Gate::cnot({0}, {})), std::invalid_argument);
    ASSERT_THROW(c.append(Gate::ry(1, {})), std::invalid_argument);
    auto x = Gate::x({1});
    x.controls.push_back(pos(0));
    ASSERT_THROW(c.append(x), std::invalid_argument);
    ASSERT_EQ(c.size(), 0u);
}

TEST(circuit, block_validation) {
    auto c = two_registers();
    auto bad = std::make_shared<DenseMatrix>(2);
    (*bad)(0, 0) = 1;
    (*bad)(1, 1) = 2;
    ASSERT_THROW(c.append(Gate::block("bad", {0}, bad)), std::invalid_argument);
    auto id = std::make_shared<DenseMatrix>(2);
    (*id)(0, 0) = 1;
    (*id)(1, 1) = 1;
    ASSERT_THROW(c.append(Gate::block("wide", {0, 1}, id)), std::invalid_argument);
    ASSERT_NO_THROW(c.append(Gate::block("id", {0}, id)));
    ASSERT_NO_THROW(c.append(Gate::block("counted", {0, 1, 2}, nullptr)));
}

TEST(circuit, adjoint_of_rotation) {
    auto g = Gate::ry(std::numbers::pi / 3, {0}).adjoint();
    ASSERT_EQ(g.kind, GateKind::kRotY);
    ASSERT_DOUBLE_EQ(g.angle, -std::numbers::pi / 3);
    ASSERT_EQ(Gate::x({1}).adjoint(), Gate::x({1}));
}

TEST(circuit, adjoint_of_block_conjugates) {
    auto m = std::make_shared<DenseMatrix>(2);
    (*m)(0, 1) = Complex(0, 1);
    (*m)(1, 0) = 1;
    auto g = Gate::block("U", {0}, m);
    auto a = g.adjoint();
    ASSERT_EQ(a.label, "U^dag");
    ASSERT_EQ((*a.matrix)(1, 0), Complex(0, -1));
    ASSERT_EQ((*a.matrix)(0, 1), Complex(1, 0));
    ASSERT_EQ(a.adjoint().label, "U");
}

TEST(circuit, adjoint_is_involution) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        auto c = oracle::random_circuit(5, 30, rng);
        auto a = adjoint(c);
        ASSERT_EQ(a.size(), c.size());
        ASSERT_EQ(adjoint(a), c);
        ASSERT_EQ(a.gates().front(), c.gates().back().adjoint());
    }
}

TEST(circuit, compose_with_adjoint_is_identity) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; trial++) {
        auto c = oracle::random_circuit(5, 40, rng);
        std::vector<Complex> amps(32);
        std::normal_distribution<double> g;
        for (auto &a : amps) {
            a = {g(rng), g(rng)};
        }
        auto s = inject_register(StateVector(5), c.reg("Q"), std::span<const Complex>(amps));
        auto out = apply(s, compose(c, adjoint(c)));
        ASSERT_GE(fidelity(s.amplitudes(), out.amplitudes()), 1 - 1e-10);
    }
}

TEST(circuit, compose_requires_same_layout) {
    Circuit a({{"B", 2, 0}});
    Circuit b({{"B", 1, 0}, {"E", 1, 1}});
    ASSERT_THROW(compose(a, b), std::invalid_argument);
}

TEST(circuit, qubits_lists_targets_then_controls) {
    auto g = Gate::ry(1, {3, 4}, {neg(0), pos(2)});
    ASSERT_EQ(g.qubits(), (std::vector<Qubit>{3, 4, 0, 2}));
}

TEST(circuit, text_format) {
    Circuit c({{"B", 2, 0}, {"E", 2, 2}});
    c.append(Gate::ry(0.5, {2, 3}, {pos(0), neg(1)}));
    c.append(Gate::x({1}));
    c.append(Gate::cnot({2}, {pos(1)}));
    c.append(Gate::block("BC", {0, 1}, nullptr));
    ASSERT_EQ(to_text(c),
              "REG B 0 2\n"
              "REG E 2 2\n"
              "RY 0.5 t=2,3 c=0+,1-\n"
              "X t=1\n"
              "CX t=2 c=1+\n"
              "BLOCK BC t=0,1\n");
}

TEST(circuit, dense_matrix_helpers) {
    DenseMatrix m(2);
    m(0, 0) = 1;
    m(1, 1) = Complex(0, 1);
    ASSERT_EQ(m.unitarity_error(), 0);
    ASSERT_EQ(m.adjoint()(1, 1), Complex(0, -1));
    ASSERT_EQ(m.row(1)[1], Complex(0, 1));
    m(1, 1) = 2;
    ASSERT_EQ(m.unitarity_error(), 3);
}
