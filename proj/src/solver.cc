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

#include "qps/solver.h"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qps/poisson.h"

namespace qps {

namespace {

void check_rhs(int n, std::span<const double> b) {
    if (b.size() != interior_size(n)) {
        throw std::invalid_argument(
            "right-hand side has " + std::to_string(b.size()) + " entries, expected " +
            std::to_string(interior_size(n)));
    }
    if (norm2(b) == 0) {
        throw std::invalid_argument("zero right-hand side");
    }
}

}  // namespace

nlohmann::json QpsSolution::to_json() const {
    return {
        {"solution", solution},
        {"success_probability", success_probability},
        {"resources", resources.to_json()},
        {"classical_reference", classical_reference},
        {"fidelity", fidelity},
    };
}

std::vector<RegisterAssignment> solution_pins(const QpsLayout &layout) {
    std::vector<RegisterAssignment> pins{
        {layout.e, (std::uint64_t{1} << layout.e.width) - 1},
        {layout.anc, 1},
        {layout.bc_aux, 0},
    };
    if (layout.c) {
        pins.push_back({*layout.c, 0});
    }
    return pins;
}

StateVector prepare_input(const QpsLayout &layout, std::span<const double> b) {
    check_rhs(layout.n, b);
    std::vector<double> padded(std::size_t{1} << layout.n, 0.0);
    std::copy(b.begin(), b.end(), padded.begin() + 1);
    return inject_register(StateVector(layout.num_qubits()), layout.b, std::span<const double>(padded));
}

double expected_success_probability(int n, std::span<const double> b) {
    check_rhs(n, b);
    auto bhat = normalized(b);
    auto v = solve_classical(tridiagonal_for_grid(std::size_t{1} << n), bhat);
    double nv = norm2(v);
    return kInversionScale * kInversionScale * nv * nv;
}

QpsSolution solve(const QpsConfig &config, std::span<const double> b, unsigned threads) {
    config.validate();
    check_rhs(config.n, b);
    auto layout = QpsLayout::make(config.n, config.mode);
    Circuit circuit = build_qps(config);

    StateVector state = prepare_input(layout, b);
    state = apply(state, circuit, threads);
    Qubit flag = layout.anc.offset;
    int one = 1;
    auto post = postselect(state, std::span<const Qubit>(&flag, 1), std::span<const int>(&one, 1));

    auto pins = solution_pins(layout);
    auto amps = extract_register(post.state, layout.b, pins);
    // |0>_B carries no amplitude: no rotation module selects j = 0.
    assert(std::abs(amps[0]) < 1e-9);

    QpsSolution out;
    out.solution.resize(amps.size() - 1);
    for (std::size_t i = 1; i < amps.size(); i++) {
        out.solution[i - 1] = amps[i].real();
    }
    out.solution = normalized(out.solution);
    out.success_probability = post.probability;
    out.resources = count_resources(circuit, config.cost);
    auto system = tridiagonal_for_grid(std::size_t{1} << config.n);
    out.classical_reference = normalized(solve_classical(system, b));
    out.fidelity = fidelity(std::span<const double>(out.solution), std::span<const double>(out.classical_reference));
    return out;
}

}  // namespace qps
