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

#ifndef QPS_SOLVER_H
#define QPS_SOLVER_H

#include <span>
#include <vector>

#include "json.hpp"
#include "qps/builder.h"
#include "qps/resources.h"
#include "qps/state_vector.h"

namespace qps {

/// Normalizing constant of the inverted amplitudes: the E = |1...1> amplitude
/// for eigen-index j is kInversionScale / lambda_j.
constexpr double kInversionScale = 8;

struct QpsSolution {
    std::vector<double> solution;  // normalized, length 2^n - 1
    double success_probability = 0;
    ResourceReport resources;
    std::vector<double> classical_reference;  // normalized
    double fidelity = 0;

    nlohmann::json to_json() const;
};

/// Pins used to read B out of the post-flag state: E all ones, Anc = 1, the
/// remaining ancillas zero.
std::vector<RegisterAssignment> solution_pins(const QpsLayout &layout);

/// |b> in B, all other qubits |0>. `b` has 2^n - 1 entries placed at |1>..|N-1>.
StateVector prepare_input(const QpsLayout &layout, std::span<const double> b);

/// Runs the whole pipeline on the given circuit. Throws std::invalid_argument for
/// a zero or wrongly sized b.
QpsSolution solve(const QpsConfig &config, std::span<const double> b, unsigned threads = 1);

/// 64 ||A^-1 b_hat||^2, the exact success probability of the postselection.
double expected_success_probability(int n, std::span<const double> b);

}  // namespace qps

#endif
