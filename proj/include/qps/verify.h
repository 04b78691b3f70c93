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


#ifndef QPS_VERIFY_H
#define QPS_VERIFY_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qps/builder.h"

namespace qps {

/// Largest |amplitude - 8/lambda_j| of E = |1...1> after the inversion stage,
/// over every basis input |j>. j = 0 is expected to carry nothing.
double amplitude_audit_error(const QpsConfig &config, unsigned threads = 1);

/// Probability mass left outside the ground state of C and Anc after the
/// parallel inversion stage acts on |b>.
double ancilla_leakage(int n, std::span<const double> b, unsigned threads = 1);

/// max |inversion_value(j) / (8 / lambda_j) - 1| over j = 1..2^n - 1.
double inversion_identity_error(int n);

/// Uniform entries in [-1, 1), redrawn if the vector comes out all zero.
std::vector<double> random_rhs(int n, std::mt19937_64 &rng);

struct CheckResult {
    std::string suite;
    int n = 0;
    bool passed = false;
    double value = 0;
    double tolerance = 0;
    std::string detail;

    nlohmann::json to_json() const;
};

struct VerifyOptions {
    int n_min = 2;
    int n_max = 4;
    std::uint64_t seed = 1;
    int samples = 5;
    bool inject_fault = false;
    unsigned threads = 1;
};

std::vector<CheckResult> run_verification(const VerifyOptions &options);

}  // namespace qps

#endif
