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


#include "qps/verify.h"

#include <algorithm>
#include <cmath>

#include "qps/poisson.h"
#include "qps/sine_identities.h"
#include "qps/solver.h"
#include "qps/state_vector.h"

namespace qps {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kInversionTol = 1e-12;
constexpr double kAmplitudeTol = 1e-12;
constexpr double kFidelityTol = 1e-10;
constexpr double kProbabilityTol = 1e-10;
constexpr double kLeakageTol = 1e-12;

CheckResult at_most(std::string suite, int n, double value, double tol, std::string detail = {}) {
    // NaN fails.
    return {std::move(suite), n, value <= tol, value, tol, std::move(detail)};
}

QpsConfig make_config(int n, Mode mode, RyConstruction ry, bool fault) {
    QpsConfig c;
    c.n = n;
    c.mode = mode;
    c.ry = ry;
    c.inject_fault = fault;
    return c;
}

}  // namespace

nlohmann::json CheckResult::to_json() const {
    return {
        {"suite", suite}, {"n", n}, {"passed", passed}, {"value", value}, {"tolerance", tolerance}, {"detail", detail},
    };
}

double amplitude_audit_error(const QpsConfig &config, unsigned threads) {
    config.validate();
    auto layout = QpsLayout::make(config.n, config.mode);
    Circuit inv = build_inversion(config, layout);
    std::uint64_t all_ones = ((std::uint64_t{1} << layout.e.width) - 1) << layout.e.offset;
    std::size_t dim = std::size_t{1} << config.n;
    double worst = 0;
    for (std::size_t j = 0; j < dim; j++) {
        std::vector<Complex> amps(dim);
        amps[j] = 1;
        StateVector s = inject_register(StateVector(layout.num_qubits()), layout.b, std::span<const Complex>(amps));
        s = apply(s, inv, threads);
        // B is only read by the inversion stage, and every ancilla is restored.
        Complex got = s[(j << layout.b.offset) | all_ones];
        double want = j == 0 ? 0.0 : kInversionScale / eigenvalue(config.n, j);
        worst = std::max(worst, std::abs(got - want));
    }
    return worst;
}

double ancilla_leakage(int n, std::span<const double> b, unsigned threads) {
    auto layout = QpsLayout::make(n, Mode::kParallel);
    StateVector s = apply(prepare_input(layout, b), build_inversion_parallel(layout), threads);
    std::uint64_t mask = ((std::uint64_t{1} << layout.c->width) - 1) << layout.c->offset;
    mask |= std::uint64_t{1} << layout.anc.offset;
    double leak = 0;
    for (std::size_t i = 0; i < s.dim(); i++) {
        if (i & mask) {
            leak += std::norm(s[i]);
        }
    }
    return leak;
}

double inversion_identity_error(int n) {
    double worst = 0;
    for (std::int64_t j = 1; j < (std::int64_t{1} << n); j++) {
        double want = kInversionScale / eigenvalue(n, static_cast<std::size_t>(j));
        worst = std::max(worst, std::abs(inversion_value(inversion_angles(n, j)) / want - 1));
    }
    return worst;
}

std::vector<double> random_rhs(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> b(interior_size(n));
    do {
        for (auto &v : b) {
            v = dist(rng);
        }
    } while (norm2(b) == 0);
    return b;
}

std::vector<CheckResult> run_verification(const VerifyOptions &options) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(options.seed);
    bool fault = options.inject_fault;
    for (int n = options.n_min; n <= options.n_max; n++) {
        out.push_back(at_most("sine-product", n, sine_formula_residual(n), kIdentityTol));
        out.push_back(at_most("odd-layer-product", n, odd_layer_residual(n), kIdentityTol));
        out.push_back(at_most("inversion-identity", n, inversion_identity_error(n), kInversionTol));

        out.push_back(at_most("amplitude-audit", n,
            amplitude_audit_error(make_config(n, Mode::kSerial, RyConstruction::kBitwise, fault), options.threads),
            kAmplitudeTol, "serial bitwise"));
        out.push_back(at_most("amplitude-audit", n,
            amplitude_audit_error(make_config(n, Mode::kSerial, RyConstruction::kSemantic, fault), options.threads),
            kAmplitudeTol, "serial semantic"));

        double worst_fid = 0;
        double worst_prob = 0;
        double worst_equiv = 0;
        double worst_leak = 0;
        for (int s = 0; s < options.samples; s++) {
            auto b = random_rhs(n, rng);
            auto bitwise = solve(make_config(n, Mode::kSerial, RyConstruction::kBitwise, fault), b, options.threads);
            worst_fid = std::max(worst_fid, 1 - bitwise.fidelity);
            worst_prob = std::max(worst_prob, std::abs(bitwise.success_probability - expected_success_probability(n, b)));

            auto semantic = solve(make_config(n, Mode::kSerial, RyConstruction::kSemantic, fault), b, options.threads);
            worst_equiv = std::max(worst_equiv,
                1 - fidelity(std::span<const double>(bitwise.solution), std::span<const double>(semantic.solution)));
            if (n >= 3) {
                auto par = solve(make_config(n, Mode::kParallel, RyConstruction::kBitwise, fault), b, options.threads);
                worst_equiv = std::max(worst_equiv,
                    1 - fidelity(std::span<const double>(bitwise.solution), std::span<const double>(par.solution)));
                worst_leak = std::max(worst_leak, ancilla_leakage(n, b, options.threads));
            }
        }
        auto samples = std::to_string(options.samples) + " random b";
        out.push_back(at_most("fidelity", n, worst_fid, kFidelityTol, samples));
        out.push_back(at_most("success-probability", n, worst_prob, kProbabilityTol, samples));
        out.push_back(at_most("equivalence", n, worst_equiv, kFidelityTol, n >= 3 ? "semantic, bitwise, parallel" : "semantic, bitwise"));
        if (n >= 3) {
            out.push_back(at_most("ancilla-leakage", n, worst_leak, kLeakageTol, "C and Anc after parallel inversion"));
        }
    }
    return out;
}

}  // namespace qps
