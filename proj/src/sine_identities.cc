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

#include "qps/sine_identities.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qps {

namespace {

constexpr double kPi = std::numbers::pi;

void check_identity_n(int n) {
    if (n < 1 || n > 14) {
        throw std::invalid_argument("identity checks need 1 <= n <= 14, got " + std::to_string(n));
    }
}

DyadicRational reduce(std::uint64_t p, std::uint64_t q) {
    int shift = std::min(std::countr_zero(p), std::countr_zero(q));
    return {p >> shift, q >> shift};
}

}  // namespace

OddFactorization odd_factor(std::int64_t j) {
    if (j <= 0) {
        throw std::invalid_argument("odd_factor needs j >= 1, got " + std::to_string(j));
    }
    auto u = static_cast<std::uint64_t>(j);
    int m = std::countr_zero(u);
    return {u, m, u >> m};
}

std::uint64_t inversion_numerator(std::uint64_t odd_part, int k) {
    std::uint64_t half = std::uint64_t{1} << k;
    std::uint64_t rem = odd_part % (half << 1);
    return rem > half ? rem - half : half - rem;
}

AngleSequence inversion_angles(int n, std::int64_t j) {
    if (n < 2 || n > 62) {
        throw std::invalid_argument("inversion_angles needs n >= 2, got " + std::to_string(n));
    }
    if (j < 1 || static_cast<std::uint64_t>(j) >= (std::uint64_t{1} << n)) {
        throw std::out_of_range("eigen index " + std::to_string(j) + " out of range for n=" + std::to_string(n));
    }
    auto f = odd_factor(j);
    AngleSequence seq;
    seq.n = n;
    seq.j = f.j;
    seq.m = f.m;
    seq.angles.reserve(n - 1);
    for (int t = 0; t < f.m; t++) {
        seq.angles.push_back(kPi / 6);
    }
    for (int k = n - f.m; k >= 2; k--) {
        double num = static_cast<double>(inversion_numerator(f.i, k));
        seq.angles.push_back(kPi * num / std::ldexp(1.0, k + 1));
    }
    return seq;
}

double inversion_value(const AngleSequence &seq) {
    double prod = 1;
    for (double a : seq.angles) {
        prod *= std::sin(a);
    }
    return prod * prod;
}

double sine_formula_residual(int n) {
    check_identity_n(n);
    std::uint64_t count = (std::uint64_t{1} << n) - 1;
    double denom = std::ldexp(1.0, n + 1);
    double lhs = static_cast<double>((std::uint64_t{1} << (n + 1)) - 2) * std::numbers::ln2;
    for (std::uint64_t j = 1; j <= count; j++) {
        lhs += 2 * std::log(std::sin(static_cast<double>(j) * kPi / denom));
    }
    double rhs = n * std::numbers::ln2;
    return std::abs(lhs - rhs);
}

double odd_layer_residual(int n) {
    check_identity_n(n);
    double lhs = 0;
    for (int k = 1; k <= n; k++) {
        double denom = std::ldexp(1.0, k + 1);
        std::uint64_t terms = std::uint64_t{1} << (k - 1);
        for (std::uint64_t j = 1; j <= terms; j++) {
            lhs += 2 * std::log(std::sin(static_cast<double>(2 * j - 1) * kPi / denom));
        }
    }
    double rhs = (static_cast<double>(n + 2) - std::ldexp(1.0, n + 1)) * std::numbers::ln2;
    return std::abs(lhs - rhs);
}

std::vector<DyadicRational> full_product_coefficients(int n) {
    check_identity_n(n);
    std::vector<DyadicRational> out;
    std::uint64_t q = std::uint64_t{1} << (n + 1);
    for (std::uint64_t j = 1; j < (std::uint64_t{1} << n); j++) {
        out.push_back(reduce(j, q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DyadicRational> odd_layer_coefficients(int n) {
    check_identity_n(n);
    std::vector<DyadicRational> out;
    for (int k = 1; k <= n; k++) {
        std::uint64_t q = std::uint64_t{1} << (k + 1);
        for (std::uint64_t j = 1; j <= (std::uint64_t{1} << (k - 1)); j++) {
            out.push_back(reduce(2 * j - 1, q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qps
