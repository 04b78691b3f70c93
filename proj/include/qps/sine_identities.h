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

#ifndef QPS_SINE_IDENTITIES_H
#define QPS_SINE_IDENTITIES_H

#include <cstdint>
#include <utility>
#include <vector>

namespace qps {

/// j = 2^m * i with i odd.
struct OddFactorization {
    std::uint64_t j = 0;
    int m = 0;
    std::uint64_t i = 0;
};

OddFactorization odd_factor(std::int64_t j);

/// Rotation angles whose squared sine product is 8 / lambda_j.
///
/// The first m angles are pi/6. The rest are, for k = n-m down to 2,
///     theta_k = pi * |2^k - (i mod 2^(k+1))| / 2^(k+1)
/// where i is the odd part of j. For j = 2^(n-1) every angle is pi/6.
/// Entry t is the angle carried by E-register pair t.
struct AngleSequence {
    int n = 0;
    std::uint64_t j = 0;
    int m = 0;
    std::vector<double> angles;

    /// Index k of the sine term on pair t, or 0 for a pi/6 constant.
    int term_k(int t) const {
        return t < m ? 0 : n - t;
    }
};

AngleSequence inversion_angles(int n, std::int64_t j);

/// The integer numerator |2^k - (i mod 2^(k+1))| of the k-th term, for odd i.
std::uint64_t inversion_numerator(std::uint64_t odd_part, int k);

/// (prod_t sin(angles[t]))^2.
double inversion_value(const AngleSequence &seq);

/// |log LHS - log RHS| of the product identity
///     2^(2^(n+1) - 2) * prod_{j=1}^{2^n - 1} sin^2(j pi / 2^(n+1)) = 2^n.
double sine_formula_residual(int n);

/// |log LHS - log RHS| of the layered form
///     prod_{k=1}^{n} prod_{j=1}^{2^(k-1)} sin^2((2j-1) pi / 2^(k+1)) = 2^(n + 2 - 2^(n+1)).
double odd_layer_residual(int n);

/// Reduced rational p/q, q a power of two.
using DyadicRational = std::pair<std::uint64_t, std::uint64_t>;

/// Angular coefficients j / 2^(n+1), j = 1..2^n - 1, reduced and sorted.
std::vector<DyadicRational> full_product_coefficients(int n);

/// Union over layers k = 1..n of (2j-1) / 2^(k+1), reduced and sorted.
std::vector<DyadicRational> odd_layer_coefficients(int n);

}  // namespace qps

#endif
