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

#ifndef QPS_POISSON_H
#define QPS_POISSON_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qps {

/// Number of interior grid points 2^n - 1 for a grid of N = 2^n intervals.
inline std::size_t interior_size(int n) {
    return (std::size_t{1} << n) - 1;
}

/// The 1D Dirichlet problem -v'' = b on (0,1), sampled at x_i = i/N for i = 1..N-1.
struct PoissonProblem {
    int n = 0;
    std::vector<double> b;
    std::optional<std::string> source_label;

    /// Throws std::invalid_argument unless n >= 2 and b has 2^n - 1 entries.
    void validate() const;
};

/// The finite-difference operator N^2 * tridiag(-1, 2, -1) of size (N-1)x(N-1).
///
/// Stored implicitly: every row has the same three coefficients, so only the
/// scale is kept.
struct TridiagonalSystem {
    std::size_t grid_count = 0;  // N
    double scale = 0;            // h^-2 = N^2

    std::size_t size() const {
        return grid_count - 1;
    }
    double diagonal() const {
        return 2 * scale;
    }
    double off_diagonal() const {
        return -scale;
    }
    /// A * v. Requires v.size() == size().
    std::vector<double> multiply(std::span<const double> v) const;
    /// Dense row-major copy, mostly for tests and debugging.
    std::vector<double> dense() const;
};

struct EigenPair {
    std::size_t j = 0;
    double lambda = 0;
    std::vector<double> u;
};

TridiagonalSystem discretize(const PoissonProblem &problem);

/// Builds the system for a grid of N intervals without the n >= 2 gate.
/// Used where the degenerate N = 2 case is wanted explicitly.
TridiagonalSystem tridiagonal_for_grid(std::size_t grid_count);

/// Closed-form eigenvalue 4 N^2 sin^2(j pi / 2N).
double eigenvalue(int n, std::size_t j);

/// Closed-form eigenpair with u(k) = sqrt(2/N) sin(j pi k / N), k = 1..N-1.
EigenPair eigenpair(int n, std::size_t j);

/// Thomas elimination. Throws std::runtime_error if the residual bound
/// ||A v - b|| <= 1e-10 ||b|| is violated.
std::vector<double> solve_classical(const TridiagonalSystem &system, std::span<const double> b);

/// Sum over j of (<u_j, b> / lambda_j) u_j.
std::vector<double> spectral_solve(int n, std::span<const double> b);

/// Spectral coefficients beta_j = <u_j, b>, indexed j - 1.
std::vector<double> spectral_coefficients(int n, std::span<const double> b);

/// Analytic right-hand sides with known exact solutions.
enum class Preset { kSin, kConst, kRamp, kZero };

Preset parse_preset(const std::string &name);
std::string preset_name(Preset preset);
double preset_rhs(Preset preset, double x);
double preset_solution(Preset preset, double x);
/// Samples b at x_i = i/N, i = 1..N-1.
std::vector<double> sample_preset(Preset preset, int n);

struct TruncationRow {
    int n = 0;
    double max_error = 0;
};

/// Max-norm error of the discrete solution against the analytic one for each n.
std::vector<TruncationRow> truncation_study(Preset preset, std::span<const int> n_list);

/// Least-squares slope of log(error) against log(N) over the rows.
double truncation_slope(std::span<const TruncationRow> rows);

double norm2(std::span<const double> v);
std::vector<double> normalized(std::span<const double> v);

}  // namespace qps

#endif
