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

#include "qps/poisson.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qps {

namespace {

void check_n(int n) {
    if (n < 2) {
        throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
    }
    if (n > 30) {
        throw std::invalid_argument("n is too large: " + std::to_string(n));
    }
}

void check_length(int n, std::size_t length) {
    if (length != interior_size(n)) {
        throw std::invalid_argument(
            "right-hand side has " + std::to_string(length) + " entries, expected " +
            std::to_string(interior_size(n)));
    }
}

}  // namespace

void PoissonProblem::validate() const {
    check_n(n);
    check_length(n, b.size());
}

std::vector<double> TridiagonalSystem::multiply(std::span<const double> v) const {
    std::size_t m = size();
    if (v.size() != m) {
        throw std::invalid_argument("dimension mismatch in TridiagonalSystem::multiply");
    }
    std::vector<double> out(m);
    for (std::size_t i = 0; i < m; i++) {
        double acc = diagonal() * v[i];
        if (i > 0) {
            acc += off_diagonal() * v[i - 1];
        }
        if (i + 1 < m) {
            acc += off_diagonal() * v[i + 1];
        }
        out[i] = acc;
    }
    return out;
}

std::vector<double> TridiagonalSystem::dense() const {
    std::size_t m = size();
    std::vector<double> out(m * m, 0.0);
    for (std::size_t i = 0; i < m; i++) {
        out[i * m + i] = diagonal();
        if (i > 0) {
            out[i * m + i - 1] = off_diagonal();
        }
        if (i + 1 < m) {
            out[i * m + i + 1] = off_diagonal();
        }
    }
    return out;
}

TridiagonalSystem tridiagonal_for_grid(std::size_t grid_count) {
    if (grid_count < 2) {
        throw std::invalid_argument("grid must have at least 2 intervals");
    }
    double g = static_cast<double>(grid_count);
    return TridiagonalSystem{grid_count, g * g};
}

TridiagonalSystem discretize(const PoissonProblem &problem) {
    problem.validate();
    return tridiagonal_for_grid(std::size_t{1} << problem.n);
}

double eigenvalue(int n, std::size_t j) {
    check_n(n);
    std::size_t grid = std::size_t{1} << n;
    if (j < 1 || j >= grid) {
        throw std::out_of_range("eigen index " + std::to_string(j) + " outside [1, " + std::to_string(grid - 1) + "]");
    }
    double g = static_cast<double>(grid);
    double s = std::sin(static_cast<double>(j) * std::numbers::pi / (2 * g));
    return 4 * g * g * s * s;
}

EigenPair eigenpair(int n, std::size_t j) {
    EigenPair result;
    result.j = j;
    result.lambda = eigenvalue(n, j);
    std::size_t grid = std::size_t{1} << n;
    double g = static_cast<double>(grid);
    double amp = std::sqrt(2 / g);
    result.u.resize(grid - 1);
    for (std::size_t k = 1; k < grid; k++) {
        // Reduce j*k mod 2N before scaling so large indices keep full precision.
        std::size_t phase = (j * k) % (2 * grid);
        result.u[k - 1] = amp * std::sin(static_cast<double>(phase) * std::numbers::pi / g);
    }
    return result;
}

std::vector<double> solve_classical(const TridiagonalSystem &system, std::span<const double> b) {
    std::size_t m = system.size();
    if (b.size() != m) {
        throw std::invalid_argument("right-hand side length does not match the system");
    }
    double diag = system.diagonal();
    double off = system.off_diagonal();

    // Forward sweep with the modified super-diagonal c' and right-hand side d'.
    std::vector<double> c(m), d(m);
    c[0] = off / diag;
    d[0] = b[0] / diag;
    for (std::size_t i = 1; i < m; i++) {
        double denom = diag - off * c[i - 1];
        c[i] = off / denom;
        d[i] = (b[i] - off * d[i - 1]) / denom;
    }
    std::vector<double> v(m);
    v[m - 1] = d[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) {
        v[i] = d[i] - c[i] * v[i + 1];
    }

    auto residual = system.multiply(v);
    for (std::size_t i = 0; i < m; i++) {
        residual[i] -= b[i];
    }
    double bn = norm2(b);
    if (norm2(residual) > 1e-10 * bn) {
        throw std::runtime_error("tridiagonal solve residual bound violated");
    }
    return v;
}

std::vector<double> spectral_coefficients(int n, std::span<const double> b) {
    check_n(n);
    check_length(n, b.size());
    std::size_t m = b.size();
    std::vector<double> beta(m);
    for (std::size_t j = 1; j <= m; j++) {
        auto pair = eigenpair(n, j);
        double acc = 0;
        for (std::size_t k = 0; k < m; k++) {
            acc += pair.u[k] * b[k];
        }
        beta[j - 1] = acc;
    }
    return beta;
}

std::vector<double> spectral_solve(int n, std::span<const double> b) {
    auto beta = spectral_coefficients(n, b);
    std::size_t m = b.size();
    std::vector<double> v(m, 0.0);
    for (std::size_t j = 1; j <= m; j++) {
        auto pair = eigenpair(n, j);
        double w = beta[j - 1] / pair.lambda;
        for (std::size_t k = 0; k < m; k++) {
            v[k] += w * pair.u[k];
        }
    }
    return v;
}

Preset parse_preset(const std::string &name) {
    if (name == "sin") {
        return Preset::kSin;
    }
    if (name == "const") {
        return Preset::kConst;
    }
    if (name == "ramp") {
        return Preset::kRamp;
    }
    if (name == "zero") {
        return Preset::kZero;
    }
    throw std::invalid_argument("unknown preset '" + name + "' (expected sin, const or ramp)");
}

std::string preset_name(Preset preset) {
    switch (preset) {
        case Preset::kSin:
            return "sin";
        case Preset::kConst:
            return "const";
        case Preset::kRamp:
            return "ramp";
        case Preset::kZero:
            return "zero";
    }
    throw std::invalid_argument("bad preset");
}

double preset_rhs(Preset preset, double x) {
    constexpr double pi = std::numbers::pi;
    switch (preset) {
        case Preset::kSin:
            return pi * pi * std::sin(pi * x);
        case Preset::kConst:
            return 1;
        case Preset::kRamp:
            return x;
        case Preset::kZero:
            return 0;
    }
    throw std::invalid_argument("bad preset");
}

double preset_solution(Preset preset, double x) {
    switch (preset) {
        case Preset::kSin:
            return std::sin(std::numbers::pi * x);
        case Preset::kConst:
            return x * (1 - x) / 2;
        case Preset::kRamp:
            return (x - x * x * x) / 6;
        case Preset::kZero:
            return 0;
    }
    throw std::invalid_argument("bad preset");
}

std::vector<double> sample_preset(Preset preset, int n) {
    check_n(n);
    std::size_t grid = std::size_t{1} << n;
    std::vector<double> b(grid - 1);
    for (std::size_t i = 1; i < grid; i++) {
        b[i - 1] = preset_rhs(preset, static_cast<double>(i) / static_cast<double>(grid));
    }
    return b;
}

std::vector<TruncationRow> truncation_study(Preset preset, std::span<const int> n_list) {
    std::vector<TruncationRow> rows;
    for (int n : n_list) {
        auto b = sample_preset(preset, n);
        auto system = discretize(PoissonProblem{n, b, preset_name(preset)});
        std::vector<double> v(b.size(), 0.0);
        if (norm2(b) > 0) {
            v = solve_classical(system, b);
        }
        double worst = 0;
        for (std::size_t i = 0; i < v.size(); i++) {
            double x = static_cast<double>(i + 1) / static_cast<double>(system.grid_count);
            worst = std::max(worst, std::abs(v[i] - preset_solution(preset, x)));
        }
        rows.push_back({n, worst});
    }
    return rows;
}

double truncation_slope(std::span<const TruncationRow> rows) {
    if (rows.size() < 2) {
        throw std::invalid_argument("need at least two rows to fit a slope");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &row : rows) {
        double x = row.n * std::log(2.0);
        double y = std::log(row.max_error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double k = static_cast<double>(rows.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double norm2(std::span<const double> v) {
    double acc = 0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

std::vector<double> normalized(std::span<const double> v) {
    double nrm = norm2(v);
    if (nrm == 0) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    std::vector<double> out(v.begin(), v.end());
    for (double &x : out) {
        x /= nrm;
    }
    return out;
}

}  // namespace qps
