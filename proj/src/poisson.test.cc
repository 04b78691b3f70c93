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
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace qps;

TEST(poisson, discretize_small_grids) {
    auto a = discretize(PoissonProblem{2, {1, 2, 3}, {}});
    ASSERT_EQ(a.size(), 3u);
    ASSERT_EQ(a.diagonal(), 32);
    ASSERT_EQ(a.off_diagonal(), -16);

    auto b = discretize(PoissonProblem{3, std::vector<double>(7, 1.0), {}});
    ASSERT_EQ(b.size(), 7u);
    ASSERT_EQ(b.diagonal(), 128);
}

TEST(poisson, discretize_rejects_bad_problems) {
    ASSERT_THROW(discretize(PoissonProblem{1, {1}, {}}), std::invalid_argument);
    ASSERT_THROW(discretize(PoissonProblem{3, {1, 2, 3}, {}}), std::invalid_argument);
}

TEST(poisson, dense_matches_oracle_matrix) {
    for (int n = 2; n <= 5; n++) {
        auto a = tridiagonal_for_grid(std::size_t{1} << n).dense();
        auto want = oracle::poisson_matrix(n);
        std::size_t dim = interior_size(n);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                ASSERT_EQ(a[r * dim + c], want(r, c)) << n << " " << r << " " << c;
            }
        }
    }
}

TEST(poisson, eigenvalue_examples) {
    ASSERT_NEAR(eigenvalue(2, 2), 32, 1e-12);
    ASSERT_NEAR(eigenvalue(3, 4), 128, 1e-12);
    auto dense = oracle::dense_eigenvalues(2);
    ASSERT_NEAR(eigenvalue(2, 1), dense(0), 1e-10 * dense(0));
    ASSERT_NEAR(eigenvalue(2, 1), 9.372583, 1e-6);
    ASSERT_THROW(eigenvalue(2, 0), std::out_of_range);
    ASSERT_THROW(eigenvalue(2, 4), std::out_of_range);
}

TEST(poisson, eigenvalues_match_dense_solver) {
    for (int n = 2; n <= 8; n++) {
        auto dense = oracle::dense_eigenvalues(n);
        for (std::size_t j = 1; j <= interior_size(n); j++) {
            double want = dense(static_cast<Eigen::Index>(j - 1));
            ASSERT_LE(std::abs(eigenvalue(n, j) - want) / want, 1e-10) << "n=" << n << " j=" << j;
        }
    }
}

TEST(poisson, eigenpairs_are_orthonormal_eigenvectors) {
    for (int n = 2; n <= 6; n++) {
        auto a = oracle::poisson_matrix(n);
        auto dim = static_cast<Eigen::Index>(interior_size(n));
        Eigen::MatrixXd u(dim, dim);
        for (Eigen::Index j = 1; j <= dim; j++) {
            auto pair = eigenpair(n, static_cast<std::size_t>(j));
            ASSERT_EQ(pair.j, static_cast<std::size_t>(j));
            u.col(j - 1) = Eigen::Map<const Eigen::VectorXd>(pair.u.data(), dim);
            Eigen::VectorXd residual = a * u.col(j - 1) - pair.lambda * u.col(j - 1);
            ASSERT_LE(residual.norm(), 1e-10 * pair.lambda) << "n=" << n << " j=" << j;
        }
        Eigen::MatrixXd gram = u.transpose() * u;
        ASSERT_LE((gram - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-10);
        // Same vectors as the sine transform rows.
        ASSERT_LE((u.transpose() - oracle::sine_transform(n)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(poisson, multiply_matches_dense) {
    std::mt19937_64 rng(7);
    auto v = oracle::random_vector(15, rng);
    auto got = tridiagonal_for_grid(16).multiply(v);
    Eigen::VectorXd want = oracle::poisson_matrix(4) * Eigen::Map<const Eigen::VectorXd>(v.data(), 15);
    for (int i = 0; i < 15; i++) {
        ASSERT_NEAR(got[i], want(i), 1e-9);
    }
}

TEST(poisson, solve_classical_scalar_case) {
    auto v = solve_classical(tridiagonal_for_grid(2), std::vector<double>{8});
    ASSERT_EQ(v.size(), 1u);
    ASSERT_DOUBLE_EQ(v[0], 1);
}

TEST(poisson, solve_classical_demo_direction) {
    std::vector<double> b{1 / std::sqrt(2.0), 0.5, 0.5};
    auto v = normalized(solve_classical(tridiagonal_for_grid(4), b));
    std::vector<double> want{0.552987, 0.674065, 0.489736};
    ASSERT_LE(oracle::max_abs_diff(v, want), 1e-6);
}

TEST(poisson, solve_classical_matches_dense_and_spectral) {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 6; n++) {
        auto system = tridiagonal_for_grid(std::size_t{1} << n);
        for (int trial = 0; trial < 100; trial++) {
            auto b = oracle::random_vector(interior_size(n), rng);
            auto thomas = solve_classical(system, b);
            auto spectral = spectral_solve(n, b);
            auto dense = oracle::dense_solve(n, b);
            double scale = norm2(dense);
            for (std::size_t i = 0; i < b.size(); i++) {
                ASSERT_NEAR(thomas[i], spectral[i], 1e-10 * scale);
                ASSERT_NEAR(thomas[i], dense[i], 1e-10 * scale);
            }
            auto r = system.multiply(thomas);
            for (std::size_t i = 0; i < b.size(); i++) {
                r[i] -= b[i];
            }
            ASSERT_LE(norm2(r), 1e-10 * norm2(b));
        }
    }
}

TEST(poisson, spectral_solve_examples) {
    // Eigenvector input.
    auto u1 = eigenpair(3, 1);
    auto v = spectral_solve(3, u1.u);
    for (std::size_t i = 0; i < v.size(); i++) {
        ASSERT_NEAR(v[i], u1.u[i] / u1.lambda, 1e-12);
    }

    // Sum of all eigenvectors at n = 2.
    std::vector<double> b(3, 0.0), want(3, 0.0);
    for (std::size_t j = 1; j <= 3; j++) {
        auto p = eigenpair(2, j);
        for (int i = 0; i < 3; i++) {
            b[i] += p.u[i];
            want[i] += p.u[i] / p.lambda;
        }
    }
    auto got = spectral_solve(2, b);
    auto thomas = solve_classical(tridiagonal_for_grid(4), b);
    for (int i = 0; i < 3; i++) {
        ASSERT_NEAR(got[i], want[i], 1e-10);
        ASSERT_NEAR(got[i], thomas[i], 1e-10);
    }

    // First coordinate vector at n = 3.
    std::vector<double> e1(7, 0.0);
    e1[0] = 1;
    auto s = spectral_solve(3, e1);
    auto t = solve_classical(tridiagonal_for_grid(8), e1);
    for (int i = 0; i < 7; i++) {
        ASSERT_NEAR(s[i], t[i], 1e-12);
    }
}

TEST(poisson, spectral_coefficients_are_projections) {
    std::mt19937_64 rng(3);
    auto b = oracle::random_vector(7, rng);
    auto beta = spectral_coefficients(3, b);
    Eigen::VectorXd want = oracle::sine_transform(3) * Eigen::Map<const Eigen::VectorXd>(b.data(), 7);
    for (int j = 0; j < 7; j++) {
        ASSERT_NEAR(beta[j], want(j), 1e-12);
    }
}

TEST(poisson, presets) {
    ASSERT_EQ(parse_preset("sin"), Preset::kSin);
    ASSERT_EQ(parse_preset("const"), Preset::kConst);
    ASSERT_EQ(parse_preset("ramp"), Preset::kRamp);
    ASSERT_EQ(preset_name(Preset::kRamp), "ramp");
    ASSERT_THROW(parse_preset("cosine"), std::invalid_argument);

    auto b = sample_preset(Preset::kSin, 2);
    ASSERT_EQ(b.size(), 3u);
    double pi2 = std::numbers::pi * std::numbers::pi;
    ASSERT_DOUBLE_EQ(b[1], pi2);
    ASSERT_DOUBLE_EQ(b[0], pi2 * std::sin(std::numbers::pi / 4));
    ASSERT_DOUBLE_EQ(sample_preset(Preset::kRamp, 2)[2], 0.75);
    ASSERT_DOUBLE_EQ(sample_preset(Preset::kConst, 2)[0], 1);
}

TEST(poisson, truncation_error_is_second_order) {
    std::vector<int> ns{3, 4, 5, 6, 7, 8};
    auto rows = truncation_study(Preset::kSin, ns);
    for (std::size_t i = 1; i < rows.size(); i++) {
        double ratio = rows[i - 1].max_error / rows[i].max_error;
        ASSERT_NEAR(ratio, 4, 0.1) << "n=" << rows[i].n;
    }
    ASSERT_NEAR(truncation_slope(rows), -2, 0.1);
}

TEST(poisson, truncation_exact_cases) {
    std::vector<int> ns{3, 5, 8};
    for (const auto &row : truncation_study(Preset::kZero, ns)) {
        ASSERT_EQ(row.max_error, 0);
    }
    // Fourth derivatives vanish for both, so the stencil is exact.
    for (auto preset : {Preset::kRamp, Preset::kConst}) {
        for (const auto &row : truncation_study(preset, ns)) {
            ASSERT_LE(row.max_error, 1e-13) << preset_name(preset) << " n=" << row.n;
        }
    }
}

TEST(poisson, normalized_rejects_zero) {
    ASSERT_THROW(normalized(std::vector<double>{0, 0}), std::invalid_argument);
    auto v = normalized(std::vector<double>{3, 4});
    ASSERT_DOUBLE_EQ(v[0], 0.6);
    ASSERT_DOUBLE_EQ(v[1], 0.8);
}
