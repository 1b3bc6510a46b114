// Copyright 2026 The qnet Authors
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

#include "qnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "qnet/errors.hpp"

using namespace qnet;

namespace {

constexpr double pi = std::numbers::pi;

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    return oracle::to(oracle::random_matrix(n, gen));
}

}  // namespace

TEST(linalg, matmul_identity_is_neutral) {
    ComplexMatrix x = random_matrix(4, 1);
    EXPECT_EQ(matmul(ComplexMatrix::identity(4), x), x);
    EXPECT_EQ(matmul(x, ComplexMatrix::identity(4)), x);
}

TEST(linalg, matmul_rotation_times_transpose) {
    double t = 0.37;
    ComplexMatrix rot(2, {std::cos(t), std::sin(t), -std::sin(t), std::cos(t)});
    ComplexMatrix inv(2, {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)});
    EXPECT_LT(max_abs_diff(matmul(rot, inv), ComplexMatrix::identity(2)), 1e-15);
}

TEST(linalg, matmul_matches_triple_loop) {
    ComplexMatrix a = random_matrix(3, 2);
    ComplexMatrix b = random_matrix(3, 3);
    EXPECT_LT(oracle::max_diff(oracle::from(matmul(a, b)), oracle::mul(oracle::from(a), oracle::from(b))), 1e-13);
}

TEST(linalg, matmul_rejects_mismatched_dims) {
    EXPECT_THROW(matmul(ComplexMatrix(2), ComplexMatrix(3)), DimensionMismatch);
}

TEST(linalg, matvec) {
    ComplexVector v{1.0, Complex(0, 2), -3.0, 0.5, Complex(1, 1)};
    EXPECT_EQ(matvec(ComplexMatrix::identity(5), v), v);

    // Cyclic permutation sends e_k to e_{k+1 mod 5}.
    ComplexMatrix perm(5);
    for (std::size_t k = 0; k < 5; k++) {
        perm((k + 1) % 5, k) = 1.0;
    }
    ComplexVector e2(5);
    e2[2] = 1.0;
    ComplexVector moved = matvec(perm, e2);
    for (std::size_t k = 0; k < 5; k++) {
        EXPECT_EQ(moved[k], k == 3 ? Complex(1.0) : Complex(0.0));
    }

    ComplexMatrix a = random_matrix(5, 4);
    ComplexVector out = matvec(a, v);
    for (std::size_t i = 0; i < 5; i++) {
        Complex acc = 0;
        for (std::size_t k = 0; k < 5; k++) {
            acc += a(i, k) * v[k];
        }
        EXPECT_LT(std::abs(out[i] - acc), 1e-13);
    }
    EXPECT_THROW(matvec(a, ComplexVector(4)), DimensionMismatch);
}

TEST(linalg, adjoint) {
    ComplexMatrix sym(2, {1.0, 2.0, 2.0, -1.0});
    EXPECT_EQ(adjoint(sym), sym);

    ComplexMatrix a(2, {0.0, Complex(0, 1), 0.0, 0.0});
    ComplexMatrix expected(2, {0.0, 0.0, Complex(0, -1), 0.0});
    EXPECT_EQ(adjoint(a), expected);

    ComplexMatrix r = random_matrix(6, 5);
    EXPECT_EQ(adjoint(adjoint(r)), r);
}

TEST(linalg, unitarity_defect) {
    EXPECT_EQ(unitarity_defect(ComplexMatrix::identity(5)), 0.0);
    std::vector<Complex> diag{2.0, 1.0, 1.0};
    EXPECT_DOUBLE_EQ(unitarity_defect(ComplexMatrix::diagonal(diag)), 3.0);
}

TEST(linalg, constructor_validates_entries) {
    EXPECT_THROW(ComplexMatrix(2, std::vector<Complex>(3)), InvalidArgument);
    EXPECT_THROW(ComplexMatrix(1, {Complex(NAN, 0)}), InvalidArgument);
}

TEST(linalg, matmul_is_associative) {
    for (std::size_t n : {5u, 17u, 40u}) {
        ComplexMatrix a = random_matrix(n, 10 + n);
        ComplexMatrix b = random_matrix(n, 20 + n);
        ComplexMatrix c = random_matrix(n, 30 + n);
        ComplexMatrix left = matmul(matmul(a, b), c);
        ComplexMatrix right = matmul(a, matmul(b, c));
        EXPECT_LT(max_abs_diff(left, right) / left.max_abs(), 1e-12) << "n=" << n;
    }
}

TEST(eig_unitary, diagonal_phases) {
    std::vector<Complex> diag{std::polar(1.0, 0.3), std::polar(1.0, -1.1)};
    EigenDecomposition eig = eig_unitary(ComplexMatrix::diagonal(diag));
    ASSERT_EQ(eig.eigenvalues.size(), 2u);
    for (std::size_t k = 0; k < 2; k++) {
        // Each eigenvector is a basis vector up to phase; match it to its eigenvalue.
        std::size_t hot = std::abs(eig.eigenvectors(0, k)) > 0.5 ? 0 : 1;
        EXPECT_NEAR(std::abs(eig.eigenvectors(hot, k)), 1.0, 1e-12);
        EXPECT_LT(std::abs(eig.eigenvalues[k] - diag[hot]), 1e-12);
    }
}

TEST(eig_unitary, rotation_spectrum) {
    double t = 0.8;
    ComplexMatrix rot(2, {std::cos(t), std::sin(t), -std::sin(t), std::cos(t)});
    EigenDecomposition eig = eig_unitary(rot);
    std::vector<double> phases{principal_phase(eig.eigenvalues[0]), principal_phase(eig.eigenvalues[1])};
    std::sort(phases.begin(), phases.end());
    EXPECT_NEAR(phases[0], -t, 1e-12);
    EXPECT_NEAR(phases[1], t, 1e-12);
}

TEST(eig_unitary, round_trip_on_random_unitaries) {
    for (std::size_t n : {6u, 20u, 40u, 80u}) {
        ComplexMatrix u = oracle::to(oracle::random_unitary(n, n));
        EigenDecomposition eig = eig_unitary(u);
        EXPECT_LT(max_abs_diff(reconstruct(eig.eigenvectors, eig.eigenvalues), u), 1e-8) << n;
        EXPECT_LT(unitarity_defect(eig.eigenvectors), 1e-10) << n;
        for (const Complex &z : eig.eigenvalues) {
            EXPECT_LT(std::abs(std::abs(z) - 1.0), 1e-10);
        }
    }
}

TEST(eig_unitary, degenerate_spectrum_keeps_orthonormal_vectors) {
    // Reflection-like unitary with a 3-fold degenerate eigenvalue.
    oracle::Mat v = oracle::random_unitary(5, 99);
    std::vector<Complex> vals{1.0, 1.0, 1.0, Complex(0, 1), -1.0};
    ComplexMatrix u = reconstruct(oracle::to(v), vals);
    EigenDecomposition eig = eig_unitary(u);
    EXPECT_LT(unitarity_defect(eig.eigenvectors), 1e-10);
    EXPECT_LT(max_abs_diff(reconstruct(eig.eigenvectors, eig.eigenvalues), u), 1e-8);
}

TEST(eig_unitary, rejects_non_unitary) {
    std::vector<Complex> diag{2.0, 1.0};
    EXPECT_THROW(eig_unitary(ComplexMatrix::diagonal(diag)), NotUnitary);
}

TEST(principal_log, identity_gives_zero) {
    LogResult log = principal_log_unitary(ComplexMatrix::identity(4));
    EXPECT_LT(log.generator.max_abs(), 1e-15);
    EXPECT_TRUE(log.near_branch_cut.empty());
}

TEST(principal_log, single_phase) {
    std::vector<Complex> diag{std::polar(1.0, pi / 3)};
    LogResult log = principal_log_unitary(ComplexMatrix::diagonal(diag));
    EXPECT_NEAR(log.generator(0, 0).real(), pi / 3, 1e-15);
    EXPECT_NEAR(log.generator(0, 0).imag(), 0.0, 1e-15);
}

TEST(principal_log, exp_round_trip_on_random_unitaries) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        oracle::Mat u = oracle::random_unitary(6, seed);
        LogResult log = principal_log_unitary(oracle::to(u));
        EXPECT_LT(hermiticity_defect(log.generator), 1e-8);
        oracle::Mat ih = oracle::from(log.generator);
        for (auto &row : ih) {
            for (auto &z : row) {
                z *= Complex(0, 1);
            }
        }
        EXPECT_LT(oracle::max_diff(oracle::expm(ih), u), 1e-7) << seed;
        for (double theta : log.eigenphases) {
            EXPECT_GT(theta, -pi);
            EXPECT_LE(theta, pi);
        }
    }
}

TEST(principal_log, flags_phases_at_the_branch_cut) {
    std::vector<Complex> diag{-1.0, std::polar(1.0, pi - 1e-8), std::polar(1.0, 0.5)};
    LogResult log = principal_log_unitary(ComplexMatrix::diagonal(diag));
    EXPECT_EQ(log.near_branch_cut.size(), 2u);
    for (double theta : log.eigenphases) {
        EXPECT_GT(theta, -pi);
    }
}

TEST(principal_phase, folds_minus_pi) {
    EXPECT_EQ(principal_phase(Complex(-1.0, -0.0)), pi);
    EXPECT_EQ(principal_phase(Complex(-1.0, 0.0)), pi);
}
