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

#include <Eigen/Dense>

#include "qnet/errors.hpp"

namespace qnet {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const ComplexMatrix &a) {
    return {a.entries().data(), static_cast<Eigen::Index>(a.dim()), static_cast<Eigen::Index>(a.dim())};
}

void require_same_dim(std::size_t lhs, std::size_t rhs) {
    if (lhs != rhs) {
        throw DimensionMismatch(lhs, rhs);
    }
}

void require_unitary(const ComplexMatrix &a) {
    double defect = unitarity_defect(a);
    if (!(defect < kUnitaryTolerance)) {
        throw NotUnitary(defect);
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw InvalidArgument(
            "matrix of dim " + std::to_string(dim_) + " needs " + std::to_string(dim_ * dim_) + " entries, got " +
            std::to_string(entries_.size()));
    }
    for (const Complex &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix out(dim);
    for (std::size_t i = 0; i < dim; i++) {
        out(i, i) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix out(diag.size());
    for (std::size_t i = 0; i < diag.size(); i++) {
        out(i, i) = diag[i];
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex &z : entries_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim());
    std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexVector matvec(const ComplexMatrix &a, std::span<const Complex> v) {
    require_same_dim(a.dim(), v.size());
    std::size_t n = a.dim();
    ComplexVector out(n);
    for (std::size_t i = 0; i < n; i++) {
        Complex acc{};
        for (std::size_t k = 0; k < n; k++) {
            acc += a(i, k) * v[k];
        }
        out[i] = acc;
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix scale_columns(const ComplexMatrix &a, std::span<const Complex> diag) {
    require_same_dim(a.dim(), diag.size());
    ComplexMatrix out = a;
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            out(i, j) *= diag[j];
        }
    }
    return out;
}

double unitarity_defect(const ComplexMatrix &a) {
    std::size_t n = a.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            // (a^dagger a)_ij = sum_k conj(a_ki) a_kj
            Complex acc{};
            for (std::size_t k = 0; k < n; k++) {
                acc += std::conj(a(k, i)) * a(k, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a.dim(), b.dim());
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double hermiticity_defect(const ComplexMatrix &a) {
    std::size_t n = a.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

EigenDecomposition eig_unitary(const ComplexMatrix &a) {
    require_unitary(a);
    std::size_t n = a.dim();

    // A unitary matrix is normal, so its Schur form is diagonal up to rounding
    // and the Schur vectors are an orthonormal eigenbasis even for degenerate
    // eigenvalues.
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(n);
    schur.compute(Eigen::MatrixXcd(as_eigen(a)), true);
    if (schur.info() != Eigen::Success) {
        throw ConvergenceError("complex Schur QR iteration", schur.getMaxIterations());
    }
    const Eigen::MatrixXcd &t = schur.matrixT();
    const Eigen::MatrixXcd &q = schur.matrixU();

    EigenDecomposition out{std::vector<Complex>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; k++) {
        auto kk = static_cast<Eigen::Index>(k);
        out.eigenvalues[k] = t(kk, kk);
        for (std::size_t i = 0; i < n; i++) {
            out.eigenvectors(i, k) = q(static_cast<Eigen::Index>(i), kk);
        }
    }
    return out;
}

ComplexMatrix reconstruct(const ComplexMatrix &vectors, std::span<const Complex> values) {
    require_same_dim(vectors.dim(), values.size());
    std::size_t n = vectors.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            Complex acc{};
            for (std::size_t k = 0; k < n; k++) {
                acc += vectors(i, k) * values[k] * std::conj(vectors(j, k));
            }
            out(i, j) = acc;
        }
    }
    return out;
}

double principal_phase(Complex z) {
    double phase = std::arg(z);
    if (phase <= -std::numbers::pi) {
        phase = std::numbers::pi;
    }
    return phase;
}

LogResult principal_log_unitary(const ComplexMatrix &a) {
    EigenDecomposition eig = eig_unitary(a);
    std::size_t n = a.dim();

    LogResult out;
    out.eigenphases.resize(n);
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; k++) {
        double theta = principal_phase(eig.eigenvalues[k]);
        out.eigenphases[k] = theta;
        phases[k] = theta;
        if (std::numbers::pi - std::abs(theta) < kBranchCutTolerance) {
            out.near_branch_cut.push_back(k);
        }
    }
    out.generator = reconstruct(eig.eigenvectors, phases);
    return out;
}

}  // namespace qnet
