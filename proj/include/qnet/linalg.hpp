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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qnet {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix of size dim x dim.
    explicit ComplexMatrix(std::size_t dim);
    /// Takes ownership of row-major entries; entries.size() must equal dim * dim.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    std::span<Complex> entries() { return entries_; }
    std::span<const Complex> entries() const { return entries_; }

    /// Largest absolute entry.
    double max_abs() const;

    bool operator==(const ComplexMatrix &other) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

using ComplexVector = std::vector<Complex>;

struct EigenDecomposition {
    std::vector<Complex> eigenvalues;
    /// Columns are orthonormal eigenvectors, in the order of `eigenvalues`.
    ComplexMatrix eigenvectors;
};

/// Hermitian generator recovered from a unitary, plus indices of eigenphases
/// that sit within `kBranchCutTolerance` of the (-pi, pi] cut.
struct LogResult {
    ComplexMatrix generator;
    std::vector<double> eigenphases;
    std::vector<std::size_t> near_branch_cut;
};

inline constexpr double kUnitaryTolerance = 1e-8;
inline constexpr double kBranchCutTolerance = 1e-6;

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector matvec(const ComplexMatrix &a, std::span<const Complex> v);
ComplexMatrix adjoint(const ComplexMatrix &a);

/// a * diag(phases); cheaper than a full product for phase layers.
ComplexMatrix scale_columns(const ComplexMatrix &a, std::span<const Complex> diag);

/// max |(a^dagger a - I)_ij|
double unitarity_defect(const ComplexMatrix &a);

/// max |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |(a - a^dagger)_ij|
double hermiticity_defect(const ComplexMatrix &a);

/// Spectral decomposition of a unitary via the complex Schur form. Throws
/// NotUnitary when the defect exceeds kUnitaryTolerance, ConvergenceError
/// when the QR iteration stalls.
EigenDecomposition eig_unitary(const ComplexMatrix &a);

/// V * diag(values) * V^dagger
ComplexMatrix reconstruct(const ComplexMatrix &vectors, std::span<const Complex> values);

/// Phase of z folded into (-pi, pi].
double principal_phase(Complex z);

/// H = -i log(a) with eigenphases on (-pi, pi]; exp(iH) == a.
LogResult principal_log_unitary(const ComplexMatrix &a);

}  // namespace qnet
