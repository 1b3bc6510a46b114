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

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qnet/distribution.hpp"
#include "qnet/linalg.hpp"

namespace qnet {

enum class FitModel {
    /// log10 P = a - b d^2
    Gaussian,
    /// log10 P = a - b |d|
    Exponential,
};

enum class Regime { Diffusive, Localized, Ambiguous };

std::string_view to_string(FitModel model);
std::string_view to_string(Regime regime);

inline constexpr double kDefaultFitFloor = 1e-12;

struct FitReport {
    FitModel model = FitModel::Gaussian;
    /// Intercept a.
    double amplitude_log = 0.0;
    /// Decay b, the negated regression slope.
    double decay = 0.0;
    /// Sum of squared residuals in log10 units.
    double ssr = 0.0;
    std::size_t n_points = 0;
};

struct ClassifyThresholds {
    double lower = 0.8;
    double upper = 1.25;
};

struct RegimeVerdict {
    Regime regime = Regime::Ambiguous;
    /// gaussian.ssr / exponential.ssr
    double ssr_ratio = 0.0;
    FitReport gaussian;
    FitReport exponential;
    /// log10(e) / b_exp in ports; set only when Localized.
    std::optional<double> localization_length;
};

struct BandMass {
    std::size_t k = 0;
    double fraction = 0.0;
};

struct SpectralReport {
    double eigenvector_ipr_mean = 0.0;
    /// Eigenphases of w on (-pi, pi].
    std::vector<double> eigenphases;
    /// Band profile of the effective Hamiltonian.
    std::vector<BandMass> band_mass_profile;
    /// Eigenphase indices within 1e-6 of the branch cut.
    std::vector<std::size_t> near_branch_cut;
};

/// Ordinary least squares of log10 probs against d^2 or |d| over ports whose
/// probability exceeds `floor`. Throws InsufficientSupport below 3 points.
FitReport fit_profile(const Distribution &dist, FitModel model, double floor = kDefaultFitFloor);

RegimeVerdict classify(
    const Distribution &dist, ClassifyThresholds thresholds = {}, double floor = kDefaultFitFloor);

/// Sum p_n^2. Throws InvalidArgument if the input is off normalization by more than 1e-8.
double ipr(const Distribution &dist);
/// Sum |v_n|^4, same normalization contract.
double ipr_vector(std::span<const Complex> v);

struct EffectiveHamiltonian {
    ComplexMatrix h;
    std::vector<std::size_t> near_branch_cut;
};

/// H = -i log(w) / depth on the principal branch.
EffectiveHamiltonian effective_hamiltonian(const ComplexMatrix &w, std::size_t depth);

/// Fraction of squared Frobenius mass inside the circular band |i - j| <= k,
/// for k = 0 .. n/2. Throws InvalidArgument when h is not Hermitian to 1e-6.
std::vector<BandMass> band_mass_profile(const ComplexMatrix &h);

/// Eigenvector IPRs of w and the band profile of its effective Hamiltonian.
SpectralReport eigenvector_localization(const ComplexMatrix &w, std::size_t depth = 1);

}  // namespace qnet
