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

#include "qnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qnet/errors.hpp"

namespace qnet {

namespace {

constexpr double kNormalizationTolerance = 1e-8;
constexpr double kHermitianTolerance = 1e-6;

void require_normalized(double total) {
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw InvalidArgument("input is not normalized (sum " + std::to_string(total) + ")");
    }
}

}  // namespace

std::string_view to_string(FitModel model) {
    return model == FitModel::Gaussian ? "gaussian" : "exponential";
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Diffusive:
            return "diffusive";
        case Regime::Localized:
            return "localized";
        case Regime::Ambiguous:
            return "ambiguous";
    }
    return "unknown";
}

FitReport fit_profile(const Distribution &dist, FitModel model, double floor) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t n = 0; n < dist.n_modes(); n++) {
        double p = dist.probs[n];
        if (!(p > floor)) {
            continue;
        }
        auto d = static_cast<double>(circular_displacement(n, dist.input_port, dist.n_modes()));
        xs.push_back(model == FitModel::Gaussian ? d * d : std::abs(d));
        ys.push_back(std::log10(p));
    }
    if (xs.size() < 3) {
        throw InsufficientSupport(
            "profile fit needs at least 3 ports above the floor, got " + std::to_string(xs.size()));
    }

    auto count = static_cast<double>(xs.size());
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t k = 0; k < xs.size(); k++) {
        x_mean += xs[k];
        y_mean += ys[k];
    }
    x_mean /= count;
    y_mean /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < xs.size(); k++) {
        sxx += (xs[k] - x_mean) * (xs[k] - x_mean);
        sxy += (xs[k] - x_mean) * (ys[k] - y_mean);
    }
    if (!(sxx > 0.0)) {
        throw InsufficientSupport("profile fit needs at least two distinct displacements");
    }
    double slope = sxy / sxx;
    double intercept = y_mean - slope * x_mean;

    double ssr = 0.0;
    for (std::size_t k = 0; k < xs.size(); k++) {
        double r = ys[k] - (intercept + slope * xs[k]);
        ssr += r * r;
    }
    return FitReport{model, intercept, -slope, ssr, xs.size()};
}

RegimeVerdict classify(const Distribution &dist, ClassifyThresholds thresholds, double floor) {
    RegimeVerdict out;
    out.gaussian = fit_profile(dist, FitModel::Gaussian, floor);
    out.exponential = fit_profile(dist, FitModel::Exponential, floor);

    double g = out.gaussian.ssr;
    double e = out.exponential.ssr;
    if (g == 0.0 && e == 0.0) {
        out.ssr_ratio = 1.0;
    } else if (e == 0.0) {
        out.ssr_ratio = std::numeric_limits<double>::infinity();
    } else {
        out.ssr_ratio = g / e;
    }

    if (out.ssr_ratio > thresholds.upper) {
        out.regime = Regime::Localized;
        if (out.exponential.decay > 0.0) {
            out.localization_length = std::numbers::log10e / out.exponential.decay;
        }
    } else if (out.ssr_ratio < thresholds.lower) {
        out.regime = Regime::Diffusive;
    } else {
        out.regime = Regime::Ambiguous;
    }
    return out;
}

double ipr(const Distribution &dist) {
    double total = 0.0;
    double acc = 0.0;
    for (double p : dist.probs) {
        total += p;
        acc += p * p;
    }
    require_normalized(total);
    return acc;
}

double ipr_vector(std::span<const Complex> v) {
    double total = 0.0;
    double acc = 0.0;
    for (const Complex &z : v) {
        double p = std::norm(z);
        total += p;
        acc += p * p;
    }
    require_normalized(total);
    return acc;
}

EffectiveHamiltonian effective_hamiltonian(const ComplexMatrix &w, std::size_t depth) {
    if (depth == 0) {
        throw InvalidArgument("effective Hamiltonian needs a positive depth");
    }
    LogResult log = principal_log_unitary(w);
    double scale = 1.0 / static_cast<double>(depth);
    for (Complex &z : log.generator.entries()) {
        z *= scale;
    }
    return EffectiveHamiltonian{std::move(log.generator), std::move(log.near_branch_cut)};
}

std::vector<BandMass> band_mass_profile(const ComplexMatrix &h) {
    double defect = hermiticity_defect(h);
    if (defect > kHermitianTolerance) {
        throw InvalidArgument("band profile needs a Hermitian matrix (defect " + std::to_string(defect) + ")");
    }
    std::size_t n = h.dim();
    std::size_t max_k = n / 2;

    // mass_at[k] collects |h_ij|^2 over entries at circular distance exactly k.
    std::vector<double> mass_at(max_k + 1, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            std::size_t gap = i > j ? i - j : j - i;
            std::size_t dist = std::min(gap, n - gap);
            double m = std::norm(h(i, j));
            mass_at[dist] += m;
            total += m;
        }
    }

    std::vector<BandMass> out(max_k + 1);
    double running = 0.0;
    for (std::size_t k = 0; k <= max_k; k++) {
        running += mass_at[k];
        out[k].k = k;
        out[k].fraction = total > 0.0 ? std::min(1.0, running / total) : 1.0;
    }
    out.back().fraction = 1.0;
    return out;
}

SpectralReport eigenvector_localization(const ComplexMatrix &w, std::size_t depth) {
    if (depth == 0) {
        throw InvalidArgument("spectral analysis needs a positive depth");
    }
    EigenDecomposition eig = eig_unitary(w);
    std::size_t n = w.dim();

    SpectralReport out;
    out.eigenphases.resize(n);
    std::vector<Complex> generator_diag(n);
    double ipr_sum = 0.0;
    ComplexVector column(n);
    for (std::size_t k = 0; k < n; k++) {
        double theta = principal_phase(eig.eigenvalues[k]);
        out.eigenphases[k] = theta;
        generator_diag[k] = theta / static_cast<double>(depth);
        if (std::numbers::pi - std::abs(theta) < kBranchCutTolerance) {
            out.near_branch_cut.push_back(k);
        }
        for (std::size_t i = 0; i < n; i++) {
            column[i] = eig.eigenvectors(i, k);
        }
        ipr_sum += ipr_vector(column);
    }
    out.eigenvector_ipr_mean = ipr_sum / static_cast<double>(n);
    out.band_mass_profile = band_mass_profile(reconstruct(eig.eigenvectors, generator_diag));
    return out;
}

}  // namespace qnet
