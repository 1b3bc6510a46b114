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

#include "qnet/network.hpp"

#include <cmath>
#include <numbers>

#include "qnet/errors.hpp"

namespace qnet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_alpha(double alpha, const char *name) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > kTwoPi) {
        throw InvalidArgument(std::string(name) + " must lie in [0, 2pi], got " + std::to_string(alpha));
    }
}

}  // namespace

void MotifParams::validate() const {
    if (n_couplers < 2) {
        throw InvalidArgument("n_couplers must be at least 2, got " + std::to_string(n_couplers));
    }
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw InvalidArgument("coupler angles must be finite");
    }
}

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Pure:
            return "pure";
        case ScenarioKind::FullyRandom:
            return "fully_random";
        case ScenarioKind::FixedMotifDisorder:
            return "fixed_motif_disorder";
        case ScenarioKind::Intermediate:
            return "intermediate";
    }
    return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
    for (ScenarioKind kind : {ScenarioKind::Pure, ScenarioKind::FullyRandom, ScenarioKind::FixedMotifDisorder,
                              ScenarioKind::Intermediate}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

bool Scenario::uses_alpha_fixed() const {
    return kind == ScenarioKind::FixedMotifDisorder || kind == ScenarioKind::Intermediate;
}

bool Scenario::uses_alpha_layer() const {
    return kind == ScenarioKind::FullyRandom || kind == ScenarioKind::Intermediate;
}

void Scenario::validate() const {
    motif.validate();
    if (depth < 1) {
        throw InvalidArgument("depth must be positive");
    }
    if (uses_alpha_fixed()) {
        require_alpha(alpha_fixed, "alpha_fixed");
    } else if (alpha_fixed != 0.0) {
        throw InvalidArgument("alpha_fixed is not used by scenario kind " + std::string(to_string(kind)));
    }
    if (uses_alpha_layer()) {
        require_alpha(alpha_layer, "alpha_layer");
    } else if (alpha_layer != 0.0) {
        throw InvalidArgument("alpha_layer is not used by scenario kind " + std::string(to_string(kind)));
    }
}

ComplexMatrix build_motif(const MotifParams &params) {
    params.validate();
    std::size_t n = params.n_modes();
    double ct = std::cos(params.theta);
    double st = std::sin(params.theta);
    double cp = std::cos(params.phi);
    double sp = std::sin(params.phi);

    ComplexMatrix a_layer(n);
    for (std::size_t i = 0; i < params.n_couplers; i++) {
        std::size_t top = 2 * i;
        a_layer(top, top) = ct;
        a_layer(top, top + 1) = st;
        a_layer(top + 1, top) = -st;
        a_layer(top + 1, top + 1) = ct;
    }

    ComplexMatrix b_layer(n);
    for (std::size_t i = 0; i + 1 < params.n_couplers; i++) {
        std::size_t top = 2 * i + 1;
        b_layer(top, top) = cp;
        b_layer(top, top + 1) = sp;
        b_layer(top + 1, top) = -sp;
        b_layer(top + 1, top + 1) = cp;
    }
    // Periodic wrap: the last B-coupler joins port 2N-1 back to port 0.
    b_layer(0, 0) = cp;
    b_layer(0, n - 1) = -sp;
    b_layer(n - 1, 0) = sp;
    b_layer(n - 1, n - 1) = cp;

    return matmul(a_layer, b_layer);
}

PhaseLayer build_phase_layer(std::size_t n_modes, double alpha, RngStream &rng) {
    require_alpha(alpha, "phase range");
    if (n_modes == 0 || n_modes % 2 != 0) {
        throw InvalidArgument("phase layer needs a positive even mode count, got " + std::to_string(n_modes));
    }
    PhaseLayer layer{std::vector<double>(n_modes), alpha};
    for (double &phase : layer.phases) {
        phase = alpha * rng.uniform();
    }
    return layer;
}

std::vector<Complex> phase_factors(const PhaseLayer &layer) {
    std::vector<Complex> out(layer.phases.size());
    for (std::size_t k = 0; k < out.size(); k++) {
        out[k] = std::polar(1.0, layer.phases[k]);
    }
    return out;
}

ComplexMatrix phase_layer_matrix(const PhaseLayer &layer) {
    return ComplexMatrix::diagonal(phase_factors(layer));
}

ScenarioStepper::ScenarioStepper(const Scenario &scenario, RngStream rng)
    : scenario_(scenario), rng_(std::move(rng)) {
    scenario_.validate();
    motif_ = build_motif(scenario_.motif);
    product_ = ComplexMatrix::identity(scenario_.motif.n_modes());
    if (scenario_.uses_alpha_fixed()) {
        fixed_ = build_phase_layer(scenario_.motif.n_modes(), scenario_.alpha_fixed, rng_);
        fixed_factors_ = phase_factors(*fixed_);
    }
}

std::vector<Complex> ScenarioStepper::draw_factors(double alpha) {
    return phase_factors(build_phase_layer(scenario_.motif.n_modes(), alpha, rng_));
}

const ComplexMatrix &ScenarioStepper::advance() {
    switch (scenario_.kind) {
        case ScenarioKind::Pure:
            product_ = matmul(product_, motif_);
            break;
        case ScenarioKind::FullyRandom:
            // The inter-motif layer D_{m-1} is drawn only once a further motif
            // follows it, so W(m) never ends in a trailing D.
            if (depth_ > 0) {
                product_ = scale_columns(product_, draw_factors(scenario_.alpha_layer));
            }
            product_ = matmul(product_, motif_);
            if (scenario_.internal_phases) {
                product_ = scale_columns(product_, draw_factors(scenario_.alpha_layer));
            }
            break;
        case ScenarioKind::FixedMotifDisorder:
            product_ = scale_columns(matmul(product_, motif_), fixed_factors_);
            break;
        case ScenarioKind::Intermediate: {
            std::vector<Complex> step = draw_factors(scenario_.alpha_layer);
            for (std::size_t k = 0; k < step.size(); k++) {
                step[k] *= fixed_factors_[k];
            }
            product_ = scale_columns(matmul(product_, motif_), step);
            break;
        }
    }
    depth_++;
    return product_;
}

ComplexMatrix compose(const Scenario &scenario) {
    ScenarioStepper stepper(scenario, RngStream(scenario.seed, 0));
    for (std::size_t m = 0; m < scenario.depth; m++) {
        stepper.advance();
    }
    return stepper.current();
}

}  // namespace qnet
