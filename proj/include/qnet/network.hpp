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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/linalg.hpp"
#include "qnet/rng.hpp"

namespace qnet {

/// One motif: a column of N A-couplers followed by a column of N B-couplers
/// wrapped periodically, acting on 2N ports.
struct MotifParams {
    std::size_t n_couplers = 20;
    double theta = 0.0;
    double phi = 0.0;

    std::size_t n_modes() const { return 2 * n_couplers; }
    void validate() const;
};

struct PhaseLayer {
    std::vector<double> phases;
    double range_alpha = 0.0;
};

enum class ScenarioKind {
    /// W = U^M
    Pure,
    /// W = (U D'_1) D_1 (U D'_2) D_2 ... (U D'_M), every layer fresh
    FullyRandom,
    /// W = (U D)^M with D drawn once
    FixedMotifDisorder,
    /// W = (U D D_1)(U D D_2)...(U D D_M), D fixed and D_m fresh
    Intermediate,
};

std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);

struct Scenario {
    ScenarioKind kind = ScenarioKind::Pure;
    MotifParams motif;
    std::size_t depth = 1;
    double alpha_fixed = 0.0;
    double alpha_layer = 0.0;
    std::uint64_t seed = 0;
    /// FullyRandom only: draw a phase layer inside every motif in addition to
    /// the one between motifs.
    bool internal_phases = true;

    bool uses_alpha_fixed() const;
    bool uses_alpha_layer() const;
    void validate() const;
};

/// U = A_layer * B_layer.
ComplexMatrix build_motif(const MotifParams &params);

/// Draws n_modes phases uniformly on [0, alpha), in port order.
PhaseLayer build_phase_layer(std::size_t n_modes, double alpha, RngStream &rng);

/// Diagonal entries e^{i phase}.
std::vector<Complex> phase_factors(const PhaseLayer &layer);

ComplexMatrix phase_layer_matrix(const PhaseLayer &layer);

/// Builds W(m) one depth step at a time. Random layers are drawn lazily:
/// fixed layers at construction, then each step's layers in step order, so
/// the matrix after m steps equals compose() of the same scenario at depth m.
class ScenarioStepper {
  public:
    ScenarioStepper(const Scenario &scenario, RngStream rng);

    /// Multiplies in the next depth step and returns W(depth()).
    const ComplexMatrix &advance();

    const ComplexMatrix &current() const { return product_; }
    std::size_t depth() const { return depth_; }
    const ComplexMatrix &motif() const { return motif_; }
    /// The fixed layer D, empty for kinds without one.
    const std::optional<PhaseLayer> &fixed_layer() const { return fixed_; }

  private:
    std::vector<Complex> draw_factors(double alpha);

    Scenario scenario_;
    RngStream rng_;
    ComplexMatrix motif_;
    std::optional<PhaseLayer> fixed_;
    std::vector<Complex> fixed_factors_;
    ComplexMatrix product_;
    std::size_t depth_ = 0;
};

/// Total transfer matrix W(scenario.depth), randomness from stream
/// (scenario.seed, 0).
ComplexMatrix compose(const Scenario &scenario);

}  // namespace qnet
