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
#include <vector>

namespace qnet {

/// Output-port probabilities of a single excitation launched at input_port.
struct Distribution {
    std::vector<double> probs;
    std::size_t input_port = 0;

    std::size_t n_modes() const { return probs.size(); }
};

/// Probabilities in [-1e-15, 0) are treated as rounding noise and clamped.
inline constexpr double kNegativeClampTolerance = 1e-15;

/// Validates and normalizes raw probabilities. Throws NumericalError on
/// entries below -kNegativeClampTolerance, non-finite entries, or a zero sum.
Distribution make_distribution(std::vector<double> probs, std::size_t input_port);

/// Signed minimal displacement of port from anchor on a ring of n_modes,
/// in [-n_modes/2, n_modes/2).
long circular_displacement(std::size_t port, std::size_t anchor, std::size_t n_modes);

}  // namespace qnet
