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
#include <vector>

#include "qnet/distribution.hpp"
#include "qnet/linalg.hpp"
#include "qnet/network.hpp"

namespace qnet {

/// Basis vector e_{input_port}.
ComplexVector initial_state(std::size_t n_modes, std::size_t input_port);

/// probs[n] = |<n| w |input_port>|^2. Throws NotUnitary for defect >= 1e-8.
Distribution propagate(const ComplexMatrix &w, std::size_t input_port);

/// Weighted variance of circular displacement from the input port.
double circular_variance(const Distribution &dist);

struct DepthSnapshot {
    std::size_t depth = 0;
    /// Arithmetic mean over realizations, summed in realization order.
    Distribution mean;
    double circular_variance = 0.0;
    /// IPR of the mean distribution.
    double ipr_of_mean = 0.0;
    /// Mean over realizations of each realization's IPR.
    double mean_ipr = 0.0;
};

struct EnsembleResult {
    Scenario scenario;
    std::size_t runs = 0;
    std::uint64_t master_seed = 0;
    /// Strictly increasing in depth.
    std::vector<DepthSnapshot> depth_trace;

    /// Mean distribution at the deepest requested depth.
    const Distribution &mean_dist() const { return depth_trace.back().mean; }
    const DepthSnapshot &at_depth(std::size_t depth) const;
};

struct EnsembleOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 0;
};

/// Distributions of one realization at each requested depth.
std::vector<Distribution> run_realization(
    const Scenario &scenario, std::size_t input_port, const std::vector<std::size_t> &depths, RngStream rng);

/// Realization r draws from stream (master_seed, r). scenario.depth and
/// scenario.seed are ignored in favour of `depths` and `master_seed`.
EnsembleResult run_ensemble(
    const Scenario &scenario,
    std::size_t input_port,
    const std::vector<std::size_t> &depths,
    std::size_t runs,
    std::uint64_t master_seed,
    EnsembleOptions options = {});

}  // namespace qnet
