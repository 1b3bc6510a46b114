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
#include <filesystem>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qnet/analysis.hpp"
#include "qnet/config.hpp"
#include "qnet/simulator.hpp"

namespace qnet {

struct CommandOptions {
    /// Ensemble worker threads; 0 picks the hardware concurrency. Never
    /// changes any output byte.
    std::size_t threads = 0;
    /// Progress messages go here unless null.
    std::ostream *log = nullptr;
};

/// Writes dist_M<depth>.csv, verdict_M<depth>.json, variance_trace.csv,
/// optionally spectral.json, and effective_config.json into config.output.
void cmd_simulate(const RunConfig &config, const CommandOptions &options = {});

/// One ensemble per entry of config.scan_alphas, plus scan_summary.csv.
void cmd_scan_alpha(const RunConfig &config, const CommandOptions &options = {});

/// spectral.json for W at the deepest depth and for a single motif step.
void cmd_spectrum(const RunConfig &config, const CommandOptions &options = {});

/// %.17g
std::string format_real(double value);

/// CSV `port,probability,log10_probability`, one-based ports, empty log
/// field at or below `floor`, and a trailing `# sum=` comment.
std::string distribution_csv(const Distribution &dist, double floor);

nlohmann::json verdict_json(const DepthSnapshot &snapshot, const RunConfig &config);
nlohmann::json spectral_json(const SpectralReport &report, std::size_t depth);

}  // namespace qnet
