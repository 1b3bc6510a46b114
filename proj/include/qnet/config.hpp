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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qnet/analysis.hpp"
#include "qnet/errors.hpp"
#include "qnet/network.hpp"

namespace qnet {

/// A configuration problem tied to one key (dotted path, e.g. "scenario.theta").
class ConfigError : public InvalidArgument {
  public:
    ConfigError(std::string key, const std::string &message)
        : InvalidArgument("config key '" + key + "': " + message), key_(std::move(key)) {}
    const std::string &key() const { return key_; }

  private:
    std::string key_;
};

struct EmitSet {
    bool distributions = true;
    bool fits = true;
    bool variance_trace = true;
    bool spectral = false;
};

/// Which phase range scan-alpha sweeps.
enum class ScanTarget { AlphaFixed, AlphaLayer };

struct RunConfig {
    /// scenario.depth mirrors depths.back().
    Scenario scenario;
    std::vector<std::size_t> depths{10};
    /// One-based, as in the figures; 1 .. 2N.
    std::size_t input_port = 20;
    std::size_t runs = 1000;
    std::string output = "out";
    EmitSet emit;
    double fit_floor = kDefaultFitFloor;
    ClassifyThresholds thresholds;
    std::vector<double> scan_alphas;
    ScanTarget scan_target = ScanTarget::AlphaFixed;

    std::size_t input_index() const { return input_port - 1; }
    void validate() const;
};

/// Accepts a JSON number or a multiple of pi written as "pi", "pi/16",
/// "2pi", "0.1*pi", "3*pi/4".
double parse_angle(const nlohmann::json &value, const std::string &key);

/// Builds a validated RunConfig; missing keys take their defaults and unknown
/// keys are rejected.
RunConfig parse_config(const nlohmann::json &doc);
RunConfig load_config(const std::filesystem::path &path);

/// Effective configuration with every default filled in. Feeding the result
/// back through parse_config yields an identical RunConfig.
nlohmann::json to_json(const RunConfig &config);

/// The six phase ranges pi/16 .. 2pi.
std::vector<double> default_scan_alphas();

}  // namespace qnet
