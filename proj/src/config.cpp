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

#include "qnet/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <set>

namespace qnet {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json &object, const std::string &prefix, const std::set<std::string> &allowed) {
    for (const auto &[key, value] : object.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError(prefix + key, "unknown key");
        }
    }
}

const json &require_object(const json &value, const std::string &key) {
    if (!value.is_object()) {
        throw ConfigError(key, "expected an object");
    }
    return value;
}

std::size_t parse_count(const json &value, const std::string &key, std::size_t min) {
    if (!value.is_number_integer() || (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
        throw ConfigError(key, "expected a non-negative integer");
    }
    auto out = value.get<std::uint64_t>();
    if (out < min) {
        throw ConfigError(key, "must be at least " + std::to_string(min));
    }
    return static_cast<std::size_t>(out);
}

double parse_real(const json &value, const std::string &key) {
    if (!value.is_number()) {
        throw ConfigError(key, "expected a number");
    }
    double out = value.get<double>();
    if (!std::isfinite(out)) {
        throw ConfigError(key, "must be finite");
    }
    return out;
}

std::vector<double> parse_angle_list(const json &value, const std::string &key) {
    if (!value.is_array() || value.empty()) {
        throw ConfigError(key, "expected a non-empty array");
    }
    std::vector<double> out;
    for (std::size_t k = 0; k < value.size(); k++) {
        out.push_back(parse_angle(value[k], key + "[" + std::to_string(k) + "]"));
    }
    return out;
}

void parse_scenario(const json &doc, RunConfig &config) {
    const std::string p = "scenario.";
    reject_unknown_keys(
        doc, p,
        {"kind", "n_couplers", "theta", "phi", "alpha_fixed", "alpha_layer", "internal_phases", "depths", "seed"});
    Scenario &s = config.scenario;

    if (!doc.contains("kind")) {
        throw ConfigError(p + "kind", "missing");
    }
    if (!doc["kind"].is_string()) {
        throw ConfigError(p + "kind", "expected a string");
    }
    auto kind = parse_scenario_kind(doc["kind"].get<std::string>());
    if (!kind) {
        throw ConfigError(
            p + "kind", "expected one of pure, fully_random, fixed_motif_disorder, intermediate");
    }
    s.kind = *kind;
    if (doc.contains("n_couplers")) {
        s.motif.n_couplers = parse_count(doc["n_couplers"], p + "n_couplers", 2);
    }
    if (doc.contains("theta")) {
        s.motif.theta = parse_angle(doc["theta"], p + "theta");
    }
    if (doc.contains("phi")) {
        s.motif.phi = parse_angle(doc["phi"], p + "phi");
    }
    if (doc.contains("alpha_fixed")) {
        s.alpha_fixed = parse_angle(doc["alpha_fixed"], p + "alpha_fixed");
    }
    if (doc.contains("alpha_layer")) {
        s.alpha_layer = parse_angle(doc["alpha_layer"], p + "alpha_layer");
    }
    if (doc.contains("internal_phases")) {
        if (!doc["internal_phases"].is_boolean()) {
            throw ConfigError(p + "internal_phases", "expected true or false");
        }
        s.internal_phases = doc["internal_phases"].get<bool>();
    }
    if (doc.contains("depths")) {
        const json &depths = doc["depths"];
        if (!depths.is_array() || depths.empty()) {
            throw ConfigError(p + "depths", "expected a non-empty array");
        }
        config.depths.clear();
        for (std::size_t k = 0; k < depths.size(); k++) {
            config.depths.push_back(parse_count(depths[k], p + "depths[" + std::to_string(k) + "]", 1));
        }
    }
    if (doc.contains("seed")) {
        const json &seed = doc["seed"];
        if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
            throw ConfigError(p + "seed", "expected an unsigned 64-bit integer");
        }
        s.seed = doc["seed"].get<std::uint64_t>();
    }
}

}  // namespace

std::vector<double> default_scan_alphas() {
    constexpr double pi = std::numbers::pi;
    return {pi / 16, pi / 8, pi / 4, pi / 2, pi, 2 * pi};
}

double parse_angle(const json &value, const std::string &key) {
    if (value.is_number()) {
        return parse_real(value, key);
    }
    if (!value.is_string()) {
        throw ConfigError(key, "expected a number or a multiple of pi such as \"pi/4\"");
    }
    static const std::regex pattern(
        R"(^\s*([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)?\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
    std::smatch match;
    std::string text = value.get<std::string>();
    if (!std::regex_match(text, match, pattern)) {
        throw ConfigError(key, "cannot read angle \"" + text + "\"");
    }
    double coefficient = match[1].matched ? std::stod(match[1].str()) : 1.0;
    double denominator = match[2].matched ? std::stod(match[2].str()) : 1.0;
    if (denominator == 0.0) {
        throw ConfigError(key, "division by zero in \"" + text + "\"");
    }
    return coefficient * std::numbers::pi / denominator;
}

void RunConfig::validate() const {
    try {
        scenario.validate();
    } catch (const ConfigError &) {
        throw;
    } catch (const InvalidArgument &e) {
        throw ConfigError("scenario", e.what());
    }
    for (std::size_t k = 1; k < depths.size(); k++) {
        if (depths[k] <= depths[k - 1]) {
            throw ConfigError("scenario.depths", "must be strictly increasing");
        }
    }
    if (depths.empty()) {
        throw ConfigError("scenario.depths", "must not be empty");
    }
    if (input_port < 1 || input_port > scenario.motif.n_modes()) {
        throw ConfigError(
            "input_port", "must lie in [1, " + std::to_string(scenario.motif.n_modes()) + "], got " +
                              std::to_string(input_port));
    }
    if (runs < 1) {
        throw ConfigError("runs", "must be positive");
    }
    if (!(fit_floor >= 0.0)) {
        throw ConfigError("analysis.fit_floor", "must be non-negative");
    }
    if (!(thresholds.lower > 0.0) || !(thresholds.lower <= thresholds.upper)) {
        throw ConfigError("analysis", "thresholds need 0 < lower <= upper");
    }
    for (std::size_t k = 0; k < scan_alphas.size(); k++) {
        if (scan_alphas[k] < 0.0 || scan_alphas[k] > 2.0 * std::numbers::pi) {
            throw ConfigError("scan.alphas[" + std::to_string(k) + "]", "must lie in [0, 2pi]");
        }
    }
}

RunConfig parse_config(const json &doc) {
    require_object(doc, "<root>");
    reject_unknown_keys(doc, "", {"scenario", "input_port", "runs", "output", "emit", "analysis", "scan"});

    RunConfig config;
    config.scenario.motif.theta = std::numbers::pi / 4;
    config.scenario.motif.phi = std::numbers::pi / 4;
    config.scan_alphas = default_scan_alphas();

    if (!doc.contains("scenario")) {
        throw ConfigError("scenario", "missing");
    }
    parse_scenario(require_object(doc["scenario"], "scenario"), config);
    config.scenario.depth = config.depths.back();
    config.input_port = config.scenario.motif.n_couplers;
    config.scan_target = config.scenario.kind == ScenarioKind::FixedMotifDisorder ? ScanTarget::AlphaFixed
                                                                                   : ScanTarget::AlphaLayer;

    if (doc.contains("input_port")) {
        config.input_port = parse_count(doc["input_port"], "input_port", 1);
    }
    if (doc.contains("runs")) {
        config.runs = parse_count(doc["runs"], "runs", 1);
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string()) {
            throw ConfigError("output", "expected a path string");
        }
        config.output = doc["output"].get<std::string>();
    }
    if (doc.contains("emit")) {
        const json &emit = doc["emit"];
        if (!emit.is_array()) {
            throw ConfigError("emit", "expected an array");
        }
        config.emit = EmitSet{false, false, false, false};
        for (const json &item : emit) {
            std::string name = item.is_string() ? item.get<std::string>() : "";
            if (name == "distributions") {
                config.emit.distributions = true;
            } else if (name == "fits") {
                config.emit.fits = true;
            } else if (name == "variance_trace") {
                config.emit.variance_trace = true;
            } else if (name == "spectral") {
                config.emit.spectral = true;
            } else {
                throw ConfigError("emit", "unknown output kind " + item.dump());
            }
        }
    }
    if (doc.contains("analysis")) {
        const json &analysis = require_object(doc["analysis"], "analysis");
        reject_unknown_keys(analysis, "analysis.", {"fit_floor", "lower", "upper"});
        if (analysis.contains("fit_floor")) {
            config.fit_floor = parse_real(analysis["fit_floor"], "analysis.fit_floor");
        }
        if (analysis.contains("lower")) {
            config.thresholds.lower = parse_real(analysis["lower"], "analysis.lower");
        }
        if (analysis.contains("upper")) {
            config.thresholds.upper = parse_real(analysis["upper"], "analysis.upper");
        }
    }
    if (doc.contains("scan")) {
        const json &scan = require_object(doc["scan"], "scan");
        reject_unknown_keys(scan, "scan.", {"alphas", "target"});
        if (scan.contains("alphas")) {
            config.scan_alphas = parse_angle_list(scan["alphas"], "scan.alphas");
        }
        if (scan.contains("target")) {
            std::string target = scan["target"].is_string() ? scan["target"].get<std::string>() : "";
            if (target == "alpha_fixed") {
                config.scan_target = ScanTarget::AlphaFixed;
            } else if (target == "alpha_layer") {
                config.scan_target = ScanTarget::AlphaLayer;
            } else {
                throw ConfigError("scan.target", "expected alpha_fixed or alpha_layer");
            }
        }
    }

    config.validate();
    return config;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

json to_json(const RunConfig &config) {
    const Scenario &s = config.scenario;
    json emit = json::array();
    if (config.emit.distributions) {
        emit.push_back("distributions");
    }
    if (config.emit.fits) {
        emit.push_back("fits");
    }
    if (config.emit.variance_trace) {
        emit.push_back("variance_trace");
    }
    if (config.emit.spectral) {
        emit.push_back("spectral");
    }
    return json{
        {"scenario",
         {
             {"kind", std::string(to_string(s.kind))},
             {"n_couplers", s.motif.n_couplers},
             {"theta", s.motif.theta},
             {"phi", s.motif.phi},
             {"alpha_fixed", s.alpha_fixed},
             {"alpha_layer", s.alpha_layer},
             {"internal_phases", s.internal_phases},
             {"depths", config.depths},
             {"seed", s.seed},
         }},
        {"input_port", config.input_port},
        {"runs", config.runs},
        {"output", config.output},
        {"emit", emit},
        {"analysis",
         {{"fit_floor", config.fit_floor}, {"lower", config.thresholds.lower}, {"upper", config.thresholds.upper}}},
        {"scan",
         {{"alphas", config.scan_alphas},
          {"target", config.scan_target == ScanTarget::AlphaFixed ? "alpha_fixed" : "alpha_layer"}}},
    };
}

}  // namespace qnet
