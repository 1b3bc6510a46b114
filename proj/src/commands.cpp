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

#include "qnet/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>

#include "qnet/errors.hpp"

namespace qnet {

using nlohmann::json;

namespace {

namespace fs = std::filesystem;

void log_line(const CommandOptions &options, const std::string &message) {
    if (options.log != nullptr) {
        *options.log << message << '\n';
    }
}

fs::path prepare_output(const RunConfig &config) {
    fs::path dir(config.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    return dir;
}

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

void write_json(const fs::path &path, const json &doc) {
    write_text(path, doc.dump(2) + "\n");
}

json fit_json(const FitReport &fit) {
    return json{
        {"model", std::string(to_string(fit.model))},
        {"amplitude_log", fit.amplitude_log},
        {"decay", fit.decay},
        {"ssr", fit.ssr},
        {"n_points", fit.n_points},
    };
}

std::optional<RegimeVerdict> try_classify(const Distribution &dist, const RunConfig &config, std::string &error) {
    try {
        return classify(dist, config.thresholds, config.fit_floor);
    } catch (const InsufficientSupport &e) {
        error = e.what();
        return std::nullopt;
    }
}

std::string variance_trace_csv(const EnsembleResult &result) {
    std::string out = "depth,circular_variance,ipr_of_mean,mean_ipr\n";
    for (const DepthSnapshot &snap : result.depth_trace) {
        out += std::to_string(snap.depth) + "," + format_real(snap.circular_variance) + "," +
               format_real(snap.ipr_of_mean) + "," + format_real(snap.mean_ipr) + "\n";
    }
    return out;
}

void write_ensemble_outputs(
    const fs::path &dir, const std::string &prefix, const EnsembleResult &result, const RunConfig &config) {
    for (const DepthSnapshot &snap : result.depth_trace) {
        std::string stem = prefix + "M" + std::to_string(snap.depth);
        if (config.emit.distributions) {
            write_text(dir / ("dist_" + stem + ".csv"), distribution_csv(snap.mean, config.fit_floor));
        }
        if (config.emit.fits) {
            write_json(dir / ("verdict_" + stem + ".json"), verdict_json(snap, config));
        }
    }
}

json spectrum_document(const RunConfig &config) {
    Scenario deepest = config.scenario;
    deepest.depth = config.depths.back();
    Scenario single = config.scenario;
    single.depth = 1;
    return json{
        {"scenario", std::string(to_string(config.scenario.kind))},
        {"seed", config.scenario.seed},
        {"composed", spectral_json(eigenvector_localization(compose(deepest), deepest.depth), deepest.depth)},
        {"motif", spectral_json(eigenvector_localization(compose(single), 1), 1)},
    };
}

EnsembleOptions ensemble_options(const CommandOptions &options) {
    return EnsembleOptions{options.threads};
}

}  // namespace

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string distribution_csv(const Distribution &dist, double floor) {
    std::string out = "port,probability,log10_probability\n";
    double total = 0.0;
    for (std::size_t n = 0; n < dist.n_modes(); n++) {
        double p = dist.probs[n];
        total += p;
        out += std::to_string(n + 1) + "," + format_real(p) + ",";
        if (p > floor) {
            out += format_real(std::log10(p));
        }
        out += "\n";
    }
    out += "# sum=" + format_real(total) + "\n";
    return out;
}

json verdict_json(const DepthSnapshot &snapshot, const RunConfig &config) {
    json doc{
        {"depth", snapshot.depth},
        {"runs", config.runs},
        {"input_port", config.input_port},
        {"circular_variance", snapshot.circular_variance},
        {"ipr_of_mean", snapshot.ipr_of_mean},
        {"mean_ipr", snapshot.mean_ipr},
        {"thresholds", {{"lower", config.thresholds.lower}, {"upper", config.thresholds.upper}}},
    };
    std::string error;
    std::optional<RegimeVerdict> verdict = try_classify(snapshot.mean, config, error);
    if (!verdict) {
        doc["regime"] = nullptr;
        doc["error"] = error;
        return doc;
    }
    doc["regime"] = std::string(to_string(verdict->regime));
    doc["ssr_ratio"] = verdict->ssr_ratio;
    doc["gaussian"] = fit_json(verdict->gaussian);
    doc["exponential"] = fit_json(verdict->exponential);
    doc["localization_length"] =
        verdict->localization_length ? json(*verdict->localization_length) : json(nullptr);
    return doc;
}

json spectral_json(const SpectralReport &report, std::size_t depth) {
    json band = json::array();
    for (const BandMass &entry : report.band_mass_profile) {
        band.push_back({{"k", entry.k}, {"fraction", entry.fraction}});
    }
    return json{
        {"depth", depth},
        {"eigenvector_ipr_mean", report.eigenvector_ipr_mean},
        {"eigenphases", report.eigenphases},
        {"band_mass_profile", band},
        {"branch_cut_warnings", report.near_branch_cut},
    };
}

void cmd_simulate(const RunConfig &config, const CommandOptions &options) {
    config.validate();
    fs::path dir = prepare_output(config);
    write_json(dir / "effective_config.json", to_json(config));

    log_line(options, "simulate: " + std::string(to_string(config.scenario.kind)) + ", " +
                          std::to_string(config.runs) + " runs");
    EnsembleResult result = run_ensemble(
        config.scenario, config.input_index(), config.depths, config.runs, config.scenario.seed,
        ensemble_options(options));
    write_ensemble_outputs(dir, "", result, config);
    if (config.emit.variance_trace) {
        write_text(dir / "variance_trace.csv", variance_trace_csv(result));
    }
    if (config.emit.spectral) {
        write_json(dir / "spectral.json", spectrum_document(config));
    }
    log_line(options, "simulate: wrote " + dir.string());
}

void cmd_scan_alpha(const RunConfig &config, const CommandOptions &options) {
    config.validate();
    Scenario probe = config.scenario;
    bool target_used = config.scan_target == ScanTarget::AlphaFixed ? probe.uses_alpha_fixed()
                                                                    : probe.uses_alpha_layer();
    if (!target_used) {
        throw ConfigError("scan.target", "scenario kind " + std::string(to_string(probe.kind)) +
                                             " has no such phase range");
    }
    if (config.scan_alphas.empty()) {
        throw ConfigError("scan.alphas", "must not be empty");
    }
    fs::path dir = prepare_output(config);
    write_json(dir / "effective_config.json", to_json(config));

    std::string summary = "alpha,depth,mean_ipr,ipr_of_mean,ssr_ratio,regime\n";
    for (std::size_t k = 0; k < config.scan_alphas.size(); k++) {
        double alpha = config.scan_alphas[k];
        Scenario scenario = config.scenario;
        (config.scan_target == ScanTarget::AlphaFixed ? scenario.alpha_fixed : scenario.alpha_layer) = alpha;
        log_line(options, "scan-alpha: alpha=" + format_real(alpha));

        EnsembleResult result = run_ensemble(
            scenario, config.input_index(), config.depths, config.runs, config.scenario.seed,
            ensemble_options(options));
        write_ensemble_outputs(dir, "alpha" + std::to_string(k) + "_", result, config);

        const DepthSnapshot &last = result.depth_trace.back();
        std::string error;
        std::optional<RegimeVerdict> verdict = try_classify(last.mean, config, error);
        summary += format_real(alpha) + "," + std::to_string(last.depth) + "," + format_real(last.mean_ipr) + "," +
                   format_real(last.ipr_of_mean) + ",";
        if (verdict) {
            summary += format_real(verdict->ssr_ratio) + "," + std::string(to_string(verdict->regime));
        } else {
            summary += ",";
        }
        summary += "\n";
    }
    write_text(dir / "scan_summary.csv", summary);
    log_line(options, "scan-alpha: wrote " + dir.string());
}

void cmd_spectrum(const RunConfig &config, const CommandOptions &options) {
    config.validate();
    fs::path dir = prepare_output(config);
    write_json(dir / "effective_config.json", to_json(config));
    write_json(dir / "spectral.json", spectrum_document(config));
    log_line(options, "spectrum: wrote " + dir.string());
}

}  // namespace qnet
