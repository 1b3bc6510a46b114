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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnet/commands.hpp"
#include "qnet/config.hpp"
#include "qnet/errors.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfig = 1, kNumerical = 2, kIo = 3 };

struct Overrides {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> runs;
    std::vector<std::string> alphas;
    std::size_t threads = 0;
    bool quiet = false;
};

void add_common_flags(CLI::App &cmd, Overrides &o) {
    cmd.add_option("--config", o.config_path, "JSON run configuration")->required();
    cmd.add_option("--out", o.out, "output directory (overrides config 'output')");
    cmd.add_option("--seed", o.seed, "master seed (overrides config 'scenario.seed')");
    cmd.add_option("--runs", o.runs, "ensemble size (overrides config 'runs')")->check(CLI::PositiveNumber);
    cmd.add_option("--threads", o.threads, "ensemble worker threads, 0 = all cores");
    cmd.add_flag("--quiet", o.quiet, "suppress progress messages");
}

qnet::RunConfig resolve(const Overrides &o) {
    qnet::RunConfig config = qnet::load_config(o.config_path);
    if (o.out) {
        config.output = *o.out;
    }
    if (o.seed) {
        config.scenario.seed = *o.seed;
    }
    if (o.runs) {
        config.runs = *o.runs;
    }
    if (!o.alphas.empty()) {
        config.scan_alphas.clear();
        for (std::size_t k = 0; k < o.alphas.size(); k++) {
            nlohmann::json value = o.alphas[k];
            try {
                value = nlohmann::json::parse(o.alphas[k]);
            } catch (const nlohmann::json::parse_error &) {
            }
            config.scan_alphas.push_back(qnet::parse_angle(value, "--alphas[" + std::to_string(k) + "]"));
        }
    }
    config.validate();
    return config;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Disorder scenarios on nearest-neighbour coupler networks"};
    app.require_subcommand(1);

    Overrides o;
    CLI::App *simulate = app.add_subcommand("simulate", "ensemble distributions, fits and variance trace");
    CLI::App *scan = app.add_subcommand("scan-alpha", "sweep the disorder phase range");
    CLI::App *spectrum = app.add_subcommand("spectrum", "effective-Hamiltonian and eigenvector analysis");
    for (CLI::App *cmd : {simulate, scan, spectrum}) {
        add_common_flags(*cmd, o);
    }
    scan->add_option("--alphas", o.alphas, "phase ranges, e.g. pi/16 2pi 0.5")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        qnet::RunConfig config = resolve(o);
        qnet::CommandOptions options{o.threads, o.quiet ? nullptr : &std::cerr};
        if (simulate->parsed()) {
            qnet::cmd_simulate(config, options);
        } else if (scan->parsed()) {
            qnet::cmd_scan_alpha(config, options);
        } else {
            qnet::cmd_spectrum(config, options);
        }
    } catch (const qnet::InvalidArgument &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const qnet::NumericalError &e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumerical;
    } catch (const qnet::IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    }
    return kOk;
}
