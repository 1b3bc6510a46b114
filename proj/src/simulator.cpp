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

#include "qnet/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "qnet/analysis.hpp"
#include "qnet/errors.hpp"

namespace qnet {

ComplexVector initial_state(std::size_t n_modes, std::size_t input_port) {
    if (input_port >= n_modes) {
        throw InvalidArgument(
            "input port " + std::to_string(input_port) + " out of range for " + std::to_string(n_modes) + " ports");
    }
    ComplexVector out(n_modes);
    out[input_port] = 1.0;
    return out;
}

Distribution propagate(const ComplexMatrix &w, std::size_t input_port) {
    double defect = unitarity_defect(w);
    if (!(defect < kUnitaryTolerance)) {
        throw NotUnitary(defect);
    }
    std::size_t n = w.dim();
    if (input_port >= n) {
        throw InvalidArgument(
            "input port " + std::to_string(input_port) + " out of range for " + std::to_string(n) + " ports");
    }
    // w e_in is column input_port of w.
    std::vector<double> probs(n);
    for (std::size_t row = 0; row < n; row++) {
        probs[row] = std::norm(w(row, input_port));
    }
    return make_distribution(std::move(probs), input_port);
}

double circular_variance(const Distribution &dist) {
    double first = 0.0;
    double second = 0.0;
    for (std::size_t n = 0; n < dist.n_modes(); n++) {
        auto d = static_cast<double>(circular_displacement(n, dist.input_port, dist.n_modes()));
        first += dist.probs[n] * d;
        second += dist.probs[n] * d * d;
    }
    return std::max(0.0, second - first * first);
}

const DepthSnapshot &EnsembleResult::at_depth(std::size_t depth) const {
    for (const DepthSnapshot &snap : depth_trace) {
        if (snap.depth == depth) {
            return snap;
        }
    }
    throw InvalidArgument("depth " + std::to_string(depth) + " was not recorded");
}

namespace {

void require_depths(const std::vector<std::size_t> &depths) {
    if (depths.empty()) {
        throw InvalidArgument("at least one depth is required");
    }
    if (depths.front() < 1) {
        throw InvalidArgument("depths must be positive");
    }
    for (std::size_t k = 1; k < depths.size(); k++) {
        if (depths[k] <= depths[k - 1]) {
            throw InvalidArgument("depths must be strictly increasing");
        }
    }
}

}  // namespace

std::vector<Distribution> run_realization(
    const Scenario &scenario, std::size_t input_port, const std::vector<std::size_t> &depths, RngStream rng) {
    require_depths(depths);
    Scenario deepest = scenario;
    deepest.depth = depths.back();
    ScenarioStepper stepper(deepest, std::move(rng));

    std::vector<Distribution> out;
    out.reserve(depths.size());
    for (std::size_t target : depths) {
        while (stepper.depth() < target) {
            stepper.advance();
        }
        out.push_back(propagate(stepper.current(), input_port));
    }
    return out;
}

EnsembleResult run_ensemble(
    const Scenario &scenario,
    std::size_t input_port,
    const std::vector<std::size_t> &depths,
    std::size_t runs,
    std::uint64_t master_seed,
    EnsembleOptions options) {
    require_depths(depths);
    if (runs < 1) {
        throw InvalidArgument("runs must be positive");
    }
    Scenario deepest = scenario;
    deepest.depth = depths.back();
    deepest.validate();
    initial_state(deepest.motif.n_modes(), input_port);

    std::vector<std::vector<Distribution>> per_run(runs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t r = next++; r < runs; r = next++) {
            try {
                per_run[r] = run_realization(deepest, input_port, depths, RngStream(master_seed, r));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = runs;
            }
        }
    };

    std::size_t threads = options.threads;
    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, runs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Fixed-order reduction keeps the result independent of scheduling.
    EnsembleResult result{deepest, runs, master_seed, {}};
    std::size_t n = deepest.motif.n_modes();
    auto inv_runs = 1.0 / static_cast<double>(runs);
    for (std::size_t k = 0; k < depths.size(); k++) {
        std::vector<double> sum(n, 0.0);
        double ipr_sum = 0.0;
        for (std::size_t r = 0; r < runs; r++) {
            const Distribution &dist = per_run[r][k];
            for (std::size_t port = 0; port < n; port++) {
                sum[port] += dist.probs[port];
            }
            ipr_sum += ipr(dist);
        }
        for (double &p : sum) {
            p *= inv_runs;
        }
        DepthSnapshot snap;
        snap.depth = depths[k];
        snap.mean = make_distribution(std::move(sum), input_port);
        snap.circular_variance = circular_variance(snap.mean);
        snap.ipr_of_mean = ipr(snap.mean);
        snap.mean_ipr = ipr_sum * inv_runs;
        result.depth_trace.push_back(std::move(snap));
    }
    return result;
}

}  // namespace qnet
