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

#include "qnet/distribution.hpp"

#include <cmath>
#include <string>

#include "qnet/errors.hpp"

namespace qnet {

Distribution make_distribution(std::vector<double> probs, std::size_t input_port) {
    if (probs.empty()) {
        throw InvalidArgument("distribution needs at least one port");
    }
    if (input_port >= probs.size()) {
        throw InvalidArgument(
            "input port " + std::to_string(input_port) + " out of range for " + std::to_string(probs.size()) +
            " ports");
    }
    double total = 0.0;
    for (double &p : probs) {
        if (!std::isfinite(p)) {
            throw NumericalError("non-finite probability");
        }
        if (p < 0.0) {
            if (p < -kNegativeClampTolerance) {
                throw NumericalError("negative probability " + std::to_string(p));
            }
            p = 0.0;
        }
        total += p;
    }
    if (!(total > 0.0)) {
        throw NumericalError("distribution has zero total probability");
    }
    for (double &p : probs) {
        p /= total;
    }
    return Distribution{std::move(probs), input_port};
}

long circular_displacement(std::size_t port, std::size_t anchor, std::size_t n_modes) {
    auto n = static_cast<long>(n_modes);
    auto half = n / 2;
    long raw = static_cast<long>(port) - static_cast<long>(anchor);
    long shifted = ((raw + half) % n + n) % n;
    return shifted - half;
}

}  // namespace qnet
