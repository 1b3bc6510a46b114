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

#include <cstdint>
#include <random>

namespace qnet {

/// Reproducible uniform stream. Each (master_seed, stream_index) pair seeds
/// its own std::mt19937_64 through a SplitMix64 mix, and doubles are formed
/// from the top 53 bits of each draw, so the sequence is identical on every
/// conforming platform.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    /// Uniform double in [0, 1).
    double uniform();

    /// Independent stream sharing this stream's master seed.
    RngStream fork(std::uint64_t stream_index) const { return RngStream(master_seed_, stream_index); }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
};

/// One SplitMix64 output step.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qnet
