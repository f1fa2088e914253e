// Copyright 2026 The latticefilter Authors
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

#ifndef LATTICEFILTER_RNG_HPP
#define LATTICEFILTER_RNG_HPP

#include <cstdint>
#include <random>

namespace latticefilter {

/// Roles used to split one master seed into independent streams.
enum class StreamRole : uint64_t {
    Instance = 1,
    Shifts = 2,
    Measurement = 3,
    Completion = 4,
    Oracle = 5,
    Decoder = 6,
};

/// splitmix64 finalizer.
uint64_t mix64(uint64_t x);

/// Seed for the stream (master, index, role). Stable across platforms.
uint64_t derive_seed(uint64_t master, uint64_t index, StreamRole role);

/// Seeded generator. The draws below avoid std distributions, whose output
/// is implementation defined, so that goldens are portable.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }
    Rng(uint64_t master, uint64_t index, StreamRole role) : engine_(derive_seed(master, index, role)) {
    }

    uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, n). Requires n > 0.
    uint64_t below(uint64_t n);
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return (double)(engine_() >> 11) * 0x1.0p-53;
    }
    /// Standard normal via Box-Muller.
    double normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace latticefilter

#endif
