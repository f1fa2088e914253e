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

#ifndef LATTICEFILTER_SIS_HPP
#define LATTICEFILTER_SIS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "latticefilter/zq_core.hpp"

namespace latticefilter {

struct SisInstance {
    ZqMatrix a;
    uint32_t beta;
};

/// A z != 0 with A z = 0 mod q and |z|_inf <= beta.
bool is_sis_solution(const SisInstance &inst, const IntVector &z);

enum class SisMethod { Rejection, Enumeration };

/// Draws from the measurement law of the SIS state for bounded-uniform f:
/// uniform over {z : A z = 0 mod q, |z|_inf <= B}, zero included.
class SisStateSampler {
   public:
    /// Enumeration needs q^{m - rank} <= 10^6 and throws EmptySolutionSet
    /// if the set has no nonzero point. Rejection gives up with Timeout
    /// after max_proposals box draws.
    SisStateSampler(const ZqMatrix &a, uint32_t B, SisMethod method, uint64_t max_proposals = 100000000);

    IntVector sample(Rng &rng) const;
    /// Index of z in the box, sum_i (z_i + B) (2B+1)^i.
    uint64_t box_index(const IntVector &z) const;
    uint64_t box_size() const {
        return box_size_;
    }
    /// Enumeration mode only.
    const std::vector<IntVector> &support() const {
        return support_;
    }

   private:
    ZqMatrix a_;
    uint32_t B_;
    SisMethod method_;
    uint64_t max_proposals_;
    uint64_t box_size_;
    std::vector<IntVector> support_;
    /// cols_[i][v] holds column i times (v - B) for the rejection check.
    std::vector<std::vector<std::vector<Elem>>> scaled_cols_;
};

/// Throws BadParameter for composite q or 2B+1 > q.
IntVector sis_state_sample(const ZqMatrix &a, uint32_t B, Rng &rng, SisMethod method);

/// Small integer matrix (the Y_i of the recursion).
struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<int64_t> data;

    int64_t operator()(size_t r, size_t c) const {
        return data[r * cols + c];
    }
    int64_t &at(size_t r, size_t c) {
        return data[r * cols + c];
    }
    IntMatrix operator*(const IntMatrix &o) const;
};

/// Returns z != 0 with block z = 0 mod p and |z|_inf <= the level's beta.
using SisSubsolver = std::function<IntVector(const ZqMatrix &block)>;

struct SisLevel {
    uint32_t p;
    size_t block_cols;
    uint32_t beta;
    SisSubsolver solve;
};

struct CompositeSisResult {
    IntVector x;
    /// Y_1 .. Y_k.
    std::vector<IntMatrix> levels;
};

/// First nonzero kernel basis vector, centered. For composite p falls back
/// to exhaustive search of the box [-p/2, p/2]^cols.
SisSubsolver kernel_subsolver();

/// Quantum-simulated sampler restricted to nonzero outputs.
SisSubsolver quantum_subsolver(uint32_t B, uint64_t seed);

/// Recursion over q = p_1 ... p_k with m = prod block_cols. Throws
/// BadShape or BadParameter on inconsistent shapes, Error if a subsolver
/// returns an invalid vector.
CompositeSisResult sis_solve_general(const ZqMatrix &a, const std::vector<SisLevel> &levels);

/// A has n-1 rows and n^k columns; blocks of n columns at every level.
CompositeSisResult sis_solve_composite(const ZqMatrix &a, const std::vector<uint32_t> &factors);

}  // namespace latticefilter

#endif
