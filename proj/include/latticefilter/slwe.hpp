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

#ifndef LATTICEFILTER_SLWE_HPP
#define LATTICEFILTER_SLWE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latticefilter/arora_ge.hpp"
#include "latticefilter/filter_sim.hpp"

namespace latticefilter {

/// One S|LWE> sample: a public vector and the state psi_x with x = <a, u>.
struct QuantumSample {
    ZqVector a;
    StateVector state;
};

using SampleSource = std::function<QuantumSample()>;

/// Samples with uniform a and state psi_{<a,u>} for amplitude f.
SampleSource planted_source(const Amplitude &f, const ZqVector &u, uint64_t seed);

/// A measured coordinate and what it says about <a, u>.
struct RecordedConstraint {
    ZqVector a;
    Elem y;
    size_t outcome;
    Constraint constraint;
};

struct SlweReport {
    std::optional<ZqVector> secret;
    std::string failure;
    size_t m_used = 0;
    /// Equalities for the elimination path, tail samples for Arora-Ge.
    size_t constraints_collected = 0;
    std::vector<RecordedConstraint> constraints;
};

/// Full filter (k = q). Outcome q-1 gives <a, u> = y - 1. Draws samples
/// until there are at least 2n equalities of rank n, or max_m samples.
/// Throws RankDeficient when f's shift set has rank below q.
SlweReport slwe_solve_ge(SampleSource source, size_t n, Modulus q, const Amplitude &f, size_t max_m, uint64_t seed);

/// Filter with k rows for an f whose shift set has rank exactly k.
/// Outcome k-1 puts <a, u> in {y+k-1, ..., y+q-1}; those samples go to
/// Arora-Ge with b = y and support {-(k-1), ..., -(q-1)}.
SlweReport slwe_solve_tail(SampleSource source, size_t n, Modulus q, const Amplitude &f, size_t k, size_t max_m, uint64_t seed);

/// f = dft(bounded_uniform(B)), k = 2B+1. When 2B+1 = q this is the
/// elimination path.
SlweReport slwe_solve_ag(SampleSource source, size_t n, Modulus q, uint32_t B, size_t max_m, uint64_t seed);

/// Support passed to Arora-Ge for tail samples of a k-row filter.
std::vector<Elem> tail_support(size_t k, Modulus q);

enum class DecoderMode { GaussianElimination, AroraGe };

struct FidelityReport {
    /// Estimated decoder failure mass per secret, indexed by the base-q code of u.
    std::vector<double> failure_mass;
    double fidelity;
    /// Standard error of the fidelity estimate.
    double sigma;
    size_t secrets;
    size_t trials_per_secret;
    uint64_t seed;
};

/// Throws ScaleExceeded when q^n > 10^6.
FidelityReport clwe_simulate(const ZqMatrix &a, const Amplitude &f, DecoderMode mode, uint64_t seed, size_t trials);

}  // namespace latticefilter

#endif
