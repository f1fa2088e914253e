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

#ifndef LATTICEFILTER_EDCP_HPP
#define LATTICEFILTER_EDCP_HPP

#include <optional>
#include <vector>

#include "latticefilter/slwe.hpp"

namespace latticefilter {

/// Samples sum_j D(j) |j>|x_i + j s> sharing one secret s, kept symbolically.
struct EdcpSampleSet {
    size_t n;
    Modulus q;
    ZqVector s;
    Amplitude D;
    std::vector<ZqVector> offsets;

    static EdcpSampleSet random(size_t n, size_t m, const Amplitude &D, const ZqVector &s, Rng &rng);
};

/// D uniform over [0, width) as an amplitude over Z_q.
Amplitude edcp_window(Modulus q, uint32_t width);

enum class EdcpMode { Explicit, Symbolic };

/// Explicit path: QFT_q^n on the second register, then project it onto a
/// and apply QFT_q to the first register. Throws ScaleExceeded past
/// q^n = 10^6.
StateVector edcp_post_measurement_state(const EdcpSampleSet &set, size_t index, const ZqVector &a);

/// Law of the second-register measurement after QFT_q^n (explicit path),
/// indexed by the base-q code of a.
std::vector<double> edcp_register_marginal(const EdcpSampleSet &set, size_t index);

/// Measures a and returns (a, state). Explicit mode simulates the full
/// table; symbolic mode draws a uniformly and returns psi_{-<a,s>} with
/// amplitude dft(D). The two agree up to a global phase.
QuantumSample edcp_to_slwe(const EdcpSampleSet &set, size_t index, Rng &rng, EdcpMode mode);

enum class EdcpSolveMode { GaussianElimination, AroraGe };

/// Reduces every sample and runs the matching S|LWE> pipeline on
/// f = dft(D), then negates. The elimination path needs dft(D) to have a
/// full-rank shift set; the Arora-Ge path uses k = rank.
SlweReport edcp_solve(const EdcpSampleSet &set, EdcpSolveMode mode, uint64_t seed, EdcpMode reduction = EdcpMode::Symbolic);

/// Pr[z | t] for the constant-q measurement with D uniform over Z_p.
std::vector<double> friedl_z_distribution(uint32_t p, Modulus q, Elem t);

struct FriedlSample {
    ZqVector y;
    Elem z;
};

/// Simulates QFT_q^n on register 2, QFT_p on register 1 and both
/// measurements. D must be uniform over [0, p) with 1 < p < q.
FriedlSample friedl_measure(const EdcpSampleSet &set, size_t index, uint32_t p, Rng &rng);

/// Same experiment on the explicit p x q^n table; used to check the law
/// above. Returns the joint law indexed [z][code(y)].
std::vector<std::vector<double>> friedl_joint_explicit(const EdcpSampleSet &set, size_t index, uint32_t p);

struct FriedlResult {
    /// Unique maximum-likelihood candidate, if there is one.
    std::optional<ZqVector> secret;
    /// Candidates lambda * r tied at the maximum likelihood.
    std::vector<ZqVector> candidates;
    std::vector<FriedlSample> samples;
    size_t zero_outcomes = 0;
    std::string failure;
};

/// Keeps the z != 0 pairs, which force <s, y> != 0, recovers s up to a
/// nonzero scalar from <s, y>^{q-1} = 1, then ranks the scalars by the
/// likelihood of all observed z. For p = 2 the law of z is symmetric under
/// s -> -s, so two candidates always tie.
FriedlResult friedl_constant_q(const EdcpSampleSet &set, uint32_t p, uint64_t seed);

}  // namespace latticefilter

#endif
