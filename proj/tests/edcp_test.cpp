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

#include "latticefilter/edcp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "latticefilter/calibration.hpp"

using namespace latticefilter;

namespace {

size_t code_of(const ZqVector &v) {
    size_t code = 0, scale = 1;
    for (size_t i = 0; i < v.size(); i++) {
        code += v[i] * scale;
        scale *= v.modulus().value();
    }
    return code;
}

ZqVector vector_of(size_t code, size_t n, Modulus q) {
    auto v = ZqVector::zeros(q, n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, (int64_t)(code % q.value()));
        code /= q.value();
    }
    return v;
}

EdcpSampleSet make_set(size_t n, uint32_t q, uint32_t width, size_t m, uint64_t seed) {
    Modulus mod(q);
    Rng rng(seed);
    auto s = ZqVector::random(mod, n, rng);
    return EdcpSampleSet::random(n, m, edcp_window(mod, width), s, rng);
}

}  // namespace

TEST(EdcpWindow, UniformPrefix) {
    auto d = edcp_window(Modulus(7), 3);
    for (uint32_t j = 0; j < 7; j++) {
        EXPECT_NEAR(std::abs(d[j]), j < 3 ? 1 / std::sqrt(3.0) : 0.0, 1e-15);
    }
    EXPECT_THROW(edcp_window(Modulus(7), 0), BadParameter);
    EXPECT_THROW(edcp_window(Modulus(7), 8), BadParameter);
}

TEST(EdcpReduction, RegisterMarginalIsUniform) {
    auto set = make_set(2, 5, 3, 2, 1);
    auto marginal = edcp_register_marginal(set, 0);
    ASSERT_EQ(marginal.size(), 25u);
    for (double p : marginal) {
        EXPECT_NEAR(p, 1.0 / 25, 1e-12);
    }
}

// The explicit QFT simulation and the closed-form reduction must give the
// same state up to a global phase.
TEST(EdcpReduction, ExplicitMatchesSymbolic) {
    for (uint32_t width : {5u, 3u}) {
        auto set = make_set(2, 5, width, 3, width);
        Amplitude f = dft(set.D);
        for (size_t idx = 0; idx < 3; idx++) {
            for (size_t code = 0; code < 25; code++) {
                auto a = vector_of(code, 2, set.q);
                auto got = edcp_post_measurement_state(set, idx, a).as_vector();
                auto want = psi_state(f, set.q.neg(a.dot(set.s))).as_vector();
                Complex overlap = 0;
                for (size_t x = 0; x < 5; x++) {
                    overlap += std::conj(want[x]) * got[x];
                }
                EXPECT_NEAR(std::abs(overlap), 1.0, 1e-10);
            }
        }
    }
}

TEST(EdcpSolve, EliminationFullWindow) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        auto set = make_set(3, 7, 7, 400, seed);
        auto r = edcp_solve(set, EdcpSolveMode::GaussianElimination, seed);
        ASSERT_TRUE(r.secret.has_value()) << r.failure;
        EXPECT_EQ(*r.secret, set.s);
    }
}

TEST(EdcpSolve, ExplicitReductionAgrees) {
    auto set = make_set(2, 5, 5, 200, 3);
    auto r = edcp_solve(set, EdcpSolveMode::GaussianElimination, 3, EdcpMode::Explicit);
    ASSERT_TRUE(r.secret.has_value()) << r.failure;
    EXPECT_EQ(*r.secret, set.s);
}

TEST(EdcpSolve, NarrowWindowNeedsTailPath) {
    auto set = make_set(3, 7, 5, 40, 1);
    EXPECT_THROW(edcp_solve(set, EdcpSolveMode::GaussianElimination, 1), RankDeficient);
}

TEST(EdcpSolve, AroraGeCalibrated) {
    size_t ok = 0, wrong = 0;
    for (uint64_t seed = 0; seed < 40; seed++) {
        auto set = make_set(3, 7, 5, calibration::kEdcpAgM, seed);
        auto r = edcp_solve(set, EdcpSolveMode::AroraGe, seed);
        if (r.secret) {
            (*r.secret == set.s ? ok : wrong)++;
        }
    }
    EXPECT_GE(ok, 38u);
    EXPECT_EQ(wrong, 0u);
}

TEST(Friedl, ZDistributionNormalized) {
    Modulus q(7);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (Elem t = 0; t < 7; t++) {
            auto d = friedl_z_distribution(p, q, t);
            double sum = 0;
            for (double x : d) {
                sum += x;
            }
            EXPECT_NEAR(sum, 1.0, 1e-12);
        }
        // <s,y> = 0 forces z = 0.
        EXPECT_NEAR(friedl_z_distribution(p, q, 0)[0], 1.0, 1e-12);
    }
}

// Averaged over a uniform <s,y>, z = 0 occurs with probability exactly 1/p.
TEST(Friedl, ZeroOutcomeRateIsOneOverP) {
    for (uint32_t q : {3u, 5u, 7u, 11u}) {
        for (uint32_t p = 2; p < q; p++) {
            double zero = 0;
            for (Elem t = 0; t < q; t++) {
                zero += friedl_z_distribution(p, Modulus(q), t)[0] / q;
            }
            EXPECT_NEAR(zero, 1.0 / p, 1e-12) << "q=" << q << " p=" << p;
        }
    }
}

TEST(Friedl, ExplicitJointMatchesClosedForm) {
    auto set = make_set(2, 5, 3, 1, 2);
    auto joint = friedl_joint_explicit(set, 0, 3);
    for (uint32_t z = 0; z < 3; z++) {
        for (size_t code = 0; code < 25; code++) {
            Elem t = vector_of(code, 2, set.q).dot(set.s);
            EXPECT_NEAR(joint[z][code], friedl_z_distribution(3, set.q, t)[z] / 25, 1e-12);
        }
    }
}

TEST(Friedl, PlantedSecretAmongCandidatesForPTwo) {
    size_t hits = 0;
    for (uint64_t seed = 0; seed < 40; seed++) {
        Modulus q(3);
        Rng rng(seed);
        auto s = ZqVector::random(q, 3, rng);
        while (s == ZqVector::zeros(q, 3)) {
            s = ZqVector::random(q, 3, rng);
        }
        auto set = EdcpSampleSet::random(3, calibration::kFriedlM, edcp_window(q, 2), s, rng);
        auto r = friedl_constant_q(set, 2, seed);
        hits += std::find(r.candidates.begin(), r.candidates.end(), s) != r.candidates.end();
        for (const auto &smp : r.samples) {
            if (smp.z != 0) {
                EXPECT_NE(smp.y.dot(s), 0u);
            }
        }
    }
    EXPECT_GE(hits, 38u);
}

TEST(Friedl, ExactRecoveryForLargerWindow) {
    size_t ok = 0;
    for (uint64_t seed = 0; seed < 20; seed++) {
        Modulus q(5);
        Rng rng(seed);
        auto s = ZqVector::random(q, 2, rng);
        while (s == ZqVector::zeros(q, 2)) {
            s = ZqVector::random(q, 2, rng);
        }
        auto set = EdcpSampleSet::random(2, 400, edcp_window(q, 3), s, rng);
        auto r = friedl_constant_q(set, 3, seed);
        ok += r.secret && *r.secret == s;
    }
    EXPECT_GE(ok, 18u);
}

TEST(Friedl, RejectsNonWindowDistribution) {
    Modulus q(5);
    Rng rng(1);
    auto s = ZqVector(q, {1, 2});
    auto set = EdcpSampleSet::random(2, 4, make_amplitude(family::BoundedUniform{1}, q), s, rng);
    EXPECT_THROW(friedl_constant_q(set, 2, 1), BadParameter);
}
