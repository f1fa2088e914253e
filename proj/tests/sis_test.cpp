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

#include "latticefilter/sis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

using namespace latticefilter;

namespace {

// Oracle: every z in [-B, B]^m with Az = 0 mod q.
std::set<IntVector> brute_force(const ZqMatrix &a, uint32_t B) {
    std::set<IntVector> out;
    size_t m = a.cols(), w = 2 * B + 1, total = 1;
    for (size_t i = 0; i < m; i++) {
        total *= w;
    }
    for (size_t code = 0; code < total; code++) {
        IntVector z(m);
        size_t c = code;
        for (size_t i = 0; i < m; i++) {
            z[i] = (int64_t)(c % w) - B;
            c /= w;
        }
        if (a.apply(z) == ZqVector::zeros(a.modulus(), a.rows())) {
            out.insert(z);
        }
    }
    return out;
}

}  // namespace

TEST(SisSolution, Predicate) {
    Modulus q(5);
    auto a = ZqMatrix::from_rows(q, {{1, 2, 3}});
    SisInstance inst{a, 1};
    EXPECT_TRUE(is_sis_solution(inst, {1, 1, -1}));
    EXPECT_FALSE(is_sis_solution(inst, {0, 0, 0}));
    EXPECT_FALSE(is_sis_solution(inst, {1, 0, 0}));
    EXPECT_FALSE(is_sis_solution(inst, {2, -1, 0}));
}

TEST(SisStateSampler, EnumerationMatchesBruteForce) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        Rng rng(seed);
        Modulus q(5);
        auto a = ZqMatrix::random(q, 1, 5, rng);
        SisStateSampler s(a, 1, SisMethod::Enumeration);
        std::set<IntVector> got(s.support().begin(), s.support().end());
        EXPECT_EQ(got, brute_force(a, 1));
        EXPECT_EQ(got.size(), s.support().size());
    }
}

TEST(SisStateSampler, BoxIndexIsBijection) {
    Modulus q(7);
    Rng rng(1);
    auto a = ZqMatrix::random(q, 1, 4, rng);
    SisStateSampler s(a, 2, SisMethod::Enumeration);
    EXPECT_EQ(s.box_size(), 625u);
    std::set<uint64_t> seen;
    for (const auto &z : brute_force(ZqMatrix(q, 0, 4), 2)) {
        uint64_t i = s.box_index(z);
        EXPECT_LT(i, 625u);
        seen.insert(i);
    }
    EXPECT_EQ(seen.size(), 625u);
}

TEST(SisStateSampler, RejectionIsUniformOnSolutionSet) {
    Modulus q(5);
    Rng setup(3);
    auto a = ZqMatrix::random(q, 1, 4, setup);
    auto support = brute_force(a, 1);
    SisStateSampler s(a, 1, SisMethod::Rejection);
    Rng rng(4);
    const int N = 20000;
    std::map<IntVector, int> counts;
    for (int i = 0; i < N; i++) {
        auto z = s.sample(rng);
        ASSERT_TRUE(support.count(z));
        counts[z]++;
    }
    double p = 1.0 / support.size();
    double sd = std::sqrt(N * p * (1 - p));
    for (const auto &z : support) {
        EXPECT_NEAR(counts[z], N * p, 5 * sd);
    }
}

TEST(SisStateSampler, EmptyNonzeroSetThrows) {
    Modulus q(5);
    auto a = ZqMatrix::identity(q, 2);
    EXPECT_THROW(SisStateSampler(a, 1, SisMethod::Enumeration), EmptySolutionSet);
}

TEST(SisStateSampler, RejectionTimeout) {
    Modulus q(101);
    auto a = ZqMatrix::identity(q, 3);
    SisStateSampler s(a, 1, SisMethod::Rejection, 1);
    Rng rng(1);
    int timeouts = 0;
    for (int i = 0; i < 200; i++) {
        try {
            EXPECT_EQ(s.sample(rng), IntVector(3, 0));
        } catch (const Timeout &) {
            timeouts++;
        }
    }
    EXPECT_GT(timeouts, 150);
}

TEST(SisStateSample, CompositeModulusRejected) {
    Modulus q(6);
    auto a = ZqMatrix(q, 1, 3);
    Rng rng(1);
    EXPECT_THROW(sis_state_sample(a, 1, rng, SisMethod::Enumeration), CompositeModulus);
}

TEST(KernelSubsolver, ReturnsNonzeroKernelVector) {
    Modulus q(7);
    Rng rng(2);
    auto a = ZqMatrix::random(q, 2, 3, rng);
    auto z = kernel_subsolver()(a);
    EXPECT_EQ(a.apply(z), ZqVector::zeros(q, 2));
    EXPECT_NE(z, IntVector(3, 0));
}

TEST(CompositeSis, FactorizationsVerify) {
    std::vector<std::vector<uint32_t>> cases = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {5, 3}};
    for (const auto &factors : cases) {
        uint32_t q = 1, beta = 1;
        for (auto p : factors) {
            q *= p;
            beta *= p / 2;
        }
        size_t n = 3, m = 1;
        for (size_t i = 0; i < factors.size(); i++) {
            m *= n;
        }
        for (uint64_t seed = 0; seed < 10; seed++) {
            Rng rng(seed);
            auto a = ZqMatrix::random(Modulus(q), n - 1, m, rng);
            auto r = sis_solve_composite(a, factors);
            EXPECT_TRUE(is_sis_solution({a, beta}, r.x)) << "q=" << q << " seed=" << seed;
            EXPECT_EQ(r.levels.size(), factors.size());
        }
    }
}

TEST(CompositeSis, RejectsBadFactorization) {
    Rng rng(1);
    auto a = ZqMatrix::random(Modulus(6), 1, 4, rng);
    EXPECT_THROW(sis_solve_composite(a, {2, 2}), BadParameter);
}

TEST(CompositeSis, QuantumSubsolverLevels) {
    Modulus q(25);
    Rng rng(5);
    auto a = ZqMatrix::random(q, 1, 16, rng);
    std::vector<SisLevel> levels = {{5, 4, 2, quantum_subsolver(2, 1)}, {5, 4, 2, quantum_subsolver(2, 2)}};
    auto r = sis_solve_general(a, levels);
    EXPECT_TRUE(is_sis_solution({a, 4}, r.x));
}

TEST(CompositeSis, GeneralWithKernelSubsolversMatchesComposite) {
    std::vector<uint32_t> factors = {2, 3, 2};
    Modulus q(12);
    Rng rng(8);
    auto a = ZqMatrix::random(q, 2, 27, rng);
    std::vector<SisLevel> levels;
    for (auto p : factors) {
        levels.push_back({p, 3, p / 2, kernel_subsolver()});
    }
    EXPECT_EQ(sis_solve_general(a, levels).x, sis_solve_composite(a, factors).x);
}
