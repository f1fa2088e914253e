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

#include "latticefilter/arora_ge.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace latticefilter;

namespace {

std::vector<LweSample> planted(const ZqVector &u, const std::vector<Elem> &support, size_t m, Rng &rng) {
    const Modulus &q = u.modulus();
    std::vector<LweSample> out;
    for (size_t i = 0; i < m; i++) {
        auto a = ZqVector::random(q, u.size(), rng);
        Elem e = support[rng.below(support.size())];
        out.push_back({a, q.add(a.dot(u), e)});
    }
    return out;
}

// Oracle: every u in Z_q^n consistent with all samples.
std::vector<ZqVector> brute_force(const std::vector<LweSample> &samples, const std::vector<Elem> &support, size_t n, Modulus q) {
    std::vector<ZqVector> out;
    size_t total = 1;
    for (size_t i = 0; i < n; i++) {
        total *= q.value();
    }
    for (size_t code = 0; code < total; code++) {
        auto u = ZqVector::zeros(q, n);
        size_t c = code;
        for (size_t i = 0; i < n; i++) {
            u.set(i, (int64_t)(c % q.value()));
            c /= q.value();
        }
        bool ok = std::all_of(samples.begin(), samples.end(), [&](const LweSample &s) {
            Elem e = q.sub(s.b, s.a.dot(u));
            return std::find(support.begin(), support.end(), e) != support.end();
        });
        if (ok) {
            out.push_back(u);
        }
    }
    return out;
}

}  // namespace

TEST(arora_ge, monomial_count) {
    ASSERT_EQ(monomials_up_to(2, 3).size(), 9u);
    ASSERT_EQ(monomials_up_to(3, 2).size(), 9u);
    ASSERT_EQ(monomials_up_to(4, 1).size(), 4u);
    auto m = monomials_up_to(3, 2);
    ASSERT_EQ(m[0], (std::vector<uint32_t>{1, 0, 0}));
    ASSERT_EQ(m[2], (std::vector<uint32_t>{0, 0, 1}));
}

TEST(arora_ge, linearization_evaluates_to_zero_at_secret) {
    Modulus q(7);
    Rng rng(1);
    auto u = ZqVector::random(q, 3, rng);
    std::vector<Elem> support = {2, 5, 6};
    auto samples = planted(u, support, 30, rng);
    auto lin = linearize(samples, support, 3, q);
    auto x = ZqVector::zeros(q, lin.monomials.size());
    for (size_t m = 0; m < lin.monomials.size(); m++) {
        Elem v = 1;
        for (size_t i = 0; i < 3; i++) {
            v = q.mul(v, q.pow(u[i], lin.monomials[m][i]));
        }
        x.set(m, v);
    }
    ASSERT_EQ(lin.rows * x, lin.rhs);
}

TEST(arora_ge, noiseless_is_elimination) {
    Modulus q(11);
    Rng rng(2);
    auto u = ZqVector::random(q, 4, rng);
    auto r = arora_ge(planted(u, {0}, 12, rng), {0}, 4, q);
    ASSERT_EQ(std::get<ZqVector>(r), u);
}

TEST(arora_ge, example_n2_q5) {
    Modulus q(5);
    Rng rng(3);
    ZqVector u(q, {3, 1});
    std::vector<Elem> support = {1, 2};
    auto samples = planted(u, support, 40, rng);
    ASSERT_EQ(brute_force(samples, support, 2, q), std::vector<ZqVector>{u});
    ASSERT_EQ(std::get<ZqVector>(arora_ge(samples, support, 2, q)), u);
}

TEST(arora_ge, errors) {
    Modulus q(5);
    Rng rng(4);
    ZqVector u(q, {3, 1});
    auto samples = planted(u, {1, 2}, 4, rng);
    ASSERT_THROW(arora_ge(samples, {1, 2}, 2, q), InsufficientSamples);
    ASSERT_THROW(arora_ge(samples, {1, 1}, 2, q), BadParameter);
    ASSERT_THROW(arora_ge(samples, {0, 1, 2, 3, 4}, 2, q), BadParameter);
    ASSERT_THROW(arora_ge(samples, {1}, 2, Modulus(6)), CompositeModulus);
}

TEST(arora_ge, agrees_with_brute_force) {
    Rng rng(5);
    size_t successes = 0, failures = 0;
    for (int t = 0; t < 300; t++) {
        uint32_t qv = std::vector<uint32_t>{3, 5, 7, 11, 13, 17, 19, 23}[rng.below(8)];
        Modulus q(qv);
        size_t n = qv <= 5 ? 1 + rng.below(3) : (qv <= 23 ? 1 + rng.below(2) : 1);
        size_t d = 1 + rng.below(std::min<size_t>(3, qv - 1));
        std::vector<Elem> support;
        while (support.size() < d) {
            Elem e = (Elem)rng.below(qv);
            if (std::find(support.begin(), support.end(), e) == support.end()) {
                support.push_back(e);
            }
        }
        auto u = ZqVector::random(q, n, rng);
        size_t unknowns = monomials_up_to(n, d).size();
        auto samples = planted(u, support, unknowns + rng.below(3 * unknowns + 1), rng);
        auto r = arora_ge(samples, support, n, q);
        if (auto *got = std::get_if<ZqVector>(&r)) {
            ASSERT_EQ(brute_force(samples, support, n, q), std::vector<ZqVector>{*got});
            successes++;
        } else {
            failures++;
        }
    }
    ASSERT_GT(successes, 100u);
    ASSERT_GT(failures, 0u);
}

// Frozen by running the smallest m with >= 99/100 successes on seeds 0..99.
constexpr size_t kCalibratedM_n3_q11 = 11;

TEST(arora_ge, calibrated_n3_q11_support2) {
    Modulus q(11);
    std::vector<Elem> support = {0, 1};
    int ok = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        Rng rng(seed);
        auto u = ZqVector::random(q, 3, rng);
        auto r = arora_ge(planted(u, support, kCalibratedM_n3_q11, rng), support, 3, q);
        if (auto *got = std::get_if<ZqVector>(&r)) {
            ASSERT_EQ(*got, u);
            ok++;
        }
    }
    ASSERT_GE(ok, 99);
}
