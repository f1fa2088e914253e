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

#include "latticefilter/zq_core.hpp"

#include <gtest/gtest.h>

using namespace latticefilter;

TEST(zq_core, centered_examples) {
    ASSERT_EQ(centered(0, Modulus(5)), 0);
    ASSERT_EQ(centered(4, Modulus(5)), -1);
    ASSERT_EQ(centered(2, Modulus(5)), 2);
    // Even q: half-open range [-q/2, q/2).
    ASSERT_EQ(centered(3, Modulus(6)), -3);
    ASSERT_EQ(centered(2, Modulus(6)), 2);
}

TEST(zq_core, centered_is_a_bounded_representative) {
    for (uint32_t q = 2; q < 60; q++) {
        Modulus m(q);
        for (Elem x = 0; x < q; x++) {
            int64_t r = centered(x, m);
            ASSERT_EQ(m.reduce(r), x);
            ASSERT_LE(std::abs(r), (int64_t)(q / 2));
            ASSERT_GE(r, -(int64_t)(q / 2));
            ASSERT_LT(r, (int64_t)(q - q / 2));
        }
    }
}

TEST(zq_core, modulus_bounds) {
    ASSERT_THROW(Modulus(1), BadParameter);
    ASSERT_THROW(Modulus(kMaxModulus + 1), BadParameter);
    ASSERT_TRUE(Modulus(65521).is_prime());
    ASSERT_FALSE(Modulus(65536).is_prime());
    ASSERT_FALSE(Modulus(9).is_prime());
}

TEST(zq_core, inverse) {
    Modulus q(11);
    for (Elem a = 1; a < 11; a++) {
        ASSERT_EQ(q.mul(a, q.inv(a)), 1u);
    }
    ASSERT_EQ(Modulus(10).inv(3), 7u);
    ASSERT_THROW(Modulus(10).inv(4), BadParameter);
}

TEST(zq_core, solve_identity) {
    Modulus q(7);
    auto r = solve_linear_system(ZqMatrix::identity(q, 3), ZqVector(q, {1, 2, 3}));
    ASSERT_EQ(std::get<ZqVector>(r), ZqVector(q, {1, 2, 3}));
}

TEST(zq_core, solve_inconsistent) {
    Modulus q(5);
    auto a = ZqMatrix::from_rows(q, {{1, 1}, {2, 2}});
    auto r = solve_linear_system(a, ZqVector(q, {1, 3}));
    ASSERT_TRUE(std::holds_alternative<NoSolution>(r));
}

TEST(zq_core, solve_underdetermined) {
    Modulus q(5);
    auto a = ZqMatrix::from_rows(q, {{1, 1}, {2, 2}});
    auto r = solve_linear_system(a, ZqVector(q, {1, 2}));
    ASSERT_TRUE(std::holds_alternative<Underdetermined>(r));
    ASSERT_EQ(std::get<Underdetermined>(r).rank, 1u);
}

TEST(zq_core, solve_composite_rejected) {
    Modulus q(6);
    ASSERT_THROW(solve_linear_system(ZqMatrix::identity(q, 2), ZqVector::zeros(q, 2)), CompositeModulus);
    ASSERT_THROW(kernel_basis(ZqMatrix::identity(q, 2)), CompositeModulus);
}

TEST(zq_core, solve_round_trip) {
    Modulus q(11);
    Rng rng(7);
    int solved = 0;
    for (int t = 0; t < 200; t++) {
        auto a = ZqMatrix::random(q, 4, 4, rng);
        auto x = ZqVector::random(q, 4, rng);
        auto r = solve_linear_system(a, a * x);
        if (rank(a) == 4) {
            ASSERT_EQ(std::get<ZqVector>(r), x);
            solved++;
        } else {
            ASSERT_TRUE(std::holds_alternative<Underdetermined>(r));
        }
    }
    ASSERT_GT(solved, 150);
}

TEST(zq_core, solve_overdetermined) {
    Modulus q(13);
    Rng rng(3);
    auto a = ZqMatrix::random(q, 12, 5, rng);
    auto x = ZqVector::random(q, 5, rng);
    ASSERT_EQ(std::get<ZqVector>(solve_linear_system(a, a * x)), x);
}

TEST(zq_core, kernel_examples) {
    ASSERT_EQ(kernel_basis(ZqMatrix::identity(Modulus(3), 2)).cols(), 0u);
    Modulus q(5);
    auto k = kernel_basis(ZqMatrix::from_rows(q, {{1, 1}}));
    ASSERT_EQ(k.cols(), 1u);
    ASSERT_EQ(q.add(k(0, 0), k(1, 0)), 0u);
    ASSERT_NE(k(0, 0), 0u);
}

TEST(zq_core, kernel_rank_nullity) {
    Rng rng(11);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        Modulus q(p);
        for (int t = 0; t < 50; t++) {
            size_t rows = 1 + rng.below(4), cols = 1 + rng.below(6);
            auto a = ZqMatrix::random(q, rows, cols, rng);
            auto k = kernel_basis(a);
            ASSERT_EQ(k.cols() + rank(a), cols);
            for (size_t c = 0; c < k.cols(); c++) {
                ASSERT_EQ(a * k.column(c), ZqVector::zeros(q, rows));
            }
            ASSERT_EQ(rank(k), k.cols());
        }
    }
}

TEST(zq_core, kernel_random_2x5) {
    Modulus q(5);
    Rng rng(19);
    auto a = ZqMatrix::random(q, 2, 5, rng);
    while (rank(a) < 2) {
        a = ZqMatrix::random(q, 2, 5, rng);
    }
    auto k = kernel_basis(a);
    ASSERT_EQ(k.cols(), 3u);
}

TEST(zq_core, apply_integer_vector) {
    Modulus q(6);
    auto a = ZqMatrix::from_rows(q, {{1, 2, 3}});
    ASSERT_EQ(a.apply({-1, 2, -1}), ZqVector::zeros(q, 1));
    ASSERT_EQ(a.apply({1, 1, 1}), ZqVector::zeros(q, 1));
}
