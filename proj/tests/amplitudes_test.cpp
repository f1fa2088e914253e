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

#include "latticefilter/amplitudes.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

using namespace latticefilter;

namespace {

// Independent oracle: long double, phase from the unreduced product.
std::vector<std::complex<long double>> oracle_dft(const Amplitude &f) {
    long double q = f.q();
    long double pi = 3.141592653589793238462643383279502884L;
    std::vector<std::complex<long double>> out(f.q());
    for (uint32_t y = 0; y < f.q(); y++) {
        std::complex<long double> acc = 0;
        for (uint32_t x = 0; x < f.q(); x++) {
            long double th = 2 * pi * x * y / q;
            acc += std::complex<long double>(std::cos(th), std::sin(th)) *
                   std::complex<long double>(f[x].real(), f[x].imag());
        }
        out[y] = acc / std::sqrt(q);
    }
    return out;
}

Amplitude random_table(uint32_t q, Rng &rng) {
    std::vector<Complex> t(q);
    for (auto &v : t) {
        v = Complex(rng.normal(), rng.normal());
    }
    return make_amplitude(family::Custom{t}, Modulus(q));
}

double l2(const Amplitude &f) {
    double s = 0;
    for (auto v : f.values()) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

}  // namespace

TEST(amplitudes, bounded_uniform_q31) {
    auto f = make_amplitude(family::BoundedUniform{3}, Modulus(31));
    for (Elem x = 0; x < 31; x++) {
        int64_t c = centered(x, Modulus(31));
        double want = std::abs(c) <= 3 ? 1 / std::sqrt(7.0) : 0.0;
        ASSERT_NEAR(f[x].real(), want, 1e-15);
        ASSERT_EQ(f[x].imag(), 0.0);
    }
}

TEST(amplitudes, delta) {
    auto f = make_amplitude(family::Delta{0}, Modulus(7));
    ASSERT_EQ(f[0], Complex(1, 0));
    for (Elem x = 1; x < 7; x++) {
        ASSERT_EQ(f[x], Complex(0, 0));
    }
}

TEST(amplitudes, gaussian_shape) {
    Modulus q(31);
    auto f = make_amplitude(family::Gaussian{3}, q);
    for (Elem x = 0; x < 31; x++) {
        double c = (double)centered(x, q);
        ASSERT_NEAR(f[x].real() / f[0].real(), std::exp(-(c / 3) * (c / 3)), 1e-14);
        ASSERT_EQ(f[x].imag(), 0.0);
    }
    ASSERT_NEAR(l2(f), 1.0, 1e-12);
}

TEST(amplitudes, real_families_are_real_and_normalized) {
    Modulus q(17);
    std::vector<Family> fams = {
        family::BoundedUniform{2}, family::Gaussian{1.5}, family::Laplace{2},
        family::SuperGaussian{2, 1.5}};
    for (const auto &fam : fams) {
        auto f = make_amplitude(fam, q);
        ASSERT_NEAR(l2(f), 1.0, 1e-12) << f.tag();
        for (auto v : f.values()) {
            ASSERT_EQ(v.imag(), 0.0) << f.tag();
        }
    }
}

TEST(amplitudes, bad_parameters) {
    ASSERT_THROW(make_amplitude(family::BoundedUniform{3}, Modulus(5)), BadParameter);
    ASSERT_THROW(make_amplitude(family::SuperGaussian{2, 2.0}, Modulus(5)), BadParameter);
    ASSERT_THROW(make_amplitude(family::SuperGaussian{2, 0.0}, Modulus(5)), BadParameter);
    ASSERT_THROW(make_amplitude(family::Gaussian{NAN}, Modulus(5)), BadParameter);
    ASSERT_THROW(make_amplitude(family::Custom{std::vector<Complex>(5)}, Modulus(5)), BadParameter);
    ASSERT_THROW(make_amplitude(family::Custom{std::vector<Complex>(4, 1.0)}, Modulus(5)), BadParameter);
}

TEST(amplitudes, dft_examples) {
    auto d = dft(make_amplitude(family::Delta{0}, Modulus(5)));
    for (auto v : d.values()) {
        ASSERT_NEAR(std::abs(v - Complex(1 / std::sqrt(5.0), 0)), 0, 1e-15);
    }
    auto full = dft(make_amplitude(family::BoundedUniform{3}, Modulus(7)));
    ASSERT_NEAR(std::abs(full[0]), 1.0, 1e-14);
    for (Elem y = 1; y < 7; y++) {
        ASSERT_NEAR(std::abs(full[y]), 0.0, 1e-14);
    }
    auto u = dft(make_amplitude(family::BoundedUniform{1}, Modulus(5)));
    ASSERT_NEAR(u[1].real(), 0.41777457946839344509, 1e-14);
    ASSERT_NEAR(u[1].imag(), 0.0, 1e-15);
}

TEST(amplitudes, dft_matches_oracle) {
    Rng rng(5);
    for (uint32_t q : {2u, 3u, 5u, 8u, 31u, 64u, 101u}) {
        auto f = random_table(q, rng);
        auto got = dft(f);
        auto want = oracle_dft(f);
        for (uint32_t y = 0; y < q; y++) {
            ASSERT_NEAR(got[y].real(), (double)want[y].real(), 1e-12);
            ASSERT_NEAR(got[y].imag(), (double)want[y].imag(), 1e-12);
        }
    }
}

TEST(amplitudes, dft_unitary_and_period_four) {
    Rng rng(9);
    for (int t = 0; t < 50; t++) {
        uint32_t q = 2 + (uint32_t)rng.below(60);
        auto f = random_table(q, rng);
        auto g = dft(f);
        ASSERT_NEAR(l2(g), 1.0, 1e-12);
        auto f4 = dft(dft(dft(g)));
        for (uint32_t x = 0; x < q; x++) {
            ASSERT_NEAR(std::abs(f4[x] - f[x]), 0.0, 1e-10);
        }
    }
}

TEST(amplitudes, closed_form_examples) {
    ASSERT_NEAR(bounded_uniform_dft_closed_form(31, 3, 0), std::sqrt(7.0 / 31), 1e-15);
    ASSERT_NEAR(bounded_uniform_dft_closed_form(5, 1, 1), 0.41777457946839344509, 1e-14);
    ASSERT_NEAR(bounded_uniform_dft_closed_form(5, 1, 4), bounded_uniform_dft_closed_form(5, 1, 1), 1e-15);
    ASSERT_THROW(bounded_uniform_dft_closed_form(5, 2, 1), BadParameter);
}

TEST(amplitudes, closed_form_matches_direct_dft_q_below_60) {
    for (uint32_t q = 3; q < 60; q++) {
        if (!is_prime(q)) {
            continue;
        }
        for (uint32_t B = 0; 2 * B + 1 < q; B++) {
            auto g = dft(make_amplitude(family::BoundedUniform{B}, Modulus(q)));
            for (Elem y = 0; y < q; y++) {
                ASSERT_NEAR(g[y].real(), bounded_uniform_dft_closed_form(q, B, y), 1e-10);
                ASSERT_NEAR(g[y].imag(), 0.0, 1e-10);
            }
        }
    }
}

TEST(amplitudes, eta_examples) {
    auto d = min_abs_dft(make_amplitude(family::Delta{0}, Modulus(7)));
    ASSERT_NEAR(d.value, 1 / std::sqrt(7.0), 1e-15);
    ASSERT_EQ(d.argmin_index, 0u);

    auto u = min_abs_dft(make_amplitude(family::BoundedUniform{1}, Modulus(5)));
    ASSERT_NEAR(u.value, 0.15957568972123231942, 1e-14);
    ASSERT_EQ(u.argmin_index, 2u);
    ASSERT_GE(u.value, 1 / std::sqrt(15.0) / 5);

    auto z = min_abs_dft(make_amplitude(family::BoundedUniform{1}, Modulus(9)));
    ASSERT_LT(z.value, 1e-14);
}

TEST(amplitudes, eta_lower_bound_when_coprime) {
    for (uint32_t q = 3; q < 102; q++) {
        for (uint32_t B = 0; 2 * B + 1 < q; B++) {
            if (std::gcd(2 * B + 1, q) != 1) {
                continue;
            }
            auto eta = min_abs_dft(make_amplitude(family::BoundedUniform{B}, Modulus(q)));
            ASSERT_GE(eta.value, std::sqrt(1.0 / (q * (2.0 * B + 1))) / q) << q << " " << B;
        }
    }
}

TEST(amplitudes, zero_count_when_not_coprime) {
    for (uint32_t q = 3; q < 80; q++) {
        for (uint32_t B = 1; 2 * B + 1 < q; B++) {
            uint32_t v = std::gcd(2 * B + 1, q);
            if (v == 1) {
                continue;
            }
            auto g = dft(make_amplitude(family::BoundedUniform{B}, Modulus(q)));
            uint32_t zeros = 0;
            for (auto c : g.values()) {
                zeros += std::abs(c) < 1e-12;
            }
            // y is a zero iff (q/v) | y, giving v - 1 zeros in 1..q-1. This
            // equals q/v - 1 only when q = v^2.
            ASSERT_EQ(zeros, v - 1) << q << " " << B;
        }
    }
}

TEST(amplitudes, csv_rows) {
    std::ostringstream out;
    write_amplitude_csv(out, make_amplitude(family::Delta{1}, Modulus(3)));
    ASSERT_EQ(out.str(), "family_tag,index,re,im\ndelta(v=1),0,0,0\ndelta(v=1),1,1,0\ndelta(v=1),2,0,0\n");
}

TEST(amplitudes, format_double_round_trips) {
    ASSERT_EQ(format_double(0.1), "0.10000000000000001");
    ASSERT_EQ(format_double(1.0), "1");
    ASSERT_EQ(format_double(1e-300), "1e-300");
}
