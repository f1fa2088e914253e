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

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

namespace latticefilter {

namespace {

std::string num(double x) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general);
    return std::string(buf, r.ptr);
}

template <typename Fn>
Amplitude real_family(const Modulus &q, const std::string &tag, Fn fn) {
    std::vector<Complex> values(q.value());
    for (Elem x = 0; x < q.value(); x++) {
        values[x] = Complex(fn((double)centered(x, q)), 0.0);
    }
    return Amplitude(q, std::move(values), tag);
}

void require_width(double s, const char *what) {
    if (!std::isfinite(s) || s <= 0) {
        throw BadParameter(std::string(what) + " width must be positive and finite");
    }
}

}  // namespace

Amplitude::Amplitude(Modulus q, std::vector<Complex> values, std::string tag)
    : q_(q), values_(std::move(values)), tag_(std::move(tag)) {
    if (values_.size() != q.value()) {
        throw BadParameter("amplitude table length must equal q");
    }
    double norm2 = 0;
    for (const auto &v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw BadParameter("amplitude table has a non-finite entry");
        }
        norm2 += std::norm(v);
    }
    if (norm2 == 0) {
        throw BadParameter("amplitude table is identically zero");
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto &v : values_) {
        v *= inv;
    }
}

Amplitude make_amplitude(const Family &f, Modulus q) {
    using namespace family;
    if (auto *u = std::get_if<BoundedUniform>(&f)) {
        if (2 * (uint64_t)u->B + 1 > q.value()) {
            throw BadParameter("bounded_uniform needs 2B+1 <= q");
        }
        double B = u->B;
        return real_family(q, "bounded_uniform(B=" + std::to_string(u->B) + ")", [B](double x) {
            return std::abs(x) <= B ? 1.0 : 0.0;
        });
    }
    if (auto *g = std::get_if<Gaussian>(&f)) {
        require_width(g->s, "gaussian");
        double s = g->s;
        return real_family(q, "gaussian(s=" + num(s) + ")", [s](double x) {
            return std::exp(-(x / s) * (x / s));
        });
    }
    if (auto *l = std::get_if<Laplace>(&f)) {
        require_width(l->s, "laplace");
        double s = l->s;
        return real_family(q, "laplace(s=" + num(s) + ")", [s](double x) {
            return std::exp(-std::abs(x / s));
        });
    }
    if (auto *sg = std::get_if<SuperGaussian>(&f)) {
        require_width(sg->B, "super_gaussian");
        if (!(sg->p > 0 && sg->p < 2)) {
            throw BadParameter("super_gaussian needs 0 < p < 2");
        }
        double B = sg->B, p = sg->p;
        return real_family(q, "super_gaussian(B=" + num(B) + ";p=" + num(p) + ")", [B, p](double x) {
            return std::exp(-std::pow(std::abs(x / B), p));
        });
    }
    if (auto *d = std::get_if<DftOf>(&f)) {
        if (d->inner.q() != q.value()) {
            throw BadParameter("dft_of: inner amplitude has a different modulus");
        }
        return dft(d->inner);
    }
    if (auto *d = std::get_if<Delta>(&f)) {
        if (d->v >= q.value()) {
            throw BadParameter("delta position out of range");
        }
        std::vector<Complex> values(q.value());
        values[d->v] = 1.0;
        return Amplitude(q, std::move(values), "delta(v=" + std::to_string(d->v) + ")");
    }
    const auto &c = std::get<Custom>(f);
    return Amplitude(q, c.table, "custom");
}

Amplitude dft(const Amplitude &f) {
    uint32_t q = f.q();
    // Twiddles indexed by (x*y mod q) keep the phase argument exact.
    std::vector<Complex> omega(q);
    for (uint32_t t = 0; t < q; t++) {
        omega[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / q);
    }
    std::vector<Complex> out(q);
    double scale = 1.0 / std::sqrt((double)q);
    for (uint32_t y = 0; y < q; y++) {
        Complex acc = 0;
        for (uint32_t x = 0; x < q; x++) {
            acc += omega[(uint64_t)x * y % q] * f[x];
        }
        out[y] = acc * scale;
    }
    return Amplitude(f.modulus(), std::move(out), "dft(" + f.tag() + ")");
}

double bounded_uniform_dft_closed_form(uint32_t q, uint32_t B, Elem y) {
    uint64_t w = 2 * (uint64_t)B + 1;
    if (w >= q) {
        throw BadParameter("closed form needs 2B+1 < q");
    }
    if (y % q == 0) {
        return std::sqrt((double)w / q);
    }
    double theta = 2.0 * std::numbers::pi / q;
    return std::sqrt(1.0 / ((double)q * w)) * std::sin(theta * (w / 2.0) * y) / std::sin(theta * (y / 2.0));
}

Eta min_abs_dft(const Amplitude &f) {
    Amplitude g = dft(f);
    Eta best{std::abs(g[0]), 0};
    for (Elem y = 1; y < f.q(); y++) {
        double v = std::abs(g[y]);
        if (v < best.value) {
            best = {v, y};
        }
    }
    return best;
}

std::string format_double(double x) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

void write_amplitude_csv(std::ostream &out, const Amplitude &f) {
    out << "family_tag,index,re,im\n";
    for (Elem x = 0; x < f.q(); x++) {
        out << f.tag() << ',' << x << ',' << format_double(f[x].real()) << ',' << format_double(f[x].imag()) << '\n';
    }
}

}  // namespace latticefilter
