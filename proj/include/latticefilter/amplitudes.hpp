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

#ifndef LATTICEFILTER_AMPLITUDES_HPP
#define LATTICEFILTER_AMPLITUDES_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "latticefilter/zq_core.hpp"

namespace latticefilter {

using Complex = std::complex<double>;

/// Unit-norm complex table over Z_q. Index x holds f(x).
class Amplitude {
   public:
    /// Normalizes the table. Throws BadParameter on a zero or non-finite table.
    Amplitude(Modulus q, std::vector<Complex> values, std::string tag);

    const Modulus &modulus() const {
        return q_;
    }
    uint32_t q() const {
        return q_.value();
    }
    const std::vector<Complex> &values() const {
        return values_;
    }
    Complex operator[](Elem x) const {
        return values_[x];
    }
    const std::string &tag() const {
        return tag_;
    }

   private:
    Modulus q_;
    std::vector<Complex> values_;
    std::string tag_;
};

namespace family {
/// 1 on centered x in [-B, B].
struct BoundedUniform {
    uint32_t B;
};
/// exp(-(x/s)^2)
struct Gaussian {
    double s;
};
/// exp(-|x/s|)
struct Laplace {
    double s;
};
/// exp(-|x/B|^p), 0 < p < 2
struct SuperGaussian {
    double B;
    double p;
};
struct DftOf {
    Amplitude inner;
};
struct Delta {
    Elem v;
};
struct Custom {
    std::vector<Complex> table;
};
}  // namespace family

using Family = std::variant<
    family::BoundedUniform,
    family::Gaussian,
    family::Laplace,
    family::SuperGaussian,
    family::DftOf,
    family::Delta,
    family::Custom>;

Amplitude make_amplitude(const Family &f, Modulus q);

/// f^(y) = q^{-1/2} sum_x e^{2 pi i x y / q} f(x), by direct summation.
Amplitude dft(const Amplitude &f);

/// Closed form of the DFT of bounded_uniform(B) at y. Needs 0 < 2B+1 < q.
double bounded_uniform_dft_closed_form(uint32_t q, uint32_t B, Elem y);

struct Eta {
    double value;
    Elem argmin_index;
};

/// min_y |f^(y)|, smallest index on ties.
Eta min_abs_dft(const Amplitude &f);

/// Rows (family_tag, index, re, im) with a header line.
void write_amplitude_csv(std::ostream &out, const Amplitude &f);

/// Shortest decimal that round-trips is not stable across libraries, so
/// every float we emit goes through this: 17 significant digits, '.'.
std::string format_double(double x);

}  // namespace latticefilter

#endif
