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

#ifndef LATTICEFILTER_ARORA_GE_HPP
#define LATTICEFILTER_ARORA_GE_HPP

#include <string>
#include <variant>
#include <vector>

#include "latticefilter/zq_core.hpp"

namespace latticefilter {

/// b = <a, u> + e with e in a known support.
struct LweSample {
    ZqVector a;
    Elem b;
};

struct Failure {
    std::string reason;
};

using SecretResult = std::variant<ZqVector, Failure>;

/// Monomials in n variables of total degree 1..D, graded then lexicographic.
std::vector<std::vector<uint32_t>> monomials_up_to(size_t n, size_t degree);

/// prod_{v in S} (b - <a,u> - v) = 0, one row per sample, written as
/// rows * (u^alpha)_alpha = rhs over the monomials listed in `monomials`.
struct Linearization {
    std::vector<std::vector<uint32_t>> monomials;
    ZqMatrix rows;
    ZqVector rhs;
};
Linearization linearize(const std::vector<LweSample> &samples, const std::vector<Elem> &support, size_t n, Modulus q);

/// Throws InsufficientSamples when there are fewer samples than monomials,
/// CompositeModulus for composite q, BadParameter for a bad support.
SecretResult arora_ge(const std::vector<LweSample> &samples, const std::vector<Elem> &support, size_t n, Modulus q);

}  // namespace latticefilter

#endif
