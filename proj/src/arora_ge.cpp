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

#include <algorithm>
#include <map>
#include <set>

namespace latticefilter {

namespace {

void extend(size_t n, size_t degree, size_t var, std::vector<uint32_t> &cur, std::vector<std::vector<uint32_t>> &out) {
    if (var == n - 1) {
        cur[var] = (uint32_t)degree;
        out.push_back(cur);
        return;
    }
    for (size_t d = degree + 1; d-- > 0;) {
        cur[var] = (uint32_t)d;
        extend(n, degree - d, var + 1, cur, out);
    }
}

}  // namespace

std::vector<std::vector<uint32_t>> monomials_up_to(size_t n, size_t degree) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(n);
    for (size_t d = 1; d <= degree; d++) {
        extend(n, d, 0, cur, out);
    }
    return out;
}

Linearization linearize(const std::vector<LweSample> &samples, const std::vector<Elem> &support, size_t n, Modulus q) {
    size_t degree = support.size();
    auto monos = monomials_up_to(n, degree);
    // Index 0 is the constant monomial.
    std::map<std::vector<uint32_t>, size_t> index;
    index[std::vector<uint32_t>(n, 0)] = 0;
    std::vector<std::vector<uint32_t>> all = {std::vector<uint32_t>(n, 0)};
    for (const auto &m : monos) {
        index[m] = all.size();
        all.push_back(m);
    }
    // times[m][i] is the index of u_i * m, or SIZE_MAX past the degree.
    std::vector<std::vector<size_t>> times(all.size(), std::vector<size_t>(n, SIZE_MAX));
    for (size_t m = 0; m < all.size(); m++) {
        for (size_t i = 0; i < n; i++) {
            auto e = all[m];
            e[i]++;
            auto it = index.find(e);
            if (it != index.end()) {
                times[m][i] = it->second;
            }
        }
    }

    ZqMatrix rows(q, samples.size(), monos.size());
    auto rhs = ZqVector::zeros(q, samples.size());
    std::vector<Elem> poly(all.size()), next(all.size());
    for (size_t s = 0; s < samples.size(); s++) {
        const auto &smp = samples[s];
        if (smp.a.size() != n) {
            throw BadShape("sample dimension differs from n");
        }
        std::fill(poly.begin(), poly.end(), 0);
        poly[0] = 1;
        for (Elem v : support) {
            Elem c = q.sub(smp.b, v);
            std::fill(next.begin(), next.end(), 0);
            for (size_t m = 0; m < all.size(); m++) {
                if (poly[m] == 0) {
                    continue;
                }
                next[m] = q.add(next[m], q.mul(c, poly[m]));
                for (size_t i = 0; i < n; i++) {
                    if (smp.a[i] != 0) {
                        next[times[m][i]] = q.sub(next[times[m][i]], q.mul(smp.a[i], poly[m]));
                    }
                }
            }
            std::swap(poly, next);
        }
        for (size_t m = 1; m < all.size(); m++) {
            rows.set(s, m - 1, poly[m]);
        }
        rhs.set(s, q.neg(poly[0]));
    }
    return {std::move(monos), std::move(rows), std::move(rhs)};
}

SecretResult arora_ge(const std::vector<LweSample> &samples, const std::vector<Elem> &support, size_t n, Modulus q) {
    if (!q.is_prime()) {
        throw CompositeModulus("Arora-Ge needs a prime modulus");
    }
    std::set<Elem> distinct(support.begin(), support.end());
    if (support.empty() || distinct.size() != support.size() || support.size() >= q.value() ||
        *distinct.rbegin() >= q.value()) {
        throw BadParameter("error support must be nonempty, distinct, in Z_q and smaller than q");
    }
    size_t unknowns = monomials_up_to(n, support.size()).size();
    if (samples.size() < unknowns) {
        throw InsufficientSamples(
            "Arora-Ge needs at least " + std::to_string(unknowns) + " samples, got " + std::to_string(samples.size()));
    }
    Linearization lin = linearize(samples, support, n, q);
    auto sol = solve_affine(lin.rows, lin.rhs);
    if (!sol) {
        return Failure{"linearized system is inconsistent"};
    }
    // Degree-1 monomials come first, u_0 .. u_{n-1}.
    auto u = ZqVector::zeros(q, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t c = 0; c < sol->kernel.cols(); c++) {
            if (sol->kernel(i, c) != 0) {
                return Failure{"linearized system does not determine u_" + std::to_string(i)};
            }
        }
        u.set(i, sol->particular[i]);
    }
    return u;
}

}  // namespace latticefilter
