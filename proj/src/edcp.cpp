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

#include <cmath>
#include <memory>
#include <numbers>

namespace latticefilter {

namespace {

size_t power_checked(uint32_t q, size_t n) {
    size_t total = 1;
    for (size_t i = 0; i < n; i++) {
        total *= q;
        if (total > 1000000) {
            throw ScaleExceeded("q^n exceeds 10^6");
        }
    }
    return total;
}

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

/// In-place QFT_q on every axis of a q^n table (axis i has stride q^i).
void qft_axes(std::vector<Complex> &data, uint32_t q, size_t n) {
    std::vector<Complex> omega(q), line(q);
    for (uint32_t t = 0; t < q; t++) {
        omega[t] = std::polar(1.0, 2 * std::numbers::pi * t / q);
    }
    double scale = 1 / std::sqrt((double)q);
    size_t stride = 1;
    for (size_t axis = 0; axis < n; axis++) {
        for (size_t base = 0; base < data.size(); base++) {
            if ((base / stride) % q != 0) {
                continue;
            }
            for (uint32_t w = 0; w < q; w++) {
                Complex acc = 0;
                for (uint32_t v = 0; v < q; v++) {
                    acc += omega[(uint64_t)v * w % q] * data[base + v * stride];
                }
                line[w] = acc * scale;
            }
            for (uint32_t w = 0; w < q; w++) {
                data[base + w * stride] = line[w];
            }
        }
        stride *= q;
    }
}

/// Rows j < rows of the table sum_j D(j)|j>|x + j s> after QFT_q^n on register 2.
std::vector<std::vector<Complex>> transformed_table(const EdcpSampleSet &set, size_t index, uint32_t rows) {
    const Modulus &q = set.q;
    size_t cells = power_checked(q.value(), set.n);
    const ZqVector &x = set.offsets.at(index);
    std::vector<std::vector<Complex>> table(rows, std::vector<Complex>(cells));
    for (uint32_t j = 0; j < rows; j++) {
        auto v = ZqVector::zeros(q, set.n);
        for (size_t i = 0; i < set.n; i++) {
            v.set(i, (int64_t)x[i] + (int64_t)j * set.s[i]);
        }
        table[j][code_of(v)] = set.D[j];
        qft_axes(table[j], q.value(), set.n);
    }
    return table;
}

Amplitude slwe_amplitude(const EdcpSampleSet &set) {
    return dft(set.D);
}

void check_window(const EdcpSampleSet &set, uint32_t p) {
    if (!(p > 1 && p < set.q.value())) {
        throw BadParameter("need 1 < p < q");
    }
    double want = 1 / std::sqrt((double)p);
    for (Elem j = 0; j < set.q.value(); j++) {
        double target = j < p ? want : 0.0;
        if (std::abs(set.D[j] - Complex(target)) > 1e-12) {
            throw BadParameter("D must be uniform over [0, p)");
        }
    }
}

}  // namespace

EdcpSampleSet EdcpSampleSet::random(size_t n, size_t m, const Amplitude &D, const ZqVector &s, Rng &rng) {
    if (s.size() != n || D.q() != s.modulus().value()) {
        throw BadShape("secret length or distribution modulus mismatch");
    }
    EdcpSampleSet set{n, s.modulus(), s, D, {}};
    for (size_t i = 0; i < m; i++) {
        set.offsets.push_back(ZqVector::random(s.modulus(), n, rng));
    }
    return set;
}

Amplitude edcp_window(Modulus q, uint32_t width) {
    if (width < 1 || width > q.value()) {
        throw BadParameter("window width must be in [1, q]");
    }
    std::vector<Complex> t(q.value());
    for (uint32_t j = 0; j < width; j++) {
        t[j] = 1.0;
    }
    return Amplitude(q, std::move(t), "window(" + std::to_string(width) + ")");
}

std::vector<double> edcp_register_marginal(const EdcpSampleSet &set, size_t index) {
    auto table = transformed_table(set, index, set.q.value());
    std::vector<double> out(table[0].size());
    for (const auto &row : table) {
        for (size_t c = 0; c < row.size(); c++) {
            out[c] += std::norm(row[c]);
        }
    }
    return out;
}

StateVector edcp_post_measurement_state(const EdcpSampleSet &set, size_t index, const ZqVector &a) {
    uint32_t q = set.q.value();
    auto table = transformed_table(set, index, q);
    size_t c = code_of(a);
    std::vector<Complex> reg(q);
    double n2 = 0;
    for (uint32_t j = 0; j < q; j++) {
        reg[j] = table[j][c];
        n2 += std::norm(reg[j]);
    }
    std::vector<Complex> out(q);
    double scale = 1 / std::sqrt(n2 * q);
    for (uint32_t e = 0; e < q; e++) {
        Complex acc = 0;
        for (uint32_t j = 0; j < q; j++) {
            acc += std::polar(1.0, 2 * std::numbers::pi * ((uint64_t)j * e % q) / q) * reg[j];
        }
        out[e] = acc * scale;
    }
    return StateVector(std::move(out));
}

QuantumSample edcp_to_slwe(const EdcpSampleSet &set, size_t index, Rng &rng, EdcpMode mode) {
    if (mode == EdcpMode::Explicit) {
        auto marginal = edcp_register_marginal(set, index);
        auto a = vector_of(sample_from(marginal, rng), set.n, set.q);
        return {a, edcp_post_measurement_state(set, index, a)};
    }
    auto a = ZqVector::random(set.q, set.n, rng);
    return {a, psi_state(slwe_amplitude(set), set.q.neg(a.dot(set.s)))};
}

SlweReport edcp_solve(const EdcpSampleSet &set, EdcpSolveMode mode, uint64_t seed, EdcpMode reduction) {
    auto rng = std::make_shared<Rng>(seed, 0, StreamRole::Oracle);
    auto next = std::make_shared<size_t>(0);
    const EdcpSampleSet *ptr = &set;
    SampleSource source = [ptr, rng, next, reduction]() {
        if (*next >= ptr->offsets.size()) {
            throw InsufficientSamples("EDCP sample set exhausted");
        }
        return edcp_to_slwe(*ptr, (*next)++, *rng, reduction);
    };
    Amplitude f = slwe_amplitude(set);
    size_t m = set.offsets.size();
    SlweReport report;
    if (mode == EdcpSolveMode::GaussianElimination) {
        report = slwe_solve_ge(source, set.n, set.q, f, m, seed);
    } else {
        size_t k = gso(build_shift_columns(f, 0, set.q.value())).effective_rank;
        report = slwe_solve_tail(source, set.n, set.q, f, k, m, seed);
    }
    if (report.secret) {
        auto s = ZqVector::zeros(set.q, set.n);
        for (size_t i = 0; i < set.n; i++) {
            s.set(i, set.q.neg((*report.secret)[i]));
        }
        report.secret = s;
    }
    return report;
}

std::vector<double> friedl_z_distribution(uint32_t p, Modulus q, Elem t) {
    std::vector<double> out(p);
    for (uint32_t z = 0; z < p; z++) {
        Complex acc = 0;
        for (uint32_t j = 0; j < p; j++) {
            double phase = (double)((uint64_t)j * z % p) / p + (double)((uint64_t)j * t % q.value()) / q.value();
            acc += std::polar(1.0, 2 * std::numbers::pi * phase);
        }
        out[z] = std::norm(acc) / ((double)p * p);
    }
    return out;
}

FriedlSample friedl_measure(const EdcpSampleSet &set, size_t index, uint32_t p, Rng &rng) {
    check_window(set, p);
    (void)index;
    // The y marginal is uniform and independent of x.
    auto y = ZqVector::random(set.q, set.n, rng);
    Elem z = (Elem)sample_from(friedl_z_distribution(p, set.q, y.dot(set.s)), rng);
    return {y, z};
}

std::vector<std::vector<double>> friedl_joint_explicit(const EdcpSampleSet &set, size_t index, uint32_t p) {
    check_window(set, p);
    auto table = transformed_table(set, index, p);
    size_t cells = table[0].size();
    std::vector<std::vector<double>> out(p, std::vector<double>(cells));
    for (uint32_t z = 0; z < p; z++) {
        for (size_t c = 0; c < cells; c++) {
            Complex acc = 0;
            for (uint32_t j = 0; j < p; j++) {
                acc += std::polar(1.0, 2 * std::numbers::pi * ((uint64_t)j * z % p) / p) * table[j][c];
            }
            out[z][c] = std::norm(acc) / p;
        }
    }
    return out;
}

FriedlResult friedl_constant_q(const EdcpSampleSet &set, uint32_t p, uint64_t seed) {
    check_window(set, p);
    const Modulus &q = set.q;
    if (!q.is_prime()) {
        throw CompositeModulus("the constant-q pipeline needs a prime modulus");
    }
    size_t n = set.n;
    uint32_t d = q.value() - 1;
    Rng rng(seed, 0, StreamRole::Measurement);
    FriedlResult result;
    std::vector<ZqVector> kept;
    for (size_t i = 0; i < set.offsets.size(); i++) {
        FriedlSample s = friedl_measure(set, i, p, rng);
        if (s.z == 0) {
            result.zero_outcomes++;
        } else {
            kept.push_back(s.y);
        }
        result.samples.push_back(std::move(s));
    }

    std::vector<std::vector<uint32_t>> monos;
    for (auto &mono : monomials_up_to(n, d)) {
        uint32_t deg = 0;
        for (auto e : mono) {
            deg += e;
        }
        if (deg == d) {
            monos.push_back(mono);
        }
    }
    if (kept.size() < monos.size()) {
        throw InsufficientSamples(
            "need " + std::to_string(monos.size()) + " samples with z != 0, got " + std::to_string(kept.size()));
    }
    // <y, s>^{q-1} = 1 expanded by the multinomial theorem.
    std::vector<Elem> fact(q.value(), 1);
    for (uint32_t i = 1; i < q.value(); i++) {
        fact[i] = q.mul(fact[i - 1], i);
    }
    ZqMatrix rows(q, kept.size(), monos.size());
    for (size_t r = 0; r < kept.size(); r++) {
        for (size_t c = 0; c < monos.size(); c++) {
            Elem coef = fact[d];
            for (size_t i = 0; i < n; i++) {
                coef = q.mul(coef, q.inv(fact[monos[c][i]]));
                coef = q.mul(coef, q.pow(kept[r][i], monos[c][i]));
            }
            rows.set(r, c, coef);
        }
    }
    auto sol = solve_affine(rows, ZqVector(q, std::vector<int64_t>(kept.size(), 1)));
    if (!sol) {
        result.failure = "constraints are inconsistent";
        return result;
    }
    if (sol->kernel.cols() != 0) {
        result.failure = "constraints do not determine s up to scale";
        return result;
    }
    auto value_of = [&](const std::vector<uint32_t> &mono) -> Elem {
        for (size_t c = 0; c < monos.size(); c++) {
            if (monos[c] == mono) {
                return sol->particular[c];
            }
        }
        return 0;
    };
    size_t lead = n;
    for (size_t i = 0; i < n && lead == n; i++) {
        std::vector<uint32_t> e(n, 0);
        e[i] = d;
        if (value_of(e) == 1) {
            lead = i;
        }
    }
    if (lead == n) {
        result.failure = "no coordinate of s is determined nonzero";
        return result;
    }
    auto r = ZqVector::zeros(q, n);
    for (size_t j = 0; j < n; j++) {
        std::vector<uint32_t> e(n, 0);
        e[lead] = d - 1;
        e[j] += 1;
        r.set(j, j == lead ? 1 : value_of(e));
    }

    std::vector<double> loglik(q.value(), 0.0);
    std::vector<std::vector<double>> law(q.value());
    for (Elem t = 0; t < q.value(); t++) {
        law[t] = friedl_z_distribution(p, q, t);
    }
    double best = -INFINITY;
    for (Elem lambda = 1; lambda < q.value(); lambda++) {
        double ll = 0;
        for (const auto &s : result.samples) {
            Elem t = q.mul(lambda, s.y.dot(r));
            ll += std::log(law[t][s.z]);
        }
        loglik[lambda] = ll;
        best = std::max(best, ll);
    }
    for (Elem lambda = 1; lambda < q.value(); lambda++) {
        if (loglik[lambda] >= best - 1e-9 * (1 + std::abs(best))) {
            auto cand = ZqVector::zeros(q, n);
            for (size_t j = 0; j < n; j++) {
                cand.set(j, q.mul(lambda, r[j]));
            }
            result.candidates.push_back(cand);
        }
    }
    if (result.candidates.size() == 1) {
        result.secret = result.candidates[0];
    } else {
        result.failure = "likelihood ties between scalar multiples";
    }
    return result;
}

}  // namespace latticefilter
