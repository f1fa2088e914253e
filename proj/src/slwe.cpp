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

#include "latticefilter/slwe.hpp"

#include <cmath>
#include <memory>

namespace latticefilter {

SampleSource planted_source(const Amplitude &f, const ZqVector &u, uint64_t seed) {
    auto rng = std::make_shared<Rng>(seed, 0, StreamRole::Oracle);
    return [f, u, rng]() {
        auto a = ZqVector::random(u.modulus(), u.size(), *rng);
        return QuantumSample{a, psi_state(f, a.dot(u))};
    };
}

std::vector<Elem> tail_support(size_t k, Modulus q) {
    std::vector<Elem> out;
    for (size_t t = k - 1; t < q.value(); t++) {
        out.push_back(q.neg((Elem)t));
    }
    return out;
}

namespace {

ZqMatrix stack_rows(const std::vector<ZqVector> &rows, Modulus q, size_t n) {
    ZqMatrix m(q, rows.size(), n);
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < n; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

void check_source_dims(const QuantumSample &s, size_t n, Modulus q) {
    if (s.a.size() != n || s.state.q() != q.value()) {
        throw BadShape("sample dimensions differ from (n, q)");
    }
}

}  // namespace

SlweReport slwe_solve_ge(SampleSource source, size_t n, Modulus q, const Amplitude &f, size_t max_m, uint64_t seed) {
    if (!q.is_prime()) {
        throw CompositeModulus("the elimination path needs a prime modulus");
    }
    FilterBank bank(f, q.value(), derive_seed(seed, 0, StreamRole::Completion));
    bank.at(0);
    Rng shifts(seed, 0, StreamRole::Shifts);
    Rng meas(seed, 0, StreamRole::Measurement);

    SlweReport report;
    std::vector<ZqVector> rows;
    std::vector<int64_t> rhs;
    bool full_rank = false;
    while (report.m_used < max_m && !full_rank) {
        QuantumSample s = source();
        check_source_dims(s, n, q);
        Elem y = (Elem)shifts.below(q.value());
        const FilterUnitary &u = bank.at(y);
        size_t j = sample_outcome(u, s.state, meas);
        Constraint c = constraint_from_outcome(y, q.value(), q.value(), j, u.effective_rank());
        c.sample_index = report.m_used++;
        if (auto *e = std::get_if<Equality>(&c.kind)) {
            rows.push_back(s.a);
            rhs.push_back(e->value);
            if (rows.size() >= 2 * n) {
                full_rank = rank(stack_rows(rows, q, n)) == n;
            }
        }
        report.constraints.push_back({s.a, y, j, std::move(c)});
    }
    report.constraints_collected = rows.size();
    if (rows.size() < n || rank(stack_rows(rows, q, n)) < n) {
        report.failure = "fewer than n independent equalities";
        return report;
    }
    auto r = solve_linear_system(stack_rows(rows, q, n), ZqVector(q, rhs));
    if (auto *x = std::get_if<ZqVector>(&r)) {
        report.secret = *x;
    } else {
        report.failure = "equalities are inconsistent";
    }
    return report;
}

SlweReport slwe_solve_tail(SampleSource source, size_t n, Modulus q, const Amplitude &f, size_t k, size_t max_m, uint64_t seed) {
    if (!q.is_prime()) {
        throw CompositeModulus("the Arora-Ge path needs a prime modulus");
    }
    if (k == q.value()) {
        return slwe_solve_ge(std::move(source), n, q, f, max_m, seed);
    }
    FilterBank bank(f, k, derive_seed(seed, 0, StreamRole::Completion));
    bank.at(0);
    Rng shifts(seed, 0, StreamRole::Shifts);
    Rng meas(seed, 0, StreamRole::Measurement);

    SlweReport report;
    std::vector<LweSample> samples;
    while (report.m_used < max_m) {
        QuantumSample s = source();
        check_source_dims(s, n, q);
        Elem y = (Elem)shifts.below(q.value());
        const FilterUnitary &u = bank.at(y);
        size_t j = sample_outcome(u, s.state, meas);
        Constraint c = constraint_from_outcome(y, k, q.value(), j, u.effective_rank());
        c.sample_index = report.m_used++;
        if (j == k - 1) {
            samples.push_back({s.a, y});
        }
        report.constraints.push_back({s.a, y, j, std::move(c)});
    }
    report.constraints_collected = samples.size();
    auto support = tail_support(k, q);
    if (samples.size() < monomials_up_to(n, support.size()).size()) {
        report.failure = "too few tail samples for Arora-Ge";
        return report;
    }
    auto r = arora_ge(samples, support, n, q);
    if (auto *x = std::get_if<ZqVector>(&r)) {
        report.secret = *x;
    } else {
        report.failure = std::get<Failure>(r).reason;
    }
    return report;
}

SlweReport slwe_solve_ag(SampleSource source, size_t n, Modulus q, uint32_t B, size_t max_m, uint64_t seed) {
    auto f = dft(make_amplitude(family::BoundedUniform{B}, q));
    return slwe_solve_tail(std::move(source), n, q, f, 2 * (size_t)B + 1, max_m, seed);
}

FidelityReport clwe_simulate(const ZqMatrix &a, const Amplitude &f, DecoderMode mode, uint64_t seed, size_t trials) {
    const Modulus &q = a.modulus();
    size_t n = a.rows(), m = a.cols();
    size_t secrets = 1;
    for (size_t i = 0; i < n; i++) {
        secrets *= q.value();
        if (secrets > 1000000) {
            throw ScaleExceeded("q^n exceeds 10^6");
        }
    }
    if (f.q() != q.value()) {
        throw BadParameter("amplitude modulus differs from matrix modulus");
    }
    if (trials == 0) {
        throw BadParameter("need at least one trial per secret");
    }
    size_t k = q.value();
    if (mode == DecoderMode::AroraGe) {
        k = gso(build_shift_columns(f, 0, q.value())).effective_rank;
    }
    FilterBank bank(f, k, derive_seed(seed, 0, StreamRole::Completion));
    Rng shifts(seed, 0, StreamRole::Shifts);
    std::vector<Elem> ys(m);
    for (auto &y : ys) {
        y = (Elem)shifts.below(q.value());
    }
    // dist[i][x] is the outcome law of coordinate i when <a_i, u> = x.
    std::vector<std::vector<std::vector<double>>> dist(m);
    for (size_t i = 0; i < m; i++) {
        const auto &u = bank.at(ys[i]);
        for (Elem x = 0; x < q.value(); x++) {
            dist[i].push_back(outcome_distribution(u, psi_state(f, x)));
        }
    }
    auto support = tail_support(k, q);
    std::vector<ZqVector> columns;
    for (size_t i = 0; i < m; i++) {
        columns.push_back(a.column(i));
    }

    FidelityReport report{{}, 0, 0, secrets, trials, seed};
    double var_sum = 0;
    for (size_t code = 0; code < secrets; code++) {
        auto u = ZqVector::zeros(q, n);
        size_t c = code;
        for (size_t i = 0; i < n; i++) {
            u.set(i, (int64_t)(c % q.value()));
            c /= q.value();
        }
        Rng meas(seed, code, StreamRole::Measurement);
        size_t failed = 0;
        for (size_t t = 0; t < trials; t++) {
            bool ok = false;
            if (mode == DecoderMode::GaussianElimination) {
                std::vector<ZqVector> rows;
                std::vector<int64_t> rhs;
                for (size_t i = 0; i < m; i++) {
                    size_t j = sample_from(dist[i][columns[i].dot(u)], meas);
                    if (j == k - 1) {
                        rows.push_back(columns[i]);
                        rhs.push_back((int64_t)ys[i] - 1);
                    }
                }
                if (rows.size() >= n) {
                    auto r = solve_linear_system(stack_rows(rows, q, n), ZqVector(q, rhs));
                    ok = std::holds_alternative<ZqVector>(r) && std::get<ZqVector>(r) == u;
                }
            } else {
                std::vector<LweSample> samples;
                for (size_t i = 0; i < m; i++) {
                    size_t j = sample_from(dist[i][columns[i].dot(u)], meas);
                    if (j == k - 1) {
                        samples.push_back({columns[i], ys[i]});
                    }
                }
                if (samples.size() >= monomials_up_to(n, support.size()).size()) {
                    auto r = arora_ge(samples, support, n, q);
                    ok = std::holds_alternative<ZqVector>(r) && std::get<ZqVector>(r) == u;
                }
            }
            failed += !ok;
        }
        double p = (double)failed / trials;
        report.failure_mass.push_back(p);
        // Add-one smoothing keeps the variance estimate positive at p = 0.
        double ps = (failed + 1.0) / (trials + 2.0);
        var_sum += ps * (1 - ps) / trials;
    }
    double mean = 0;
    for (double p : report.failure_mass) {
        mean += p;
    }
    mean /= secrets;
    report.fidelity = 1 - mean;
    report.sigma = std::sqrt(var_sum) / secrets;
    return report;
}

}  // namespace latticefilter
