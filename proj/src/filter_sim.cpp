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

#include "latticefilter/filter_sim.hpp"

#include <algorithm>
#include <cmath>

namespace latticefilter {

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    double n2 = 0;
    for (const auto &a : amps_) {
        n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > 1e-9) {
        throw BadParameter("state vector is not normalized");
    }
}

Eigen::VectorXcd StateVector::as_vector() const {
    return Eigen::Map<const Eigen::VectorXcd>(amps_.data(), (Eigen::Index)amps_.size());
}

StateVector psi_state(const Amplitude &f, Elem v) {
    uint32_t q = f.q();
    std::vector<Complex> out(q);
    for (uint32_t e = 0; e < q; e++) {
        out[((uint64_t)v + e) % q] = f[e];
    }
    return StateVector(std::move(out));
}

FilterUnitary build_filter_unitary(const Amplitude &f, Elem y, size_t k, uint64_t completion_seed) {
    uint32_t q = f.q();
    if (k < 1 || k > q) {
        throw BadParameter("filter count must be in [1, q]");
    }
    GsoResult full = gso(build_shift_columns(f, y, q));
    if (k > full.effective_rank) {
        throw RankDeficient(
            "requested " + std::to_string(k) + " filter rows but the shift set has rank " +
            std::to_string(full.effective_rank));
    }
    for (size_t j = 0; j < k; j++) {
        if (full.norms[j] == 0) {
            throw RankDeficient("shift column " + std::to_string(j) + " is dependent on earlier columns");
        }
    }

    FilterUnitary u;
    u.k_ = k;
    u.y_ = y;
    u.effective_rank_ = full.effective_rank;
    u.gso_norms_.assign(full.norms.begin(), full.norms.begin() + (long)k);

    std::vector<Eigen::VectorXcd> rows;
    for (size_t j = 0; j < k; j++) {
        rows.push_back(full.normalized(j));
    }
    Rng rng(completion_seed);
    while (rows.size() < q) {
        Eigen::VectorXcd v(q);
        for (uint32_t i = 0; i < q; i++) {
            v[i] = Complex(rng.normal(), rng.normal());
        }
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &r : rows) {
                v -= r.dot(v) * r;
            }
        }
        double n = v.norm();
        if (n > 1e-6) {
            rows.push_back(v / n);
        }
    }
    u.matrix_.resize(q, q);
    for (uint32_t j = 0; j < q; j++) {
        u.matrix_.row(j) = rows[j].adjoint();
    }
    return u;
}

std::vector<double> outcome_distribution(const FilterUnitary &u, const StateVector &s) {
    Eigen::VectorXcd out = u.matrix() * s.as_vector();
    std::vector<double> probs((size_t)out.size());
    for (Eigen::Index j = 0; j < out.size(); j++) {
        probs[(size_t)j] = std::norm(out[j]);
    }
    return probs;
}

size_t sample_from(const std::vector<double> &probs, Rng &rng) {
    double total = 0;
    for (double p : probs) {
        total += p;
    }
    double r = rng.uniform01() * total;
    double acc = 0;
    size_t last = 0;
    for (size_t j = 0; j < probs.size(); j++) {
        if (probs[j] <= 0) {
            continue;
        }
        acc += probs[j];
        last = j;
        if (r < acc) {
            return j;
        }
    }
    return last;
}

size_t sample_outcome(const FilterUnitary &u, const StateVector &s, Rng &rng) {
    return sample_from(outcome_distribution(u, s), rng);
}

bool Constraint::satisfied_by(Elem x) const {
    if (auto *e = std::get_if<Equality>(&kind)) {
        return e->value == x;
    }
    if (auto *s = std::get_if<ExcludedSet>(&kind)) {
        return std::find(s->values.begin(), s->values.end(), x) == s->values.end();
    }
    return true;
}

namespace {

ExcludedSet run_of(Elem y, size_t len, uint32_t q) {
    ExcludedSet s;
    for (size_t t = 0; t < len; t++) {
        s.values.push_back((Elem)((y + t) % q));
    }
    return s;
}

}  // namespace

Constraint constraint_from_outcome(Elem y, size_t k, uint32_t q, size_t j, size_t effective_rank) {
    if (j >= q || k < 1 || k > q) {
        throw BadParameter("outcome or filter count out of range");
    }
    Constraint c;
    if (j == 0) {
        c.kind = NoInformation{};
    } else if (j < k - 1) {
        c.kind = run_of(y, j, q);
    } else if (j == k - 1) {
        if (k == q) {
            c.kind = Equality{(Elem)((y + q - 1) % q)};
        } else {
            c.kind = run_of(y, k - 1, q);
        }
    } else {
        c.kind = run_of(y, k, q);
        c.anomalous = effective_rank != 0 && k == effective_rank;
    }
    return c;
}

FilterBank::FilterBank(Amplitude f, size_t k, uint64_t completion_seed)
    : f_(std::move(f)), k_(k), seed_(completion_seed) {
}

const FilterUnitary &FilterBank::at(Elem y) {
    auto &slot = cache_[y];
    if (!slot) {
        slot = std::make_unique<FilterUnitary>(build_filter_unitary(f_, y, k_, mix64(seed_ ^ y)));
    }
    return *slot;
}

}  // namespace latticefilter
