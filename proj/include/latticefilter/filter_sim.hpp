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

#ifndef LATTICEFILTER_FILTER_SIM_HPP
#define LATTICEFILTER_FILTER_SIM_HPP

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "latticefilter/circulant_gso.hpp"

namespace latticefilter {

class StateVector {
   public:
    /// Throws BadParameter unless the table has unit norm within 1e-9.
    explicit StateVector(std::vector<Complex> amplitudes);

    uint32_t q() const {
        return (uint32_t)amps_.size();
    }
    const std::vector<Complex> &amplitudes() const {
        return amps_;
    }
    Complex operator[](size_t i) const {
        return amps_[i];
    }
    Eigen::VectorXcd as_vector() const;

   private:
    std::vector<Complex> amps_;
};

/// psi_v[(v+e) mod q] = f(e).
StateVector psi_state(const Amplitude &f, Elem v);

/// Rows 0..k-1 are the conjugated normalized GSO vectors of psi_y..psi_{y+k-1};
/// the remaining rows are a seeded orthonormal completion.
class FilterUnitary {
   public:
    uint32_t q() const {
        return (uint32_t)matrix_.rows();
    }
    size_t k() const {
        return k_;
    }
    Elem base_shift() const {
        return y_;
    }
    /// Rank of the full shift set psi_y..psi_{y+q-1}.
    size_t effective_rank() const {
        return effective_rank_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    /// GSO norms of the k filtered shift columns.
    const std::vector<double> &gso_norms() const {
        return gso_norms_;
    }

   private:
    friend FilterUnitary build_filter_unitary(const Amplitude &, Elem, size_t, uint64_t);
    size_t k_ = 0;
    Elem y_ = 0;
    size_t effective_rank_ = 0;
    Eigen::MatrixXcd matrix_;
    std::vector<double> gso_norms_;
};

/// Throws RankDeficient if k exceeds the rank of the shift columns.
FilterUnitary build_filter_unitary(const Amplitude &f, Elem y, size_t k, uint64_t completion_seed);

/// Entry j is |<row_j, s>|^2.
std::vector<double> outcome_distribution(const FilterUnitary &u, const StateVector &s);

/// Inverse-CDF draw from a probability table.
size_t sample_from(const std::vector<double> &probs, Rng &rng);
size_t sample_outcome(const FilterUnitary &u, const StateVector &s, Rng &rng);

struct NoInformation {
    bool operator==(const NoInformation &) const = default;
};
struct Equality {
    Elem value;
    bool operator==(const Equality &) const = default;
};
/// The hidden value is not in `values`.
struct ExcludedSet {
    std::vector<Elem> values;
    bool operator==(const ExcludedSet &) const = default;
};

struct Constraint {
    size_t sample_index = 0;
    std::variant<NoInformation, Equality, ExcludedSet> kind;
    /// Outcome landed where the rank says it cannot.
    bool anomalous = false;

    bool satisfied_by(Elem x) const;
};

/// Reads outcome j of a filter with k rows at shift y. effective_rank is
/// only used to flag outcomes at or past k as anomalous; pass 0 to skip.
Constraint constraint_from_outcome(Elem y, size_t k, uint32_t q, size_t j, size_t effective_rank = 0);

/// Filters for one amplitude and k, built lazily per shift.
class FilterBank {
   public:
    FilterBank(Amplitude f, size_t k, uint64_t completion_seed);

    const FilterUnitary &at(Elem y);
    const Amplitude &amplitude() const {
        return f_;
    }
    size_t k() const {
        return k_;
    }

   private:
    Amplitude f_;
    size_t k_;
    uint64_t seed_;
    std::map<Elem, std::unique_ptr<FilterUnitary>> cache_;
};

}  // namespace latticefilter

#endif
