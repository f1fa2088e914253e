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

#ifndef LATTICEFILTER_ZQ_CORE_HPP
#define LATTICEFILTER_ZQ_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latticefilter/errors.hpp"
#include "latticefilter/rng.hpp"

namespace latticefilter {

/// An element of Z_q, always stored in [0, q).
using Elem = uint32_t;

/// Integer vector (SIS solutions, centered lifts).
using IntVector = std::vector<int64_t>;

constexpr uint32_t kMaxModulus = 1u << 16;

class Modulus {
   public:
    /// Throws BadParameter unless 2 <= q <= kMaxModulus.
    explicit Modulus(uint32_t q);

    uint32_t value() const {
        return q_;
    }
    bool is_prime() const {
        return prime_;
    }

    Elem reduce(int64_t x) const {
        int64_t r = x % (int64_t)q_;
        return (Elem)(r < 0 ? r + q_ : r);
    }
    Elem add(Elem a, Elem b) const {
        uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Elem sub(Elem a, Elem b) const {
        return a >= b ? a - b : a + q_ - b;
    }
    Elem neg(Elem a) const {
        return a == 0 ? 0 : q_ - a;
    }
    Elem mul(Elem a, Elem b) const {
        return (Elem)((uint64_t)a * b % q_);
    }
    Elem pow(Elem a, uint64_t e) const;
    /// Inverse of a unit; throws BadParameter if gcd(a, q) != 1.
    Elem inv(Elem a) const;

    bool operator==(const Modulus &other) const {
        return q_ == other.q_;
    }

   private:
    uint32_t q_;
    bool prime_;
};

bool is_prime(uint64_t n);

/// Representative of x in [-floor(q/2), q - floor(q/2)).
/// For even q the range is [-q/2, q/2), so q/2 maps to -q/2.
int64_t centered(Elem x, const Modulus &q);

class ZqVector {
   public:
    static ZqVector zeros(Modulus q, size_t length);
    /// Entries are reduced mod q.
    ZqVector(Modulus q, const std::vector<int64_t> &entries);

    static ZqVector random(Modulus q, size_t length, Rng &rng);

    size_t size() const {
        return entries_.size();
    }
    const Modulus &modulus() const {
        return q_;
    }
    Elem operator[](size_t i) const {
        return entries_[i];
    }
    void set(size_t i, int64_t v) {
        entries_[i] = q_.reduce(v);
    }
    const std::vector<Elem> &entries() const {
        return entries_;
    }
    Elem dot(const ZqVector &other) const;
    IntVector centered_lift() const;

    bool operator==(const ZqVector &other) const {
        return q_ == other.q_ && entries_ == other.entries_;
    }
    std::string str() const;

   private:
    ZqVector(Modulus q, size_t length);
    Modulus q_;
    std::vector<Elem> entries_;
};

class ZqMatrix {
   public:
    ZqMatrix(Modulus q, size_t rows, size_t cols);

    static ZqMatrix identity(Modulus q, size_t n);
    static ZqMatrix random(Modulus q, size_t rows, size_t cols, Rng &rng);
    /// Entries are reduced mod q.
    static ZqMatrix from_rows(Modulus q, const std::vector<std::vector<int64_t>> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    const Modulus &modulus() const {
        return q_;
    }
    Elem operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(size_t r, size_t c, int64_t v) {
        entries_[r * cols_ + c] = q_.reduce(v);
    }

    ZqVector column(size_t c) const;
    ZqVector row(size_t r) const;
    ZqMatrix transpose() const;
    ZqVector operator*(const ZqVector &x) const;
    ZqMatrix operator*(const ZqMatrix &other) const;
    /// A x over the integers, reduced mod q.
    ZqVector apply(const IntVector &x) const;

    bool operator==(const ZqMatrix &other) const {
        return q_ == other.q_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

   private:
    Modulus q_;
    size_t rows_;
    size_t cols_;
    std::vector<Elem> entries_;
};

struct NoSolution {};
struct Underdetermined {
    ZqVector particular;
    size_t rank;
};
using SolveResult = std::variant<ZqVector, NoSolution, Underdetermined>;

/// Full solution set x0 + span(kernel columns).
struct AffineSolution {
    ZqVector particular;
    ZqMatrix kernel;
};

/// Reduced row echelon form. Pivot is the first nonzero entry at or below
/// the current row in the current column.
struct Echelon {
    ZqMatrix reduced;
    std::vector<size_t> pivot_cols;
};
Echelon row_reduce(const ZqMatrix &a);

size_t rank(const ZqMatrix &a);

/// Solves A x = b. Throws CompositeModulus for composite q.
SolveResult solve_linear_system(const ZqMatrix &a, const ZqVector &b);

/// Whole solution set of A x = b, or nullopt if inconsistent.
std::optional<AffineSolution> solve_affine(const ZqMatrix &a, const ZqVector &b);

/// Columns form a basis of {x : A x = 0}. Throws CompositeModulus.
ZqMatrix kernel_basis(const ZqMatrix &a);

}  // namespace latticefilter

#endif
