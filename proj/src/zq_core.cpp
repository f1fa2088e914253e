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

#include "latticefilter/zq_core.hpp"

#include <sstream>

namespace latticefilter {

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Modulus::Modulus(uint32_t q) : q_(q), prime_(latticefilter::is_prime(q)) {
    if (q < 2 || q > kMaxModulus) {
        throw BadParameter("modulus must be in [2, 65536], got " + std::to_string(q));
    }
}

Elem Modulus::pow(Elem a, uint64_t e) const {
    Elem result = 1 % q_;
    Elem base = a;
    while (e) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem Modulus::inv(Elem a) const {
    int64_t r0 = q_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t quot = r0 / r1;
        int64_t r2 = r0 - quot * r1;
        r0 = r1;
        r1 = r2;
        int64_t t2 = t0 - quot * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw BadParameter(std::to_string(a) + " is not invertible mod " + std::to_string(q_));
    }
    return reduce(t0);
}

int64_t centered(Elem x, const Modulus &q) {
    int64_t half = q.value() / 2;
    int64_t v = x;
    return v >= (int64_t)q.value() - half ? v - q.value() : v;
}

ZqVector::ZqVector(Modulus q, size_t length) : q_(q), entries_(length, 0) {
}

ZqVector ZqVector::zeros(Modulus q, size_t length) {
    return ZqVector(q, length);
}

ZqVector::ZqVector(Modulus q, const std::vector<int64_t> &entries) : q_(q), entries_(entries.size()) {
    for (size_t i = 0; i < entries.size(); i++) {
        entries_[i] = q_.reduce(entries[i]);
    }
}

ZqVector ZqVector::random(Modulus q, size_t length, Rng &rng) {
    ZqVector v(q, length);
    for (auto &e : v.entries_) {
        e = (Elem)rng.below(q.value());
    }
    return v;
}

Elem ZqVector::dot(const ZqVector &other) const {
    uint64_t acc = 0;
    for (size_t i = 0; i < entries_.size(); i++) {
        acc = (acc + (uint64_t)entries_[i] * other.entries_[i]) % q_.value();
    }
    return (Elem)acc;
}

IntVector ZqVector::centered_lift() const {
    IntVector out(entries_.size());
    for (size_t i = 0; i < entries_.size(); i++) {
        out[i] = centered(entries_[i], q_);
    }
    return out;
}

std::string ZqVector::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < entries_.size(); i++) {
        out << (i ? "," : "") << entries_[i];
    }
    out << ")";
    return out.str();
}

ZqMatrix::ZqMatrix(Modulus q, size_t rows, size_t cols) : q_(q), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
}

ZqMatrix ZqMatrix::identity(Modulus q, size_t n) {
    ZqMatrix m(q, n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, 1);
    }
    return m;
}

ZqMatrix ZqMatrix::random(Modulus q, size_t rows, size_t cols, Rng &rng) {
    ZqMatrix m(q, rows, cols);
    for (auto &e : m.entries_) {
        e = (Elem)rng.below(q.value());
    }
    return m;
}

ZqMatrix ZqMatrix::from_rows(Modulus q, const std::vector<std::vector<int64_t>> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    ZqMatrix m(q, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw BadShape("ragged rows");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

ZqVector ZqMatrix::column(size_t c) const {
    auto v = ZqVector::zeros(q_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        v.set(r, (*this)(r, c));
    }
    return v;
}

ZqVector ZqMatrix::row(size_t r) const {
    auto v = ZqVector::zeros(q_, cols_);
    for (size_t c = 0; c < cols_; c++) {
        v.set(c, (*this)(r, c));
    }
    return v;
}

ZqMatrix ZqMatrix::transpose() const {
    ZqMatrix t(q_, cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.entries_[c * rows_ + r] = (*this)(r, c);
        }
    }
    return t;
}

ZqVector ZqMatrix::operator*(const ZqVector &x) const {
    if (x.size() != cols_) {
        throw BadShape("matrix-vector size mismatch");
    }
    auto out = ZqVector::zeros(q_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        for (size_t c = 0; c < cols_; c++) {
            acc = (acc + (uint64_t)(*this)(r, c) * x[c]) % q_.value();
        }
        out.set(r, (int64_t)acc);
    }
    return out;
}

ZqMatrix ZqMatrix::operator*(const ZqMatrix &other) const {
    if (other.rows_ != cols_) {
        throw BadShape("matrix-matrix size mismatch");
    }
    ZqMatrix out(q_, rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < other.cols_; c++) {
            uint64_t acc = 0;
            for (size_t k = 0; k < cols_; k++) {
                acc = (acc + (uint64_t)(*this)(r, k) * other(k, c)) % q_.value();
            }
            out.set(r, c, (int64_t)acc);
        }
    }
    return out;
}

ZqVector ZqMatrix::apply(const IntVector &x) const {
    if (x.size() != cols_) {
        throw BadShape("matrix-vector size mismatch");
    }
    auto out = ZqVector::zeros(q_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        int64_t acc = 0;
        for (size_t c = 0; c < cols_; c++) {
            acc = (acc + (int64_t)(*this)(r, c) * q_.reduce(x[c])) % q_.value();
        }
        out.set(r, acc);
    }
    return out;
}

namespace {

void require_prime(const Modulus &q) {
    if (!q.is_prime()) {
        throw CompositeModulus("elimination needs a prime modulus, got " + std::to_string(q.value()));
    }
}

}  // namespace

Echelon row_reduce(const ZqMatrix &a) {
    require_prime(a.modulus());
    const Modulus &q = a.modulus();
    ZqMatrix m = a;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); col++) {
        size_t p = row;
        while (p < m.rows() && m(p, col) == 0) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != row) {
            for (size_t c = 0; c < m.cols(); c++) {
                Elem t = m(p, c);
                m.set(p, c, m(row, c));
                m.set(row, c, t);
            }
        }
        Elem inv = q.inv(m(row, col));
        for (size_t c = col; c < m.cols(); c++) {
            m.set(row, c, q.mul(m(row, c), inv));
        }
        for (size_t r = 0; r < m.rows(); r++) {
            Elem factor = m(r, col);
            if (r == row || factor == 0) {
                continue;
            }
            for (size_t c = col; c < m.cols(); c++) {
                m.set(r, c, q.sub(m(r, c), q.mul(factor, m(row, c))));
            }
        }
        pivots.push_back(col);
        row++;
    }
    return {std::move(m), std::move(pivots)};
}

size_t rank(const ZqMatrix &a) {
    return row_reduce(a).pivot_cols.size();
}

std::optional<AffineSolution> solve_affine(const ZqMatrix &a, const ZqVector &b) {
    if (a.rows() != b.size()) {
        throw BadShape("row count of A differs from length of b");
    }
    const Modulus &q = a.modulus();
    require_prime(q);
    size_t n = a.cols();
    ZqMatrix aug(q, a.rows(), n + 1);
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < n; c++) {
            aug.set(r, c, a(r, c));
        }
        aug.set(r, n, b[r]);
    }
    Echelon e = row_reduce(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) {
        return std::nullopt;
    }
    auto x = ZqVector::zeros(q, n);
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < e.pivot_cols.size(); i++) {
        x.set(e.pivot_cols[i], e.reduced(i, n));
        is_pivot[e.pivot_cols[i]] = true;
    }
    size_t free_count = n - e.pivot_cols.size();
    ZqMatrix kernel(q, n, free_count);
    size_t k = 0;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        kernel.set(f, k, 1);
        for (size_t i = 0; i < e.pivot_cols.size(); i++) {
            kernel.set(e.pivot_cols[i], k, q.neg(e.reduced(i, f)));
        }
        k++;
    }
    return AffineSolution{std::move(x), std::move(kernel)};
}

SolveResult solve_linear_system(const ZqMatrix &a, const ZqVector &b) {
    auto sol = solve_affine(a, b);
    if (!sol) {
        return NoSolution{};
    }
    if (sol->kernel.cols() > 0) {
        return Underdetermined{sol->particular, a.cols() - sol->kernel.cols()};
    }
    return sol->particular;
}

ZqMatrix kernel_basis(const ZqMatrix &a) {
    return solve_affine(a, ZqVector::zeros(a.modulus(), a.rows()))->kernel;
}

}  // namespace latticefilter
