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

#include "latticefilter/sis.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace latticefilter {

bool is_sis_solution(const SisInstance &inst, const IntVector &z) {
    if (z.size() != inst.a.cols()) {
        return false;
    }
    bool nonzero = false;
    for (int64_t v : z) {
        if (std::llabs(v) > (int64_t)inst.beta) {
            return false;
        }
        nonzero |= v != 0;
    }
    return nonzero && inst.a.apply(z) == ZqVector::zeros(inst.a.modulus(), inst.a.rows());
}

SisStateSampler::SisStateSampler(const ZqMatrix &a, uint32_t B, SisMethod method, uint64_t max_proposals)
    : a_(a), B_(B), method_(method), max_proposals_(max_proposals), box_size_(1) {
    const Modulus &q = a.modulus();
    uint64_t side = 2 * (uint64_t)B + 1;
    if (side > q.value()) {
        throw BadParameter("box side 2B+1 exceeds q");
    }
    for (size_t i = 0; i < a.cols(); i++) {
        if (box_size_ > UINT64_MAX / side) {
            throw ScaleExceeded("box has more than 2^64 points");
        }
        box_size_ *= side;
    }

    if (method == SisMethod::Rejection) {
        scaled_cols_.resize(a.cols());
        for (size_t i = 0; i < a.cols(); i++) {
            for (uint64_t d = 0; d < side; d++) {
                std::vector<Elem> col(a.rows());
                for (size_t r = 0; r < a.rows(); r++) {
                    col[r] = q.mul(a(r, i), q.reduce((int64_t)d - B));
                }
                scaled_cols_[i].push_back(std::move(col));
            }
        }
        return;
    }

    ZqMatrix k = kernel_basis(a);
    size_t d = k.cols();
    uint64_t combos = 1;
    for (size_t j = 0; j < d; j++) {
        combos *= q.value();
        if (combos > 1000000) {
            throw ScaleExceeded("enumeration needs q^(m - rank) <= 10^6");
        }
    }
    std::vector<uint32_t> coef(d, 0);
    std::vector<Elem> z(a.cols());
    bool has_nonzero = false;
    for (uint64_t code = 0; code < combos; code++) {
        std::fill(z.begin(), z.end(), 0);
        for (size_t j = 0; j < d; j++) {
            if (coef[j] == 0) {
                continue;
            }
            for (size_t i = 0; i < a.cols(); i++) {
                z[i] = q.add(z[i], q.mul(coef[j], k(i, j)));
            }
        }
        IntVector lifted(a.cols());
        bool inside = true;
        for (size_t i = 0; i < a.cols() && inside; i++) {
            lifted[i] = centered(z[i], q);
            inside = std::llabs(lifted[i]) <= (int64_t)B;
        }
        if (inside) {
            has_nonzero |= code != 0;
            support_.push_back(std::move(lifted));
        }
        for (size_t j = 0; j < d; j++) {
            if (++coef[j] < q.value()) {
                break;
            }
            coef[j] = 0;
        }
    }
    if (!has_nonzero) {
        throw EmptySolutionSet("no nonzero kernel vector in the box");
    }
}

uint64_t SisStateSampler::box_index(const IntVector &z) const {
    uint64_t side = 2 * (uint64_t)B_ + 1, idx = 0, scale = 1;
    for (int64_t v : z) {
        idx += (uint64_t)(v + B_) * scale;
        scale *= side;
    }
    return idx;
}

IntVector SisStateSampler::sample(Rng &rng) const {
    if (method_ == SisMethod::Enumeration) {
        return support_[rng.below(support_.size())];
    }
    const Modulus &q = a_.modulus();
    uint64_t side = 2 * (uint64_t)B_ + 1;
    size_t m = a_.cols(), rows = a_.rows();
    std::vector<uint32_t> digits(m);
    std::vector<Elem> acc(rows);
    for (uint64_t attempt = 0; attempt < max_proposals_; attempt++) {
        uint64_t idx = rng.below(box_size_);
        std::fill(acc.begin(), acc.end(), 0);
        for (size_t i = 0; i < m; i++) {
            digits[i] = (uint32_t)(idx % side);
            idx /= side;
            const auto &col = scaled_cols_[i][digits[i]];
            for (size_t r = 0; r < rows; r++) {
                acc[r] = q.add(acc[r], col[r]);
            }
        }
        if (std::all_of(acc.begin(), acc.end(), [](Elem e) { return e == 0; })) {
            IntVector z(m);
            for (size_t i = 0; i < m; i++) {
                z[i] = (int64_t)digits[i] - B_;
            }
            return z;
        }
    }
    throw Timeout("rejection sampler exceeded its proposal budget");
}

IntVector sis_state_sample(const ZqMatrix &a, uint32_t B, Rng &rng, SisMethod method) {
    if (!a.modulus().is_prime()) {
        throw CompositeModulus("the SIS state sampler needs a prime modulus");
    }
    return SisStateSampler(a, B, method).sample(rng);
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
    if (cols != o.rows) {
        throw BadShape("integer matrix size mismatch");
    }
    IntMatrix out{rows, o.cols, std::vector<int64_t>(rows * o.cols, 0)};
    for (size_t r = 0; r < rows; r++) {
        for (size_t k = 0; k < cols; k++) {
            int64_t v = (*this)(r, k);
            if (v == 0) {
                continue;
            }
            for (size_t c = 0; c < o.cols; c++) {
                out.at(r, c) += v * o(k, c);
            }
        }
    }
    return out;
}

SisSubsolver kernel_subsolver() {
    return [](const ZqMatrix &block) -> IntVector {
        const Modulus &p = block.modulus();
        if (p.is_prime()) {
            ZqMatrix k = kernel_basis(block);
            if (k.cols() == 0) {
                throw Error("block has a trivial kernel mod " + std::to_string(p.value()));
            }
            return k.column(0).centered_lift();
        }
        int64_t half = p.value() / 2;
        uint64_t side = 2 * half + 1, total = 1;
        for (size_t i = 0; i < block.cols(); i++) {
            total *= side;
            if (total > 1000000) {
                throw ScaleExceeded("exhaustive block search is too large");
            }
        }
        for (uint64_t code = 1; code < total; code++) {
            IntVector z(block.cols());
            uint64_t c = code;
            for (auto &v : z) {
                v = (int64_t)(c % side) - half;
                c /= side;
            }
            if (block.apply(z) == ZqVector::zeros(p, block.rows()) &&
                std::any_of(z.begin(), z.end(), [](int64_t v) { return v != 0; })) {
                return z;
            }
        }
        throw Error("no short kernel vector mod " + std::to_string(p.value()));
    };
}

SisSubsolver quantum_subsolver(uint32_t B, uint64_t seed) {
    auto counter = std::make_shared<uint64_t>(0);
    return [B, seed, counter](const ZqMatrix &block) -> IntVector {
        SisStateSampler sampler(block, B, SisMethod::Enumeration);
        Rng rng(seed, (*counter)++, StreamRole::Measurement);
        while (true) {
            IntVector z = sampler.sample(rng);
            if (std::any_of(z.begin(), z.end(), [](int64_t v) { return v != 0; })) {
                return z;
            }
        }
    };
}

CompositeSisResult sis_solve_general(const ZqMatrix &a, const std::vector<SisLevel> &levels) {
    uint64_t q = a.modulus().value();
    uint64_t prod_p = 1, prod_m = 1;
    for (const auto &l : levels) {
        if (l.p < 2 || l.block_cols < 1) {
            throw BadParameter("every factor must be >= 2 and every block nonempty");
        }
        prod_p *= l.p;
        prod_m *= l.block_cols;
    }
    if (levels.empty() || prod_p != q) {
        throw BadParameter("factors must multiply to q");
    }
    if (prod_m != a.cols()) {
        throw BadShape("column count must equal the product of block sizes");
    }

    size_t rows = a.rows();
    // Current matrix as integers in [0, Q).
    std::vector<int64_t> cur(a.rows() * a.cols());
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            cur[r * a.cols() + c] = a(r, c);
        }
    }
    uint64_t Q = q;
    size_t width = a.cols();
    CompositeSisResult out;
    for (const auto &level : levels) {
        Modulus p(level.p);
        size_t blocks = width / level.block_cols;
        IntMatrix y{width, blocks, std::vector<int64_t>(width * blocks, 0)};
        for (size_t b = 0; b < blocks; b++) {
            ZqMatrix block(p, rows, level.block_cols);
            for (size_t r = 0; r < rows; r++) {
                for (size_t c = 0; c < level.block_cols; c++) {
                    block.set(r, c, cur[r * width + b * level.block_cols + c]);
                }
            }
            IntVector z = level.solve(block);
            if (!is_sis_solution({block, level.beta}, z)) {
                throw Error("subsolver returned an invalid block solution mod " + std::to_string(level.p));
            }
            for (size_t c = 0; c < level.block_cols; c++) {
                y.at(b * level.block_cols + c, b) = z[c];
            }
        }
        std::vector<int64_t> next(rows * blocks, 0);
        uint64_t Qn = Q / level.p;
        for (size_t r = 0; r < rows; r++) {
            for (size_t b = 0; b < blocks; b++) {
                int64_t s = 0;
                for (size_t c = 0; c < level.block_cols; c++) {
                    s += cur[r * width + b * level.block_cols + c] * y(b * level.block_cols + c, b);
                }
                if (s % (int64_t)level.p != 0) {
                    throw Error("block product is not divisible by p");
                }
                int64_t v = (s / (int64_t)level.p) % (int64_t)Qn;
                next[r * blocks + b] = v < 0 ? v + (int64_t)Qn : v;
            }
        }
        cur = std::move(next);
        width = blocks;
        Q = Qn;
        out.levels.push_back(std::move(y));
    }
    IntMatrix w = out.levels[0];
    for (size_t i = 1; i < out.levels.size(); i++) {
        w = w * out.levels[i];
    }
    out.x.assign(w.data.begin(), w.data.end());
    return out;
}

CompositeSisResult sis_solve_composite(const ZqMatrix &a, const std::vector<uint32_t> &factors) {
    size_t n = a.rows() + 1;
    uint64_t m = 1;
    for (size_t i = 0; i < factors.size(); i++) {
        m *= n;
    }
    if (m != a.cols()) {
        throw BadShape("composite SIS needs m = n^k with n = rows + 1");
    }
    std::vector<SisLevel> levels;
    for (uint32_t p : factors) {
        levels.push_back({p, n, p / 2, kernel_subsolver()});
    }
    return sis_solve_general(a, levels);
}

}  // namespace latticefilter
