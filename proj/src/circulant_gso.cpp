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

#include "latticefilter/circulant_gso.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace latticefilter {

ShiftColumnSet::ShiftColumnSet(Amplitude f, Elem y, size_t k) : f_(std::move(f)), y_(y) {
    uint32_t q = f_.q();
    if (k < 1 || k > q) {
        throw BadParameter("shift column count must be in [1, q]");
    }
    if (y >= q) {
        throw BadParameter("base shift out of range");
    }
    columns_ = Eigen::MatrixXcd::Zero(q, (Eigen::Index)k);
    for (size_t j = 0; j < k; j++) {
        uint64_t v = (y + j) % q;
        for (uint32_t e = 0; e < q; e++) {
            columns_((Eigen::Index)((v + e) % q), (Eigen::Index)j) = f_[e];
        }
    }
}

ShiftColumnSet build_shift_columns(const Amplitude &f, Elem y, size_t k) {
    return ShiftColumnSet(f, y, k);
}

Eigen::VectorXcd GsoResult::normalized(size_t j) const {
    if (norms[j] == 0) {
        return Eigen::VectorXcd::Zero(orthogonal_vectors.rows());
    }
    return orthogonal_vectors.col((Eigen::Index)j) / norms[j];
}

GsoResult gso(const Eigen::MatrixXcd &columns, double tol) {
    if (!(tol > 0)) {
        throw BadParameter("gso tolerance must be positive");
    }
    Eigen::Index rows = columns.rows();
    Eigen::Index k = columns.cols();
    GsoResult out;
    out.orthogonal_vectors = Eigen::MatrixXcd::Zero(rows, k);
    out.norms.assign((size_t)k, 0.0);
    out.residual_norms.assign((size_t)k, 0.0);
    out.effective_rank = 0;

    std::vector<Eigen::VectorXcd> basis;
    double scale = 0;
    for (Eigen::Index j = 0; j < k; j++) {
        Eigen::VectorXcd v = columns.col(j);
        scale = std::max(scale, v.norm());
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &u : basis) {
                v -= u.dot(v) * u;
            }
        }
        double r = v.norm();
        out.residual_norms[(size_t)j] = r;
        if (r < tol * scale) {
            continue;
        }
        out.orthogonal_vectors.col(j) = v;
        out.norms[(size_t)j] = r;
        basis.push_back(v / r);
        out.effective_rank++;
    }
    return out;
}

GsoResult gso(const ShiftColumnSet &cols, double tol) {
    return gso(cols.columns(), tol);
}

std::vector<Complex> circulant_eigenvalues(const Amplitude &f) {
    Amplitude g = dft(f);
    double s = std::sqrt((double)f.q());
    std::vector<Complex> out(f.q());
    for (Elem i = 0; i < f.q(); i++) {
        out[i] = g[i] * s;
    }
    return out;
}

double gso_last_norm_bound(std::span<const Complex> eigenvalues, size_t k, size_t n) {
    if (k < 1 || k > n || eigenvalues.size() < k) {
        throw BadParameter("need 1 <= k <= n and at least k eigenvalues");
    }
    double largest = 0;
    for (const auto &l : eigenvalues) {
        largest = std::max(largest, std::abs(l));
    }
    double smallest = INFINITY;
    for (size_t i = 0; i < k; i++) {
        double a = std::abs(eigenvalues[i]);
        if (a <= kRankTolerance * largest) {
            throw BadParameter("eigenvalue " + std::to_string(i) + " is claimed nonzero but is below tolerance");
        }
        smallest = std::min(smallest, a);
    }
    double rn = std::sqrt((double)n);
    if (k == n) {
        return smallest / rn;
    }
    return rn / ((double)k * std::ldexp(1.0, (int)(n - k))) * smallest;
}

namespace {

/// Inverse by Gauss-Jordan with partial pivoting; SingularGram past the cap.
Eigen::MatrixXcd invert_gram(const Eigen::MatrixXcd &g) {
    Eigen::Index k = g.rows();
    Eigen::MatrixXcd a = g;
    Eigen::MatrixXcd inv = Eigen::MatrixXcd::Identity(k, k);
    double g_norm1 = g.cwiseAbs().colwise().sum().maxCoeff();
    for (Eigen::Index c = 0; c < k; c++) {
        Eigen::Index p = c;
        for (Eigen::Index r = c + 1; r < k; r++) {
            if (std::abs(a(r, c)) > std::abs(a(p, c))) {
                p = r;
            }
        }
        if (std::abs(a(p, c)) == 0) {
            throw SingularGram("Gram matrix is singular");
        }
        a.row(c).swap(a.row(p));
        inv.row(c).swap(inv.row(p));
        Complex piv = a(c, c);
        a.row(c) /= piv;
        inv.row(c) /= piv;
        for (Eigen::Index r = 0; r < k; r++) {
            if (r != c) {
                Complex factor = a(r, c);
                a.row(r) -= factor * a.row(c);
                inv.row(r) -= factor * inv.row(c);
            }
        }
    }
    double inv_norm1 = inv.cwiseAbs().colwise().sum().maxCoeff();
    if (!std::isfinite(inv_norm1) || g_norm1 * inv_norm1 > kGramConditionCap) {
        throw SingularGram("Gram matrix condition number exceeds 1e12");
    }
    return inv;
}

}  // namespace

double dual_last_column_norm(const ShiftColumnSet &cols) {
    const auto &b = cols.columns();
    Eigen::MatrixXcd inv = invert_gram(b.adjoint() * b);
    Eigen::VectorXcd d = b * inv.col(inv.cols() - 1);
    return d.norm();
}

std::vector<Complex> vandermonde_inverse_last_column(std::span<const Complex> nodes) {
    size_t k = nodes.size();
    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            if (std::abs(nodes[i] - nodes[j]) <= 1e-12) {
                throw DuplicateNodes("Vandermonde nodes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
        }
    }
    std::vector<Complex> out(k);
    double sign = (k - 1) % 2 ? -1.0 : 1.0;
    for (size_t j = 0; j < k; j++) {
        Complex prod = 1.0;
        for (size_t l = 0; l < k; l++) {
            if (l != j) {
                prod *= nodes[l] - nodes[j];
            }
        }
        out[j] = sign / prod;
    }
    return out;
}

std::pair<double, double> sine_product_check(unsigned n) {
    if (n < 2) {
        throw BadParameter("sine product needs n >= 2");
    }
    double lhs = 1;
    for (unsigned l = 1; l < n; l++) {
        lhs *= std::sin(l * std::numbers::pi / n);
    }
    return {lhs, n / std::ldexp(1.0, (int)n - 1)};
}

BoundCheck check_gso_lower_bound(const Amplitude &f) {
    size_t q = f.q();
    std::vector<Complex> lambda = circulant_eigenvalues(f);
    double largest = 0;
    for (const auto &l : lambda) {
        largest = std::max(largest, std::abs(l));
    }
    std::vector<bool> nonzero(q);
    size_t count = 0;
    for (size_t i = 0; i < q; i++) {
        nonzero[i] = std::abs(lambda[i]) > kRankTolerance * largest;
        count += nonzero[i];
    }
    BoundCheck out{false, 0, count, 0, 0, 0, false};

    std::vector<Complex> ordered;
    if (count == q) {
        out.bound_case = 1;
        ordered = lambda;
    } else {
        // Locate a start index s with nonzero[s] and !nonzero[s-1]; the band
        // is contiguous iff exactly one such index exists.
        size_t starts = 0, s = 0;
        for (size_t i = 0; i < q; i++) {
            if (nonzero[i] && !nonzero[(i + q - 1) % q]) {
                starts++;
                s = i;
            }
        }
        if (starts != 1) {
            return out;
        }
        out.bound_case = 2;
        for (size_t t = 0; t < q; t++) {
            ordered.push_back(lambda[(s + t) % q]);
        }
    }
    out.applicable = true;
    out.eigen_min = INFINITY;
    for (size_t i = 0; i < count; i++) {
        out.eigen_min = std::min(out.eigen_min, std::abs(ordered[i]));
    }
    out.bound = gso_last_norm_bound(ordered, count, q);
    GsoResult g = gso(build_shift_columns(f, 0, count));
    out.actual = g.residual_norms[count - 1];
    out.satisfied = out.actual >= out.bound;
    return out;
}

Figure2Rows figure2_rows(const std::string &family, const Amplitude &f) {
    Figure2Rows rows;
    rows.family = family;
    Amplitude g = dft(f);
    GsoResult r = gso(build_shift_columns(f, 0, f.q()));
    for (Elem i = 0; i < f.q(); i++) {
        rows.abs_f.push_back(std::abs(f[i]));
        rows.abs_fhat.push_back(std::abs(g[i]));
        rows.gso_norm.push_back(r.residual_norms[i]);
    }
    return rows;
}

void write_figure2_csv(std::ostream &out, const std::vector<Figure2Rows> &panels) {
    out << "family,i,abs_f,abs_fhat,gso_norm\n";
    for (const auto &p : panels) {
        for (size_t i = 0; i < p.abs_f.size(); i++) {
            out << p.family << ',' << i << ',' << format_double(p.abs_f[i]) << ',' << format_double(p.abs_fhat[i])
                << ',' << format_double(p.gso_norm[i]) << '\n';
        }
    }
}

}  // namespace latticefilter
