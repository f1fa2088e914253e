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

#ifndef LATTICEFILTER_CIRCULANT_GSO_HPP
#define LATTICEFILTER_CIRCULANT_GSO_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "latticefilter/amplitudes.hpp"

namespace latticefilter {

constexpr double kRankTolerance = 1e-9;
constexpr double kGramConditionCap = 1e12;

/// Columns psi_y, psi_{y+1}, ..., psi_{y+k-1}, where psi_v[(v+e) mod q] = f(e).
class ShiftColumnSet {
   public:
    ShiftColumnSet(Amplitude f, Elem y, size_t k);

    const Amplitude &amplitude() const {
        return f_;
    }
    Elem base_shift() const {
        return y_;
    }
    size_t k() const {
        return (size_t)columns_.cols();
    }
    const Eigen::MatrixXcd &columns() const {
        return columns_;
    }

   private:
    Amplitude f_;
    Elem y_;
    Eigen::MatrixXcd columns_;
};

/// Throws BadParameter unless 1 <= k <= q.
ShiftColumnSet build_shift_columns(const Amplitude &f, Elem y, size_t k);

struct GsoResult {
    /// Unnormalized GSO vectors; zero columns where the residual was dropped.
    Eigen::MatrixXcd orthogonal_vectors;
    /// Norms of orthogonal_vectors (0 for dropped columns).
    std::vector<double> norms;
    /// Residual norms before the rank cut.
    std::vector<double> residual_norms;
    size_t effective_rank;

    /// Column j divided by its norm. Zero if the column was dropped.
    Eigen::VectorXcd normalized(size_t j) const;
};

/// Gram-Schmidt with one re-orthogonalization pass. A residual below
/// tol times the largest norm seen so far is recorded as 0 and not used
/// as a projector.
GsoResult gso(const Eigen::MatrixXcd &columns, double tol = kRankTolerance);
GsoResult gso(const ShiftColumnSet &cols, double tol = kRankTolerance);

/// Eigenvalues of the full circulant M[r][c] = f(r - c), in the order
/// lambda_i = sqrt(q) * f^(i), so that M = F^{-1} diag(lambda) F with
/// F[i][j] = omega^{ij} / sqrt(q).
std::vector<Complex> circulant_eigenvalues(const Amplitude &f);

/// Lower bound on the k-th GSO norm of an n x n circulant from its
/// eigenvalues, listed nonzero first.
double gso_last_norm_bound(std::span<const Complex> eigenvalues, size_t k, size_t n);

/// Norm of the last column of B (B^H B)^{-1}.
double dual_last_column_norm(const ShiftColumnSet &cols);

/// Last column of the inverse of V[j][l] = c_l^j.
std::vector<Complex> vandermonde_inverse_last_column(std::span<const Complex> nodes);

/// (prod_{l=1}^{n-1} sin(l pi / n), n / 2^{n-1})
std::pair<double, double> sine_product_check(unsigned n);

/// Result of checking the GSO lower bound on the full shift set of f.
struct BoundCheck {
    bool applicable;
    /// 1 when all eigenvalues are nonzero, 2 for a contiguous cyclic band.
    int bound_case;
    size_t k;
    double eigen_min;
    double bound;
    double actual;
    bool satisfied;
};

/// Case 1 when f has full rank. Case 2 when the nonzero eigenvalues form
/// a cyclic band of length k; modulating f by a character moves the band
/// to the front without changing GSO norms, so the bound is compared with
/// the k-th GSO norm of psi_0..psi_{k-1}. Anything else is not applicable.
BoundCheck check_gso_lower_bound(const Amplitude &f);

/// One figure2 family column: per i, |f(i)|, |f^(i)|, GSO residual norm i.
struct Figure2Rows {
    std::string family;
    std::vector<double> abs_f;
    std::vector<double> abs_fhat;
    std::vector<double> gso_norm;
};
Figure2Rows figure2_rows(const std::string &family, const Amplitude &f);
void write_figure2_csv(std::ostream &out, const std::vector<Figure2Rows> &panels);

}  // namespace latticefilter

#endif
