// Copyright 2026 The matmom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Atomic measure extraction from truncated matrix moments via the block
 * Hankel pencil.
 *
 * With H0 = [S_{i+j}] and H1 = [S_{i+j+1}] (i, j < m), an atomic measure
 * Σ_j W_j δ_{x_j} gives H0 = V W Vᵀ and H1 = V diag(x_j W_j) Vᵀ, so the
 * pencil H1 − x H0 restricted to range(H0) has eigenvalues x_j. Weights are
 * then fitted to all moments by Vandermonde least squares and projected onto
 * the PSD cone.
 */

#pragma once

#include "measures.hpp"
#include "moments.hpp"

namespace matmom {

class RecoveryError : public Error {
  public:
    enum class Kind { HankelNotPsd, RankDeficiencyAmbiguous, ComplexAtoms };

    RecoveryError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

struct RecoveryResult {
    AtomicMatrixMeasure measure{1};
    double moment_residual = 0.0; ///< max_p ‖S_p − Σ_j x_j^p W_j‖_∞ plus clipped PSD mass
    int rank_used = 0;
};

inline constexpr double kDefaultRecoveryTol = 1e-8;
/// Pencil eigenvalues closer than this are one atom.
inline constexpr double kAtomMergeTol = 1e-8;

/**
 * Requires D >= 2 and a passing Hamburger check. With m = ⌊D/2⌋ the Hankel
 * blocks have m block rows; the numerical rank of H0 is cut at tol·λ_max(H0).
 *
 * Throws RecoveryError::HankelNotPsd when the Hamburger check fails,
 * RankDeficiencyAmbiguous when an eigenvalue of H0 falls within a decade of
 * the cut (tol/10 <= λ/λ_max <= 10·tol), and ComplexAtoms when the pencil
 * has an eigenvalue with imaginary part above tol·max(1, |λ|).
 */
RecoveryResult recover(const MomentSequence &s, double tol = kDefaultRecoveryTol);

} // namespace matmom
