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
 * Fejér–Riesz spectral factorization of matrix Laurent polynomials that are
 * positive semidefinite on the unit circle.
 *
 * Given u(z) = Σ_{|k|<=d} A_k z^k with A_{-k} = A_kᴴ and u(e^{it}) ⪰ 0, find
 * P(z) = Σ_{k=0}^{d} B_k z^k with
 *
 *     A_k = Σ_j B_{j+k} B_jᴴ,   k = 0, ..., d,
 *
 * i.e. u(e^{it}) = P(e^{it}) P(e^{it})ᴴ.
 *
 * The estimate comes from Bauer's method: the block rows of the Cholesky
 * factor of the banded block Toeplitz matrix [A_{i-j}] converge to
 * (B_d, ..., B_0). The recursion is streamed one block row at a time, so an
 * order-N run costs O(N d² n³) and keeps only the last d+1 rows. The estimate
 * is then polished by Newton steps on the quadratic map P ↦ P·P*, which
 * restores full accuracy when the Toeplitz recursion converges slowly.
 *
 * Inputs that are singular on the circle are first factored with u + εI
 * (a continuation in ε), extrapolated ε → 0, and polished against u.
 */

#pragma once

#include <span>
#include <vector>

#include "polymat.hpp"

namespace matmom {

class SpectralError : public Error {
  public:
    enum class Kind { NotPsdOnCircle, NoConvergence };

    SpectralError(Kind kind, double value, const std::string &what)
        : Error(what), kind_(kind), value_(value) {}

    [[nodiscard]] Kind kind() const { return kind_; }
    /// Grid eigenvalue for NotPsdOnCircle, best residual for NoConvergence.
    [[nodiscard]] double value() const { return value_; }

  private:
    Kind kind_;
    double value_;
};

struct SpectralFactor {
    std::vector<CMatrix> coeffs; ///< B_0, ..., B_d
    double residual = 0.0;       ///< verify_factor(u, coeffs)
    double epsilon_used = 0.0;   ///< regularization shift, 0 when none was needed
    int toeplitz_order = 0;      ///< block rows of the Toeplitz recursion
};

inline constexpr double kDefaultFactorTol = 1e-10;
inline constexpr int kDefaultMaxOrder = 4096;

/**
 * Spectral factor of `u` with residual <= tol·max(1, ‖A_0‖_∞).
 *
 * Throws SpectralError::NotPsdOnCircle when u(e^{it}) has an eigenvalue below
 * −tol·max(1, ‖A_0‖_∞) on the 4·(band+1) point circle grid, and
 * SpectralError::NoConvergence when the residual target is missed.
 */
SpectralFactor fejer_riesz(const LaurentPoly &u, double tol = kDefaultFactorTol,
                           int max_order = kDefaultMaxOrder);

/// max_k ‖A_k − Σ_j B_{j+k} B_jᴴ‖_∞ over k = 0..max(band, deg P).
double verify_factor(const LaurentPoly &u, std::span<const CMatrix> factor);

// Building blocks, exposed for tests and benchmarks.

struct BauerEstimate {
    std::vector<CMatrix> coeffs;
    int order = 0;          ///< number of block rows computed
    bool converged = false; ///< successive checkpoint estimates agreed within tol
    bool breakdown = false; ///< a pivot block was not positive definite
};

/// Bauer recursion on u + shift·I, checkpoints at N = 32, 64, ..., max_order.
BauerEstimate bauer_factor(const LaurentPoly &u, double shift, double tol, int max_order);

struct NewtonResult {
    std::vector<CMatrix> coeffs;
    double residual = 0.0;
    int iterations = 0;
};

/// Damped Newton iteration for P·P* = u + shift·I from `start`.
NewtonResult newton_refine(const LaurentPoly &u, std::vector<CMatrix> start, double shift,
                           double target, int max_iter);

} // namespace matmom
