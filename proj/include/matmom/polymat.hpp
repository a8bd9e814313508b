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
 * Univariate polynomials with square real matrix coefficients, scalar
 * polynomials, and matrix Laurent polynomials on the unit circle.
 */

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "types.hpp"

namespace matmom {

/// Coefficients with entrywise max-abs below this are stripped from the top.
inline constexpr double kStripThreshold = 1e-14;

/**
 * Real scalar polynomial c_0 + c_1 x + ... + c_d x^d.
 */
class ScalarPoly {
  public:
    ScalarPoly() : coeffs_{0.0} {}
    explicit ScalarPoly(std::vector<double> coeffs);

    static ScalarPoly monomial(int k, double c = 1.0);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    [[nodiscard]] double coeff(int k) const {
        return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : 0.0;
    }
    [[nodiscard]] const std::vector<double> &coeffs() const { return coeffs_; }
    [[nodiscard]] double operator()(double x) const;

    friend ScalarPoly operator+(const ScalarPoly &a, const ScalarPoly &b);
    friend ScalarPoly operator-(const ScalarPoly &a, const ScalarPoly &b);
    friend ScalarPoly operator*(const ScalarPoly &a, const ScalarPoly &b);
    friend ScalarPoly operator*(double s, const ScalarPoly &a);
    friend bool operator==(const ScalarPoly &, const ScalarPoly &) = default;

  private:
    std::vector<double> coeffs_;
};

/**
 * Polynomial C_0 + C_1 x + ... + C_d x^d with n x n real coefficients.
 *
 * Trailing coefficients below kStripThreshold are removed on construction, so
 * degree() is the true degree. The zero polynomial has degree 0 and C_0 = 0.
 * The symmetric flag, when set, is checked exactly.
 */
class MatrixPoly {
  public:
    MatrixPoly() : MatrixPoly(1) {}
    explicit MatrixPoly(int n);
    explicit MatrixPoly(std::vector<Matrix> coeffs, bool symmetric = false);

    static MatrixPoly constant(const Matrix &c);
    static MatrixPoly identity(int n);
    static MatrixPoly monomial(const Matrix &c, int k);
    /// s(x)·C for a scalar polynomial s.
    static MatrixPoly scaled(const ScalarPoly &s, const Matrix &c);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_symmetric() const { return symmetric_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] const std::vector<Matrix> &coeffs() const { return coeffs_; }
    /// C_k, or the zero matrix when k is outside [0, degree()].
    [[nodiscard]] Matrix coeff(int k) const;
    [[nodiscard]] const Matrix &leading() const { return coeffs_.back(); }

    /// Horner evaluation.
    [[nodiscard]] Matrix operator()(double x) const;

    /// Largest entrywise |C_k|.
    [[nodiscard]] double coeff_norm() const;

    /// Copy with the symmetric flag recomputed exactly from the coefficients.
    [[nodiscard]] MatrixPoly with_symmetry_detected() const;

    friend MatrixPoly operator+(const MatrixPoly &a, const MatrixPoly &b);
    friend MatrixPoly operator-(const MatrixPoly &a, const MatrixPoly &b);
    friend MatrixPoly operator*(double s, const MatrixPoly &a);
    friend MatrixPoly operator*(const ScalarPoly &s, const MatrixPoly &a);

  private:
    int n_;
    bool symmetric_ = false;
    std::vector<Matrix> coeffs_;
};

/// Noncommutative coefficient convolution, C_k = Σ_{i+j=k} P_i Q_j.
MatrixPoly matmul(const MatrixPoly &p, const MatrixPoly &q);

/// Coefficient-wise transpose (the adjoint for real coefficients).
MatrixPoly transpose_poly(const MatrixPoly &p);

/// P·Pᵀ with coefficients symmetrized exactly.
MatrixPoly hermitian_square(const MatrixPoly &p);

struct EvenOddParts {
    MatrixPoly even; ///< R with P(a) = R(a²) + a·Q(a²)
    MatrixPoly odd;  ///< Q
};

EvenOddParts even_odd_split(const MatrixPoly &p);

/// P(q(x)) expanded by Horner in the polynomial ring.
MatrixPoly compose_scalar(const MatrixPoly &p, const ScalarPoly &q);

/// Max spectral norm of P(x) over `grid` equispaced points of [a, b].
double sup_norm_on(const MatrixPoly &p, double a, double b, int grid);

/// Max over k of ‖P_k − Q_k‖_∞ (entrywise).
double coeff_distance(const MatrixPoly &p, const MatrixPoly &q);

/**
 * Matrix Laurent polynomial Σ_{k=-band}^{band} A_k z^k with complex n x n
 * coefficients.
 */
class LaurentPoly {
  public:
    LaurentPoly(int n, int band);
    /// `coeffs` holds A_{-band}, ..., A_{band}.
    LaurentPoly(int n, int band, std::vector<CMatrix> coeffs);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int band() const { return band_; }
    [[nodiscard]] const CMatrix &coeff(int k) const;
    CMatrix &coeff(int k);
    [[nodiscard]] const std::vector<CMatrix> &coeffs() const { return coeffs_; }

    [[nodiscard]] CMatrix operator()(Complex z) const;

    /// max_k ‖A_{-k} − A_kᴴ‖_∞.
    [[nodiscard]] double hermitian_defect() const;

  private:
    int n_;
    int band_;
    std::vector<CMatrix> coeffs_;
};

/// u(z) = P(z)·P*(1/z̄) for P(z) = Σ_{k=0}^{d} B_k z^k.
LaurentPoly laurent_from_factor(std::span<const CMatrix> factor);

} // namespace matmom
