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

#include "matmom/polymat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matmom/kernels.hpp"

namespace matmom {

namespace {

void strip_scalar(std::vector<double> &c) {
    while (c.size() > 1 && c.back() == 0.0) {
        c.pop_back();
    }
    if (c.empty()) {
        c.push_back(0.0);
    }
}

} // namespace

// ScalarPoly

ScalarPoly::ScalarPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    strip_scalar(coeffs_);
}

ScalarPoly ScalarPoly::monomial(int k, double c) {
    std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
    v.back() = c;
    return ScalarPoly(std::move(v));
}

double ScalarPoly::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

ScalarPoly operator+(const ScalarPoly &a, const ScalarPoly &b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    }
    return ScalarPoly(std::move(c));
}

ScalarPoly operator-(const ScalarPoly &a, const ScalarPoly &b) { return a + (-1.0) * b; }

ScalarPoly operator*(const ScalarPoly &a, const ScalarPoly &b) {
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return ScalarPoly(std::move(c));
}

ScalarPoly operator*(double s, const ScalarPoly &a) {
    std::vector<double> c = a.coeffs_;
    for (double &v : c) {
        v *= s;
    }
    return ScalarPoly(std::move(c));
}

// MatrixPoly

MatrixPoly::MatrixPoly(int n) : n_(n), symmetric_(true), coeffs_{Matrix::Zero(n, n)} {
    if (n <= 0) {
        throw InputError("matrix polynomial size must be positive");
    }
}

MatrixPoly::MatrixPoly(std::vector<Matrix> coeffs, bool symmetric)
    : n_(0), symmetric_(symmetric), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InputError("matrix polynomial needs at least one coefficient");
    }
    n_ = static_cast<int>(coeffs_.front().rows());
    if (n_ <= 0) {
        throw InputError("matrix polynomial size must be positive");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Matrix &c = coeffs_[k];
        if (c.rows() != n_ || c.cols() != n_) {
            throw InputError("coefficient " + std::to_string(k) + " is not " +
                             std::to_string(n_) + "x" + std::to_string(n_));
        }
        if (symmetric_ && c != c.transpose()) {
            throw InputError("coefficient " + std::to_string(k) +
                             " is not symmetric but the symmetric flag is set");
        }
    }
    while (coeffs_.size() > 1 && max_abs(coeffs_.back()) < kStripThreshold) {
        coeffs_.pop_back();
    }
    if (coeffs_.size() == 1 && max_abs(coeffs_[0]) < kStripThreshold) {
        coeffs_[0].setZero();
    }
}

MatrixPoly MatrixPoly::constant(const Matrix &c) { return MatrixPoly({c}, c == c.transpose()); }

MatrixPoly MatrixPoly::identity(int n) { return constant(Matrix::Identity(n, n)); }

MatrixPoly MatrixPoly::monomial(const Matrix &c, int k) {
    std::vector<Matrix> v(static_cast<std::size_t>(k) + 1, Matrix::Zero(c.rows(), c.cols()));
    v.back() = c;
    return MatrixPoly(std::move(v), c == c.transpose());
}

MatrixPoly MatrixPoly::scaled(const ScalarPoly &s, const Matrix &c) {
    std::vector<Matrix> v;
    v.reserve(s.coeffs().size());
    for (double a : s.coeffs()) {
        v.emplace_back(a * c);
    }
    return MatrixPoly(std::move(v), c == c.transpose());
}

bool MatrixPoly::is_zero() const { return coeffs_.size() == 1 && coeffs_[0].isZero(0.0); }

Matrix MatrixPoly::coeff(int k) const {
    if (k < 0 || k > degree()) {
        return Matrix::Zero(n_, n_);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Matrix MatrixPoly::operator()(double x) const {
    Matrix acc = coeffs_.back();
    for (int k = degree() - 1; k >= 0; --k) {
        acc *= x;
        acc += coeffs_[static_cast<std::size_t>(k)];
    }
    return acc;
}

double MatrixPoly::coeff_norm() const {
    double m = 0.0;
    for (const Matrix &c : coeffs_) {
        m = std::max(m, max_abs(c));
    }
    return m;
}

MatrixPoly MatrixPoly::with_symmetry_detected() const {
    bool sym = std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Matrix &c) { return c == c.transpose(); });
    MatrixPoly out = *this;
    out.symmetric_ = sym;
    return out;
}

MatrixPoly operator+(const MatrixPoly &a, const MatrixPoly &b) {
    if (a.size() != b.size()) {
        throw InputError("size mismatch in polynomial addition");
    }
    const int deg = std::max(a.degree(), b.degree());
    std::vector<Matrix> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        c.emplace_back(a.coeff(k) + b.coeff(k));
    }
    return MatrixPoly(std::move(c), a.is_symmetric() && b.is_symmetric());
}

MatrixPoly operator-(const MatrixPoly &a, const MatrixPoly &b) { return a + (-1.0) * b; }

MatrixPoly operator*(double s, const MatrixPoly &a) {
    std::vector<Matrix> c = a.coeffs();
    for (Matrix &m : c) {
        m *= s;
    }
    return MatrixPoly(std::move(c), a.is_symmetric());
}

MatrixPoly operator*(const ScalarPoly &s, const MatrixPoly &a) {
    const int deg = s.degree() + a.degree();
    std::vector<Matrix> c(static_cast<std::size_t>(deg) + 1, Matrix::Zero(a.size(), a.size()));
    for (int i = 0; i <= s.degree(); ++i) {
        if (s.coeff(i) == 0.0) {
            continue;
        }
        for (int j = 0; j <= a.degree(); ++j) {
            c[static_cast<std::size_t>(i + j)] += s.coeff(i) * a.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return MatrixPoly(std::move(c), a.is_symmetric());
}

MatrixPoly matmul(const MatrixPoly &p, const MatrixPoly &q) {
    if (p.size() != q.size()) {
        throw InputError("size mismatch in matmul: " + std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()));
    }
    const int n = p.size();
    std::vector<Matrix> c(static_cast<std::size_t>(p.degree() + q.degree()) + 1, Matrix::Zero(n, n));
    for (int i = 0; i <= p.degree(); ++i) {
        for (int j = 0; j <= q.degree(); ++j) {
            c[static_cast<std::size_t>(i + j)].noalias() +=
                p.coeffs()[static_cast<std::size_t>(i)] * q.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return MatrixPoly(std::move(c));
}

MatrixPoly transpose_poly(const MatrixPoly &p) {
    std::vector<Matrix> c;
    c.reserve(p.coeffs().size());
    for (const Matrix &m : p.coeffs()) {
        c.emplace_back(m.transpose());
    }
    return MatrixPoly(std::move(c), p.is_symmetric());
}

MatrixPoly hermitian_square(const MatrixPoly &p) {
    std::vector<Matrix> c = matmul(p, transpose_poly(p)).coeffs();
    for (Matrix &m : c) {
        m = (0.5 * (m + m.transpose())).eval();
    }
    return MatrixPoly(std::move(c), true);
}

EvenOddParts even_odd_split(const MatrixPoly &p) {
    std::vector<Matrix> even;
    std::vector<Matrix> odd;
    for (int k = 0; k <= p.degree(); ++k) {
        (k % 2 == 0 ? even : odd).push_back(p.coeffs()[static_cast<std::size_t>(k)]);
    }
    if (odd.empty()) {
        odd.push_back(Matrix::Zero(p.size(), p.size()));
    }
    return {MatrixPoly(std::move(even), p.is_symmetric()), MatrixPoly(std::move(odd), p.is_symmetric())};
}

MatrixPoly compose_scalar(const MatrixPoly &p, const ScalarPoly &q) {
    MatrixPoly acc = MatrixPoly::constant(p.leading());
    for (int k = p.degree() - 1; k >= 0; --k) {
        acc = q * acc + MatrixPoly::constant(p.coeffs()[static_cast<std::size_t>(k)]);
    }
    return p.is_symmetric() ? acc.with_symmetry_detected() : acc;
}

double sup_norm_on(const MatrixPoly &p, double a, double b, int grid) {
    if (!(a <= b) || grid < 2) {
        throw InputError("sup_norm_on needs a <= b and grid >= 2");
    }
    const std::vector<double> xs = kernels::uniform_grid(a, b, grid);
    return kernels::max_spectral_norm(p, xs).value;
}

double coeff_distance(const MatrixPoly &p, const MatrixPoly &q) {
    if (p.size() != q.size()) {
        throw InputError("size mismatch in coefficient comparison");
    }
    double d = 0.0;
    for (int k = 0; k <= std::max(p.degree(), q.degree()); ++k) {
        d = std::max(d, max_abs(p.coeff(k) - q.coeff(k)));
    }
    return d;
}

// LaurentPoly

LaurentPoly::LaurentPoly(int n, int band)
    : n_(n), band_(band), coeffs_(static_cast<std::size_t>(2 * band + 1), CMatrix::Zero(n, n)) {
    if (n <= 0 || band < 0) {
        throw InputError("Laurent polynomial needs n > 0 and band >= 0");
    }
}

LaurentPoly::LaurentPoly(int n, int band, std::vector<CMatrix> coeffs)
    : n_(n), band_(band), coeffs_(std::move(coeffs)) {
    if (n <= 0 || band < 0) {
        throw InputError("Laurent polynomial needs n > 0 and band >= 0");
    }
    if (coeffs_.size() != static_cast<std::size_t>(2 * band + 1)) {
        throw InputError("Laurent polynomial expects 2*band+1 coefficients");
    }
    for (const CMatrix &c : coeffs_) {
        if (c.rows() != n || c.cols() != n) {
            throw InputError("Laurent coefficient is not " + std::to_string(n) + "x" + std::to_string(n));
        }
    }
}

const CMatrix &LaurentPoly::coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k + band_)); }

CMatrix &LaurentPoly::coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k + band_)); }

CMatrix LaurentPoly::operator()(Complex z) const {
    CMatrix acc = CMatrix::Zero(n_, n_);
    Complex zk = std::pow(z, -band_);
    for (int k = -band_; k <= band_; ++k) {
        acc += zk * coeff(k);
        zk *= z;
    }
    return acc;
}

double LaurentPoly::hermitian_defect() const {
    double d = 0.0;
    for (int k = 0; k <= band_; ++k) {
        d = std::max(d, max_abs(coeff(-k) - coeff(k).adjoint()));
    }
    return d;
}

LaurentPoly laurent_from_factor(std::span<const CMatrix> factor) {
    if (factor.empty()) {
        throw InputError("empty spectral factor");
    }
    const int n = static_cast<int>(factor.front().rows());
    const int d = static_cast<int>(factor.size()) - 1;
    LaurentPoly u(n, d);
    for (int k = 0; k <= d; ++k) {
        CMatrix a = CMatrix::Zero(n, n);
        for (int j = 0; j + k <= d; ++j) {
            a.noalias() += factor[static_cast<std::size_t>(j + k)] * factor[static_cast<std::size_t>(j)].adjoint();
        }
        u.coeff(k) = a;
        u.coeff(-k) = a.adjoint();
    }
    return u;
}

} // namespace matmom
