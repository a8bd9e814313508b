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
 * Sum-of-hermitian-squares certificates for symmetric matrix polynomials that
 * are positive semidefinite on ℝ, [0, ∞) or [0, 1].
 *
 * Line. With deg F = 2d, the form F̃(u, v) = u^{2d} F(v/u) evaluated at
 * (cos t, sin t) is a Laurent polynomial in ζ = e^{2it} of band d. Its
 * spectral factor P gives G(cos t, sin t) = P(e^{2it}) e^{-idt}
 *   = Σ_k B_k (cos t + i sin t)^k (cos t − i sin t)^{d−k},
 * and with H = Re G(1, x), K = Im G(1, x) we get F = HHᵀ + KKᵀ. The imaginary
 * cross term KHᵀ − HKᵀ vanishes because F is real; it is checked.
 *
 * Half-line. G(a) = F(a²) is PSD on ℝ. Splitting each line factor as
 * P(a) = R(a²) + a·Q(a²) and using G(a) = G(−a) gives
 * F = Σ R Rᵀ + x·Σ Q Qᵀ.
 *
 * Interval. With m = deg F, F̂(s) = (1+s)^m F(s/(1+s)) is PSD on [0, ∞).
 * Each half-line term pulled back through s = x/(1−x) and multiplied by
 * (1−x)^m lands on 1, x, 1−x or x(1−x) according to the parity of the
 * leftover power of (1−x).
 */

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "polymat.hpp"

namespace matmom {

enum class Domain { Line, HalfLine, Interval };

/// Cone generators 1, x, 1−x, x(1−x).
enum class Generator { One, X, OneMinusX, XOneMinusX };

inline constexpr std::array<Generator, 4> kAllGenerators = {Generator::One, Generator::X, Generator::OneMinusX,
                                                            Generator::XOneMinusX};

std::string to_string(Domain d);
Domain parse_domain(const std::string &name);
std::string to_string(Generator g);
Generator parse_generator(const std::string &key);
ScalarPoly generator_poly(Generator g);

struct SosCertificate {
    Domain variant = Domain::Line;
    /// σ_g = Σ_i G_i G_iᵀ for the listed factors G_i.
    std::map<Generator, std::vector<MatrixPoly>> sigma;
    double residual = 0.0;

    /// Σ_i G_i G_iᵀ for generator g (zero polynomial of size n if absent).
    [[nodiscard]] MatrixPoly sigma_sum(Generator g, int n) const;
    [[nodiscard]] std::size_t factor_count(Generator g) const;
};

class CertificateError : public Error {
  public:
    enum class Kind { OddDegree, NotPsdOnLine, NotPsdOnHalfLine, NotPsdOnInterval, Consistency };

    CertificateError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

inline constexpr double kDefaultCertTol = 1e-8;

/**
 * F = HHᵀ + KKᵀ for F symmetric of even degree, PSD on ℝ.
 *
 * Throws CertificateError (OddDegree, NotPsdOnLine, Consistency) and lets
 * SpectralError::NoConvergence propagate.
 */
SosCertificate decompose_line(const MatrixPoly &f, double tol = kDefaultCertTol);

/// F = σ_0 + x·σ_1, each σ a sum of at most two hermitian squares.
SosCertificate decompose_halfline(const MatrixPoly &f, double tol = kDefaultCertTol);

/// F = σ_0 + x·σ_1 + (1−x)·σ_2 + x(1−x)·σ_3.
SosCertificate decompose_interval(const MatrixPoly &f, double tol = kDefaultCertTol);

SosCertificate decompose(const MatrixPoly &f, Domain domain, double tol = kDefaultCertTol);

/// Max coefficient mismatch ‖F − Σ_g g·σ_g‖_∞.
double verify_certificate(const MatrixPoly &f, const SosCertificate &cert);

/// Laurent polynomial u with u(e^{2it}) = cos^{2d}(t)·F(tan t); exact integer
/// binomial expansion followed by a single power-of-two scaling.
LaurentPoly trig_expand(const MatrixPoly &f, int half_degree);

/// Smallest λ_min(F(x)) / max(1, ‖F(x)‖) on the validation grid for the domain.
double validation_margin(const MatrixPoly &f, Domain domain);

struct ScalarizedSet {
    std::vector<ScalarPoly> polys; ///< g̃_j = e_j(eigenvalues of G(x)), j = 1..n
    MatrixPoly source;
};

/// Characteristic-polynomial scalarization: G(x) ⪰ 0 iff every g̃_j(x) >= 0.
ScalarizedSet scalarize(const MatrixPoly &g);

/// Grid points where [λ_min(G(x)) >= −thr·‖G(x)‖] and
/// [min_j g̃_j(x) / (C(n,j)·max(1,‖G(x)‖)^j) >= −thr] disagree.
std::vector<double> scalarize_mismatches(const ScalarizedSet &set, std::span<const double> xs,
                                         double threshold = 1e-9);

} // namespace matmom
