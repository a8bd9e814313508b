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

#include "matmom/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "matmom/kernels.hpp"
#include "matmom/spectral.hpp"

namespace matmom {

namespace {

constexpr double kCrossTermTol = 1e-8;
constexpr double kMaxGridHalfWidth = 1e4;
constexpr int kMaxHalfDegree = 26; // keeps every binomial sum below 2^53

double scale_of(const MatrixPoly &f) { return std::max(1.0, f.coeff_norm()); }

void require_symmetric(const MatrixPoly &f, const char *op) {
    if (!f.is_symmetric() && !f.with_symmetry_detected().is_symmetric()) {
        throw InputError(std::string(op) + ": polynomial coefficients must be symmetric");
    }
}

// Σ_k P_k x^k other(x)^{total-k}
MatrixPoly binomial_transform(const MatrixPoly &p, int total, const ScalarPoly &other) {
    MatrixPoly acc(p.size());
    ScalarPoly x_pow({1.0});
    for (int k = 0; k <= p.degree(); ++k) {
        ScalarPoly o_pow({1.0});
        for (int i = 0; i < total - k; ++i) {
            o_pow = o_pow * other;
        }
        acc = acc + MatrixPoly::scaled(x_pow * o_pow, p.coeffs()[static_cast<std::size_t>(k)]);
        x_pow = x_pow * ScalarPoly({0.0, 1.0});
    }
    return p.is_symmetric() ? acc.with_symmetry_detected() : acc;
}

ScalarPoly power(const ScalarPoly &p, int k) {
    ScalarPoly out({1.0});
    for (int i = 0; i < k; ++i) {
        out = out * p;
    }
    return out;
}

// Coefficients of (1+y)^a (y-1)^b in y, exact in int64 for a+b <= 2·kMaxHalfDegree.
std::vector<std::int64_t> binomial_product(int a, int b) {
    std::vector<std::int64_t> c{1};
    auto mul = [&c](std::int64_t c0, std::int64_t c1) {
        std::vector<std::int64_t> out(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            out[i] += c0 * c[i];
            out[i + 1] += c1 * c[i];
        }
        c = std::move(out);
    };
    for (int i = 0; i < a; ++i) {
        mul(1, 1);
    }
    for (int i = 0; i < b; ++i) {
        mul(-1, 1);
    }
    return c;
}

double grid_half_width(const MatrixPoly &f) {
    const double lead = max_abs(f.leading());
    double rest = 0.0;
    for (int k = 0; k < f.degree(); ++k) {
        rest = std::max(rest, max_abs(f.coeffs()[static_cast<std::size_t>(k)]));
    }
    return std::min(kMaxGridHalfWidth, 1.0 + (lead > 0.0 ? rest / lead : rest));
}

double relative_min_eig(const Matrix &m) {
    const kernels::Spectrum sp = kernels::spectrum(m);
    return sp.min / std::max(1.0, sp.abs_max);
}

CertificateError::Kind not_psd_kind(Domain d) {
    switch (d) {
    case Domain::Line:
        return CertificateError::Kind::NotPsdOnLine;
    case Domain::HalfLine:
        return CertificateError::Kind::NotPsdOnHalfLine;
    case Domain::Interval:
        return CertificateError::Kind::NotPsdOnInterval;
    }
    return CertificateError::Kind::NotPsdOnLine;
}

void require_psd_on(const MatrixPoly &f, Domain d, double tol) {
    const double margin = validation_margin(f, d);
    if (margin < -tol) {
        std::ostringstream msg;
        msg << "polynomial is not PSD on the " << to_string(d) << " (relative eigenvalue " << margin << ")";
        throw CertificateError(not_psd_kind(d), msg.str());
    }
}

void finish(SosCertificate &cert, const MatrixPoly &f, double tol) {
    cert.residual = verify_certificate(f, cert);
    if (cert.residual > tol * scale_of(f)) {
        std::ostringstream msg;
        msg << "certificate residual " << cert.residual << " exceeds " << tol * scale_of(f);
        throw CertificateError(CertificateError::Kind::Consistency, msg.str());
    }
}

// Factors whose hermitian square sits at round-off level relative to F.
constexpr double kNegligibleSquare = 1e-12;

void push_factor(SosCertificate &cert, Generator g, MatrixPoly p, double scale) {
    const double norm = p.coeff_norm();
    if (norm * norm > kNegligibleSquare * scale) {
        cert.sigma[g].push_back(std::move(p));
    }
}

} // namespace

std::string to_string(Domain d) {
    switch (d) {
    case Domain::Line:
        return "line";
    case Domain::HalfLine:
        return "halfline";
    case Domain::Interval:
        return "interval";
    }
    return "";
}

Domain parse_domain(const std::string &name) {
    if (name == "line") {
        return Domain::Line;
    }
    if (name == "halfline") {
        return Domain::HalfLine;
    }
    if (name == "interval") {
        return Domain::Interval;
    }
    throw InputError("domain: expected line|halfline|interval, got '" + name + "'");
}

std::string to_string(Generator g) {
    switch (g) {
    case Generator::One:
        return "1";
    case Generator::X:
        return "x";
    case Generator::OneMinusX:
        return "1-x";
    case Generator::XOneMinusX:
        return "x(1-x)";
    }
    return "";
}

Generator parse_generator(const std::string &key) {
    for (Generator g : kAllGenerators) {
        if (to_string(g) == key) {
            return g;
        }
    }
    throw InputError("sigma: unknown generator key '" + key + "'");
}

ScalarPoly generator_poly(Generator g) {
    switch (g) {
    case Generator::One:
        return ScalarPoly({1.0});
    case Generator::X:
        return ScalarPoly({0.0, 1.0});
    case Generator::OneMinusX:
        return ScalarPoly({1.0, -1.0});
    case Generator::XOneMinusX:
        return ScalarPoly({0.0, 1.0, -1.0});
    }
    return ScalarPoly({1.0});
}

MatrixPoly SosCertificate::sigma_sum(Generator g, int n) const {
    MatrixPoly acc(n);
    if (auto it = sigma.find(g); it != sigma.end()) {
        for (const MatrixPoly &p : it->second) {
            acc = acc + hermitian_square(p);
        }
    }
    return acc;
}

std::size_t SosCertificate::factor_count(Generator g) const {
    auto it = sigma.find(g);
    return it == sigma.end() ? 0 : it->second.size();
}

double verify_certificate(const MatrixPoly &f, const SosCertificate &cert) {
    MatrixPoly total(f.size());
    for (const auto &[g, factors] : cert.sigma) {
        for (const MatrixPoly &p : factors) {
            if (p.size() != f.size()) {
                throw InputError("verify_certificate: factor size " + std::to_string(p.size()) +
                                 " does not match polynomial size " + std::to_string(f.size()));
            }
        }
        total = total + generator_poly(g) * cert.sigma_sum(g, f.size());
    }
    return coeff_distance(f, total);
}

LaurentPoly trig_expand(const MatrixPoly &f, int half_degree) {
    const int d = half_degree;
    if (f.degree() > 2 * d) {
        throw InputError("trig_expand: degree exceeds 2*half_degree");
    }
    if (d > kMaxHalfDegree) {
        throw InputError("trig_expand: degree too large for exact expansion");
    }
    const int n = f.size();
    LaurentPoly u(n, d);
    const double inv = std::ldexp(1.0, -2 * d); // 4^{-d}
    // (−i)^k
    const Complex phase[4] = {Complex(1, 0), Complex(0, -1), Complex(-1, 0), Complex(0, 1)};
    for (int k = 0; k <= f.degree(); ++k) {
        const Matrix &c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c.isZero(0.0)) {
            continue;
        }
        const std::vector<std::int64_t> b = binomial_product(2 * d - k, k);
        for (int j = 0; j <= 2 * d; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) {
                continue;
            }
            const Complex w = phase[k % 4] * (static_cast<double>(b[static_cast<std::size_t>(j)]) * inv);
            u.coeff(j - d) += w * c.cast<Complex>();
        }
    }
    return u;
}

double validation_margin(const MatrixPoly &f, Domain domain) {
    const int points = 8 * (f.degree() + 1);
    std::vector<double> xs;
    double margin = std::numeric_limits<double>::infinity();
    switch (domain) {
    case Domain::Line: {
        const double t = grid_half_width(f);
        xs = kernels::chebyshev_grid(-t, t, points);
        margin = relative_min_eig(f.leading());
        break;
    }
    case Domain::HalfLine: {
        const double t = grid_half_width(f);
        xs = kernels::chebyshev_grid(0.0, t, points);
        xs.push_back(0.0);
        margin = relative_min_eig(f.leading());
        break;
    }
    case Domain::Interval:
        xs = kernels::chebyshev_grid(0.0, 1.0, points);
        xs.push_back(0.0);
        xs.push_back(1.0);
        break;
    }
    const auto values = kernels::map_trials(xs.size(), [&](std::size_t i) { return relative_min_eig(f(xs[i])); });
    for (double v : values) {
        margin = std::min(margin, v);
    }
    return margin;
}

SosCertificate decompose_line(const MatrixPoly &f, double tol) {
    require_symmetric(f, "decompose_line");
    if (f.degree() % 2 != 0) {
        throw CertificateError(CertificateError::Kind::OddDegree,
                               "decompose_line: degree " + std::to_string(f.degree()) + " is odd");
    }
    require_psd_on(f, Domain::Line, tol);

    SosCertificate cert;
    cert.variant = Domain::Line;
    if (f.is_zero()) {
        return cert;
    }
    const int n = f.size();
    const int d = f.degree() / 2;
    const LaurentPoly u = trig_expand(f, d);

    SpectralFactor sf;
    try {
        sf = fejer_riesz(u, std::min(tol, kDefaultFactorTol));
    } catch (const SpectralError &e) {
        if (e.kind() == SpectralError::Kind::NotPsdOnCircle) {
            throw CertificateError(CertificateError::Kind::NotPsdOnLine, e.what());
        }
        throw;
    }

    // G(1, x) = Σ_k B_k (1 + ix)^k (1 − ix)^{d−k}
    std::vector<CMatrix> g(static_cast<std::size_t>(d) + 1, CMatrix::Zero(n, n));
    for (int k = 0; k <= d; ++k) {
        std::vector<Complex> poly{Complex(1, 0)};
        auto mul = [&poly](Complex c1) {
            std::vector<Complex> out(poly.size() + 1, Complex(0, 0));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                out[i] += poly[i];
                out[i + 1] += c1 * poly[i];
            }
            poly = std::move(out);
        };
        for (int i = 0; i < k; ++i) {
            mul(Complex(0, 1));
        }
        for (int i = 0; i < d - k; ++i) {
            mul(Complex(0, -1));
        }
        for (int m = 0; m <= d; ++m) {
            g[static_cast<std::size_t>(m)] += poly[static_cast<std::size_t>(m)] * sf.coeffs[static_cast<std::size_t>(k)];
        }
    }
    std::vector<Matrix> h;
    std::vector<Matrix> kk;
    for (const CMatrix &c : g) {
        h.push_back(c.real());
        kk.push_back(c.imag());
    }
    MatrixPoly hp(std::move(h));
    MatrixPoly kp(std::move(kk));

    const MatrixPoly cross = matmul(kp, transpose_poly(hp)) - matmul(hp, transpose_poly(kp));
    if (cross.coeff_norm() > kCrossTermTol * scale_of(f)) {
        std::ostringstream msg;
        msg << "decompose_line: imaginary cross term has norm " << cross.coeff_norm();
        throw CertificateError(CertificateError::Kind::Consistency, msg.str());
    }

    push_factor(cert, Generator::One, std::move(hp), scale_of(f));
    push_factor(cert, Generator::One, std::move(kp), scale_of(f));
    finish(cert, f, tol);
    return cert;
}

SosCertificate decompose_halfline(const MatrixPoly &f, double tol) {
    require_symmetric(f, "decompose_halfline");
    require_psd_on(f, Domain::HalfLine, tol);
    SosCertificate cert;
    cert.variant = Domain::HalfLine;
    if (f.is_zero()) {
        return cert;
    }
    const MatrixPoly squared = compose_scalar(f, ScalarPoly({0.0, 0.0, 1.0}));
    SosCertificate line;
    try {
        line = decompose_line(squared, tol);
    } catch (const CertificateError &e) {
        if (e.kind() == CertificateError::Kind::NotPsdOnLine) {
            throw CertificateError(CertificateError::Kind::NotPsdOnHalfLine, e.what());
        }
        throw;
    }
    for (const MatrixPoly &p : line.sigma[Generator::One]) {
        EvenOddParts parts = even_odd_split(p);
        push_factor(cert, Generator::One, std::move(parts.even), scale_of(f));
        push_factor(cert, Generator::X, std::move(parts.odd), scale_of(f));
    }
    finish(cert, f, tol);
    return cert;
}

SosCertificate decompose_interval(const MatrixPoly &f, double tol) {
    require_symmetric(f, "decompose_interval");
    require_psd_on(f, Domain::Interval, tol);
    SosCertificate cert;
    cert.variant = Domain::Interval;
    if (f.is_zero()) {
        return cert;
    }
    const int m = f.degree();
    const ScalarPoly one_plus({1.0, 1.0});
    const ScalarPoly one_minus({1.0, -1.0});
    const MatrixPoly moved = binomial_transform(f, m, one_plus);

    SosCertificate half;
    try {
        half = decompose_halfline(moved, tol);
    } catch (const CertificateError &e) {
        if (e.kind() == CertificateError::Kind::NotPsdOnHalfLine) {
            throw CertificateError(CertificateError::Kind::NotPsdOnInterval, e.what());
        }
        throw;
    }

    // (1−x)^m · R(x/(1−x)) Rᵀ(x/(1−x)) = R̃ R̃ᵀ (1−x)^{m − 2 deg R}
    auto pull_back = [&](const MatrixPoly &p, int leftover, Generator even_gen, Generator odd_gen) {
        if (leftover < 0) {
            throw CertificateError(CertificateError::Kind::Consistency,
                                   "decompose_interval: factor degree exceeds the cleared power");
        }
        MatrixPoly tilde = binomial_transform(p, p.degree(), one_minus);
        const MatrixPoly scaled = power(one_minus, leftover / 2) * tilde;
        push_factor(cert, leftover % 2 == 0 ? even_gen : odd_gen, scaled, scale_of(f));
    };
    for (const MatrixPoly &r : half.sigma[Generator::One]) {
        pull_back(r, m - 2 * r.degree(), Generator::One, Generator::OneMinusX);
    }
    for (const MatrixPoly &q : half.sigma[Generator::X]) {
        pull_back(q, m - 2 * q.degree() - 1, Generator::X, Generator::XOneMinusX);
    }
    finish(cert, f, tol);
    return cert;
}

SosCertificate decompose(const MatrixPoly &f, Domain domain, double tol) {
    switch (domain) {
    case Domain::Line:
        return decompose_line(f, tol);
    case Domain::HalfLine:
        return decompose_halfline(f, tol);
    case Domain::Interval:
        return decompose_interval(f, tol);
    }
    return {};
}

ScalarizedSet scalarize(const MatrixPoly &g) {
    require_symmetric(g, "scalarize");
    const int n = g.size();
    // Faddeev–LeVerrier over ℝ[x]: det(tI − G) = Σ_k c_k t^{n−k}, e_k = (−1)^k c_k.
    ScalarizedSet out{{}, g};
    MatrixPoly m(n);
    ScalarPoly c({1.0});
    const Matrix id = Matrix::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        m = matmul(g, m) + MatrixPoly::scaled(c, id);
        const MatrixPoly gm = matmul(g, m);
        std::vector<double> tr(static_cast<std::size_t>(gm.degree()) + 1);
        for (int i = 0; i <= gm.degree(); ++i) {
            tr[static_cast<std::size_t>(i)] = gm.coeffs()[static_cast<std::size_t>(i)].trace();
        }
        c = (-1.0 / k) * ScalarPoly(std::move(tr));
        out.polys.push_back(k % 2 == 0 ? c : (-1.0) * c);
    }
    return out;
}

std::vector<double> scalarize_mismatches(const ScalarizedSet &set, std::span<const double> xs, double threshold) {
    const int n = set.source.size();
    const auto flags = kernels::map_trials(xs.size(), [&](std::size_t i) {
        const double x = xs[i];
        const kernels::Spectrum sp = kernels::spectrum(set.source(x));
        const double norm = std::max(1.0, sp.abs_max);
        const bool matrix_ok = sp.min >= -threshold * norm;
        bool scalar_ok = true;
        double binom = 1.0;
        for (int j = 1; j <= n; ++j) {
            binom = binom * (n - j + 1) / j;
            const double value = set.polys[static_cast<std::size_t>(j - 1)](x);
            if (value < -threshold * binom * std::pow(norm, j)) {
                scalar_ok = false;
            }
        }
        return matrix_ok != scalar_ok;
    });
    std::vector<double> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (flags[i]) {
            out.push_back(xs[i]);
        }
    }
    return out;
}

} // namespace matmom
