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

#include "matmom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "matmom/kernels.hpp"

namespace matmom {

namespace {

using Factor = std::vector<CMatrix>;

// A_k of u + shift·I, with A_{-k} = A_kᴴ.
CMatrix shifted_coeff(const LaurentPoly &u, int k, double shift) {
    if (std::abs(k) > u.band()) {
        return CMatrix::Zero(u.size(), u.size());
    }
    CMatrix a = u.coeff(k);
    if (k == 0 && shift != 0.0) {
        a.diagonal().array() += shift;
    }
    return a;
}

// Φ(P)_k = Σ_j B_{j+k} B_jᴴ for k = 0..deg P.
Factor product_coeffs(const Factor &p) {
    const int d = static_cast<int>(p.size()) - 1;
    const auto n = p.front().rows();
    Factor out(p.size(), CMatrix::Zero(n, n));
    for (int k = 0; k <= d; ++k) {
        for (int j = 0; j + k <= d; ++j) {
            out[static_cast<std::size_t>(k)].noalias() +=
                p[static_cast<std::size_t>(j + k)] * p[static_cast<std::size_t>(j)].adjoint();
        }
    }
    return out;
}

double residual_against(const LaurentPoly &u, const Factor &p, double shift) {
    const Factor prod = product_coeffs(p);
    const int top = std::max(u.band(), static_cast<int>(p.size()) - 1);
    double r = 0.0;
    for (int k = 0; k <= top; ++k) {
        CMatrix diff = shifted_coeff(u, k, shift);
        if (k < static_cast<int>(prod.size())) {
            diff -= prod[static_cast<std::size_t>(k)];
        }
        r = std::max(r, max_abs(diff));
    }
    return r;
}

double factor_distance(const Factor &a, const Factor &b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        d = std::max(d, max_abs(a[k] - b[k]));
    }
    return d;
}

// Real-coordinate index of entry (r, c) of coefficient k, real or imaginary part.
Eigen::Index coord(int k, Eigen::Index r, Eigen::Index c, int part, Eigen::Index n) {
    return ((static_cast<Eigen::Index>(k) * n + c) * n + r) * 2 + part;
}

// Jacobian of P ↦ (Φ(P)_k)_{k=0..d} at P in real coordinates.
Matrix newton_jacobian(const Factor &p) {
    const int d = static_cast<int>(p.size()) - 1;
    const Eigen::Index n = p.front().rows();
    const Eigen::Index dim = 2 * (d + 1) * n * n;
    Matrix jac = Matrix::Zero(dim, dim);
    const Complex parts[2] = {Complex(1.0, 0.0), Complex(0.0, 1.0)};
    for (int k0 = 0; k0 <= d; ++k0) {
        for (Eigen::Index c = 0; c < n; ++c) {
            for (Eigen::Index r = 0; r < n; ++r) {
                for (int part = 0; part < 2; ++part) {
                    const Complex alpha = parts[part];
                    const Eigen::Index col = coord(k0, r, c, part, n);
                    // Δ_{k0} = α E_rc contributes α E_rc B_{k0-k}ᴴ (k <= k0)
                    // and conj(α) B_{k0+k} E_cr (k0 + k <= d) to Φ_k.
                    for (int k = 0; k <= d; ++k) {
                        CMatrix delta = CMatrix::Zero(n, n);
                        bool touched = false;
                        if (k <= k0) {
                            delta.row(r) += alpha * p[static_cast<std::size_t>(k0 - k)].adjoint().row(c);
                            touched = true;
                        }
                        if (k0 + k <= d) {
                            delta.col(r) += std::conj(alpha) * p[static_cast<std::size_t>(k0 + k)].col(c);
                            touched = true;
                        }
                        if (!touched) {
                            continue;
                        }
                        for (Eigen::Index cc = 0; cc < n; ++cc) {
                            for (Eigen::Index rr = 0; rr < n; ++rr) {
                                jac(coord(k, rr, cc, 0, n), col) = delta(rr, cc).real();
                                jac(coord(k, rr, cc, 1, n), col) = delta(rr, cc).imag();
                            }
                        }
                    }
                }
            }
        }
    }
    return jac;
}

Vector to_real(const Factor &f) {
    const Eigen::Index n = f.front().rows();
    Vector v(2 * static_cast<Eigen::Index>(f.size()) * n * n);
    for (std::size_t k = 0; k < f.size(); ++k) {
        for (Eigen::Index c = 0; c < n; ++c) {
            for (Eigen::Index r = 0; r < n; ++r) {
                v(coord(static_cast<int>(k), r, c, 0, n)) = f[k](r, c).real();
                v(coord(static_cast<int>(k), r, c, 1, n)) = f[k](r, c).imag();
            }
        }
    }
    return v;
}

Factor from_real(const Vector &v, int d, Eigen::Index n) {
    Factor f(static_cast<std::size_t>(d) + 1, CMatrix::Zero(n, n));
    for (int k = 0; k <= d; ++k) {
        for (Eigen::Index c = 0; c < n; ++c) {
            for (Eigen::Index r = 0; r < n; ++r) {
                f[static_cast<std::size_t>(k)](r, c) =
                    Complex(v(coord(k, r, c, 0, n)), v(coord(k, r, c, 1, n)));
            }
        }
    }
    return f;
}

// Hermitian square root factor of a PSD matrix (eigenvalues clipped at 0).
CMatrix psd_sqrt(const CMatrix &a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (a + a.adjoint()));
    const Vector lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * lam.asDiagonal();
}

} // namespace

double verify_factor(const LaurentPoly &u, std::span<const CMatrix> factor) {
    if (factor.empty()) {
        throw InputError("empty spectral factor");
    }
    for (const CMatrix &b : factor) {
        if (b.rows() != u.size() || b.cols() != u.size()) {
            throw InputError("factor coefficient size does not match the Laurent polynomial");
        }
    }
    return residual_against(u, Factor(factor.begin(), factor.end()), 0.0);
}

BauerEstimate bauer_factor(const LaurentPoly &u, double shift, double tol, int max_order) {
    const int d = u.band();
    const Eigen::Index n = u.size();
    const auto ring = static_cast<std::size_t>(d + 1);
    // rows[i % ring][m] = L_{i, i-m}
    std::vector<Factor> rows(ring, Factor(ring, CMatrix::Zero(n, n)));
    std::vector<CMatrix> lower(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        lower[static_cast<std::size_t>(k)] = shifted_coeff(u, k, shift);
    }
    const double scale = std::max(1.0, max_abs(lower[0]));

    BauerEstimate est;
    Factor previous;
    int checkpoint = std::min(32, max_order);
    const int first_row_needed = d;
    for (int i = 0; i < max_order; ++i) {
        Factor &row = rows[static_cast<std::size_t>(i) % ring];
        const int lo = std::max(0, i - d);
        for (int j = lo; j < i; ++j) {
            const Factor &rj = rows[static_cast<std::size_t>(j) % ring];
            CMatrix s = lower[static_cast<std::size_t>(i - j)];
            for (int l = lo; l < j; ++l) {
                s.noalias() -= row[static_cast<std::size_t>(i - l)] * rj[static_cast<std::size_t>(j - l)].adjoint();
            }
            const CMatrix &ljj = rj[0];
            row[static_cast<std::size_t>(i - j)] =
                ljj.triangularView<Eigen::Lower>().solve(s.adjoint()).adjoint();
        }
        CMatrix diag = lower[0];
        for (int l = lo; l < i; ++l) {
            const CMatrix &b = row[static_cast<std::size_t>(i - l)];
            diag.noalias() -= b * b.adjoint();
        }
        Eigen::LLT<CMatrix> llt(0.5 * (diag + diag.adjoint()));
        if (llt.info() != Eigen::Success) {
            est.breakdown = true;
            est.order = i + 1;
            return est;
        }
        row[0] = llt.matrixL();
        for (std::size_t m = static_cast<std::size_t>(i - lo) + 1; m < ring; ++m) {
            row[m].setZero();
        }

        if (i + 1 == checkpoint || i + 1 == max_order) {
            if (i >= first_row_needed) {
                Factor current(row.begin(), row.end());
                est.coeffs = current;
                est.order = i + 1;
                if (!previous.empty() && factor_distance(current, previous) < tol * scale) {
                    est.converged = true;
                    return est;
                }
                previous = std::move(current);
            }
            checkpoint = std::min(2 * checkpoint, max_order);
        }
    }
    if (est.coeffs.empty()) {
        est.coeffs = rows[static_cast<std::size_t>(max_order - 1) % ring];
        est.order = max_order;
    }
    return est;
}

NewtonResult newton_refine(const LaurentPoly &u, std::vector<CMatrix> start, double shift, double target,
                           int max_iter) {
    const int d = static_cast<int>(start.size()) - 1;
    const Eigen::Index n = start.front().rows();
    NewtonResult best{start, residual_against(u, start, shift), 0};
    Factor p = std::move(start);
    for (int it = 0; it < max_iter && best.residual > target; ++it) {
        const Factor prod = product_coeffs(p);
        Factor rhs(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) {
            rhs[static_cast<std::size_t>(k)] = shifted_coeff(u, k, shift) - prod[static_cast<std::size_t>(k)];
        }
        const Matrix jac = newton_jacobian(p);
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(jac);
        const Vector step = cod.solve(to_real(rhs));
        const Factor delta = from_real(step, d, n);

        bool improved = false;
        double alpha = 1.0;
        for (int halving = 0; halving < 12; ++halving, alpha *= 0.5) {
            Factor trial = p;
            for (std::size_t k = 0; k < trial.size(); ++k) {
                trial[k] += alpha * delta[k];
            }
            const double r = residual_against(u, trial, shift);
            if (r < best.residual) {
                p = std::move(trial);
                best = {p, r, it + 1};
                improved = true;
                break;
            }
        }
        if (!improved) {
            break;
        }
    }
    return best;
}

SpectralFactor fejer_riesz(const LaurentPoly &u, double tol, int max_order) {
    const int d = u.band();
    const double scale = std::max(1.0, max_abs(u.coeff(0)));
    if (u.hermitian_defect() > 1e-12 * scale) {
        throw InputError("Laurent polynomial is not hermitian on the circle (A_{-k} != A_k^H)");
    }
    const auto grid = kernels::circle_min_eigenvalue(u, 4 * (d + 1));
    if (grid.value < -tol * scale) {
        std::ostringstream msg;
        msg << "Laurent polynomial is not PSD on the unit circle: eigenvalue " << grid.value << " at t = "
            << grid.x;
        throw SpectralError(SpectralError::Kind::NotPsdOnCircle, grid.value, msg.str());
    }

    const double target = tol * scale;
    // Polishing aims well below the contract so that callers composing factors
    // (certificates) keep headroom.
    const double polish_goal = std::min(target, 1e-14 * scale);
    constexpr int kNewtonIters = 40;

    if (d == 0) {
        Factor p{psd_sqrt(u.coeff(0))};
        const double r = residual_against(u, p, 0.0);
        return {std::move(p), r, 0.0, 1};
    }

    double best_residual = std::numeric_limits<double>::infinity();
    Factor best_factor;
    int order_used = 0;

    const BauerEstimate direct = bauer_factor(u, 0.0, tol, max_order);
    if (!direct.breakdown && !direct.coeffs.empty()) {
        NewtonResult polished = newton_refine(u, direct.coeffs, 0.0, polish_goal, kNewtonIters);
        order_used = direct.order;
        if (polished.residual <= target) {
            return {std::move(polished.coeffs), polished.residual, 0.0, order_used};
        }
        best_residual = polished.residual;
        best_factor = std::move(polished.coeffs);
    }

    // Singular (or nearly singular) on the circle: continuation in ε on u + εI.
    constexpr double kEpsStart = 1e-2;
    constexpr double kEpsFinal = 1e-8;
    const BauerEstimate seeded = bauer_factor(u, kEpsStart * scale, tol, max_order);
    if (!seeded.breakdown && !seeded.coeffs.empty()) {
        order_used = std::max(order_used, seeded.order);
        Factor p = seeded.coeffs;
        for (double eps = kEpsStart; eps >= kEpsFinal * 0.999; eps *= 1e-2) {
            p = newton_refine(u, std::move(p), eps * scale, 1e-15 * scale, kNewtonIters).coeffs;
        }
        const Factor at_eps = p;
        const Factor at_quarter =
            newton_refine(u, p, 0.25 * kEpsFinal * scale, 1e-15 * scale, kNewtonIters).coeffs;
        // Factors of singular symbols move like sqrt(ε); cancel that term.
        Factor extrapolated(at_eps.size());
        for (std::size_t k = 0; k < at_eps.size(); ++k) {
            extrapolated[k] = 2.0 * at_quarter[k] - at_eps[k];
        }
        const Factor &start = residual_against(u, extrapolated, 0.0) < residual_against(u, at_quarter, 0.0)
                                  ? extrapolated
                                  : at_quarter;
        NewtonResult polished = newton_refine(u, start, 0.0, polish_goal, kNewtonIters);
        if (polished.residual < best_residual) {
            best_residual = polished.residual;
            best_factor = std::move(polished.coeffs);
        }
        if (best_residual <= target) {
            return {std::move(best_factor), best_residual, kEpsFinal * scale, order_used};
        }
    }

    std::ostringstream msg;
    msg << "spectral factorization did not reach residual " << target << " (best " << best_residual << ")";
    throw SpectralError(SpectralError::Kind::NoConvergence, best_residual, msg.str());
}

} // namespace matmom
