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

#include "matmom/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace matmom {

namespace {

// Cluster sorted values closer than tol; each cluster becomes its mean.
std::vector<double> merge_close(std::vector<double> xs, double tol) {
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= xs.size(); ++i) {
        if (i == xs.size() || xs[i] - xs[i - 1] > tol) {
            double sum = 0.0;
            for (std::size_t k = start; k < i; ++k) {
                sum += xs[k];
            }
            out.push_back(sum / static_cast<double>(i - start));
            start = i;
        }
    }
    return out;
}

} // namespace

RecoveryResult recover(const MomentSequence &s, double tol) {
    const int d = s.max_degree();
    if (d < 2) {
        throw InputError("recover: needs D >= 2, got D = " + std::to_string(d));
    }
    const PsdReport ham = check_hamburger(s);
    if (!ham.pass) {
        std::ostringstream msg;
        msg << "recover: block Hankel not PSD (order " << ham.failing_order.value_or(-1) << ", eigenvalue "
            << ham.min_eigenvalue << ")";
        throw RecoveryError(RecoveryError::Kind::HankelNotPsd, msg.str());
    }
    const int n = s.size();
    const int m = d / 2;

    const Matrix h0 = block_hankel(s, m - 1, 0);
    const Matrix h1 = block_hankel(s, m - 1, 1);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h0);
    const Vector &lam = es.eigenvalues();
    const double lam_max = lam(lam.size() - 1);

    RecoveryResult result;
    result.measure = AtomicMatrixMeasure(n);
    if (lam_max <= 0.0) {
        // zero sequence: empty measure
        for (int p = 0; p <= d; ++p) {
            result.moment_residual = std::max(result.moment_residual, max_abs(s[p]));
        }
        return result;
    }

    int rank = 0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const double rel = lam(i) / lam_max;
        if (rel >= tol / 10.0 && rel <= 10.0 * tol) {
            std::ostringstream msg;
            msg << "recover: eigenvalue ratio " << rel << " of H0 sits at the rank cut " << tol;
            throw RecoveryError(RecoveryError::Kind::RankDeficiencyAmbiguous, msg.str());
        }
        if (rel > tol) {
            ++rank;
        }
    }
    result.rank_used = rank;

    const Matrix u = es.eigenvectors().rightCols(rank);
    const Vector lam_r = lam.tail(rank);
    const Matrix h1c = u.transpose() * h1 * u;

    // Nonsymmetric pencil H0c⁻¹ H1c: only used to detect complex atoms.
    const Matrix pencil = lam_r.cwiseInverse().asDiagonal() * h1c;
    Eigen::EigenSolver<Matrix> general(pencil, false);
    for (Eigen::Index i = 0; i < general.eigenvalues().size(); ++i) {
        const Complex z = general.eigenvalues()(i);
        if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z))) {
            std::ostringstream msg;
            msg << "recover: pencil eigenvalue " << z.real() << " + " << z.imag() << "i is not real";
            throw RecoveryError(RecoveryError::Kind::ComplexAtoms, msg.str());
        }
    }

    // The similar symmetric form Λ^{-1/2} H1c Λ^{-1/2} gives the atoms accurately.
    const Vector inv_sqrt = lam_r.cwiseSqrt().cwiseInverse();
    const Matrix sym = inv_sqrt.asDiagonal() * h1c * inv_sqrt.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Matrix> pes(0.5 * (sym + sym.transpose()), Eigen::EigenvaluesOnly);
    std::vector<double> raw(pes.eigenvalues().data(), pes.eigenvalues().data() + pes.eigenvalues().size());
    const std::vector<double> points = merge_close(std::move(raw), kAtomMergeTol);

    // Σ_j x_j^p W_j = S_p for p = 0..D, entrywise least squares.
    const auto r = static_cast<Eigen::Index>(points.size());
    Matrix vander(d + 1, r);
    for (Eigen::Index j = 0; j < r; ++j) {
        double xp = 1.0;
        for (int p = 0; p <= d; ++p) {
            vander(p, j) = xp;
            xp *= points[static_cast<std::size_t>(j)];
        }
    }
    Matrix rhs(d + 1, n * n);
    for (int p = 0; p <= d; ++p) {
        rhs.row(p) = Eigen::Map<const Eigen::RowVectorXd>(s[p].data(), n * n);
    }
    const Matrix sol = vander.colPivHouseholderQr().solve(rhs);

    std::vector<Atom> atoms;
    double clipped = 0.0;
    for (Eigen::Index j = 0; j < r; ++j) {
        Matrix w = Eigen::Map<const Matrix>(sol.row(j).eval().data(), n, n);
        w = (0.5 * (w + w.transpose())).eval();
        Eigen::SelfAdjointEigenSolver<Matrix> wes(w);
        const Vector ev = wes.eigenvalues();
        clipped += (-ev.array()).max(0.0).sum();
        w = wes.eigenvectors() * ev.cwiseMax(0.0).asDiagonal() * wes.eigenvectors().transpose();
        w = (0.5 * (w + w.transpose())).eval();
        atoms.push_back({points[static_cast<std::size_t>(j)], w});
    }

    double residual = 0.0;
    for (int p = 0; p <= d; ++p) {
        Matrix fit = Matrix::Zero(n, n);
        for (const Atom &a : atoms) {
            fit += std::pow(a.x, p) * a.weight;
        }
        residual = std::max(residual, max_abs(s[p] - fit));
    }
    result.measure = AtomicMatrixMeasure(n, std::move(atoms));
    result.moment_residual = residual + clipped;
    return result;
}

} // namespace matmom
