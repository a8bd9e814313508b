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

#include "matmom/kernels.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace matmom::kernels {

std::vector<double> uniform_grid(double a, double b, int count) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    if (count == 1) {
        xs[0] = 0.5 * (a + b);
        return xs;
    }
    for (int i = 0; i < count; ++i) {
        xs[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / (count - 1);
    }
    xs.back() = b;
    return xs;
}

std::vector<double> chebyshev_grid(double a, double b, int count) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // ascending: k runs from count-1 down to 0
        const double t = std::cos(std::numbers::pi * (2.0 * (count - 1 - i) + 1.0) / (2.0 * count));
        xs[static_cast<std::size_t>(i)] = 0.5 * (a + b) + 0.5 * (b - a) * t;
    }
    return xs;
}

double min_eigenvalue(const Matrix &m) {
    if (m.rows() == 1) {
        return m(0, 0);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

Spectrum spectrum(const Matrix &m) {
    if (m.size() == 0) {
        return {};
    }
    if (m.rows() == 1) {
        return {m(0, 0), std::abs(m(0, 0))};
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    const auto &ev = es.eigenvalues();
    return {ev(0), std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)))};
}

namespace {

double spectral_norm(const Matrix &m) {
    if (m.rows() == 1) {
        return std::abs(m(0, 0));
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double circle_value(const LaurentPoly &u, int j, int points) {
    const double t = 2.0 * std::numbers::pi * j / points;
    const CMatrix v = u(std::polar(1.0, t));
    const CMatrix h = 0.5 * (v + v.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

// Index-ordered reduction shared by both flavours.
GridExtremum reduce_min(const std::vector<double> &vals, std::span<const double> xs) {
    GridExtremum best{vals.empty() ? 0.0 : vals[0], xs.empty() ? 0.0 : xs[0], 0};
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] < best.value) {
            best = {vals[i], xs[i], i};
        }
    }
    return best;
}

GridExtremum reduce_max(const std::vector<double> &vals, std::span<const double> xs) {
    GridExtremum best{vals.empty() ? 0.0 : vals[0], xs.empty() ? 0.0 : xs[0], 0};
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] > best.value) {
            best = {vals[i], xs[i], i};
        }
    }
    return best;
}

std::vector<double> circle_points(int points) {
    std::vector<double> ts(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        ts[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / points;
    }
    return ts;
}

} // namespace

namespace serial {

std::vector<double> min_eigenvalues(const MatrixPoly &p, std::span<const double> xs) {
    std::vector<double> vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        vals[i] = kernels::min_eigenvalue(p(xs[i]));
    }
    return vals;
}

GridExtremum min_eigenvalue(const MatrixPoly &p, std::span<const double> xs) {
    return reduce_min(min_eigenvalues(p, xs), xs);
}

GridExtremum max_spectral_norm(const MatrixPoly &p, std::span<const double> xs) {
    std::vector<double> vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        vals[i] = spectral_norm(p(xs[i]));
    }
    return reduce_max(vals, xs);
}

GridExtremum circle_min_eigenvalue(const LaurentPoly &u, int points) {
    std::vector<double> vals(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        vals[static_cast<std::size_t>(j)] = circle_value(u, j, points);
    }
    return reduce_min(vals, circle_points(points));
}

} // namespace serial

namespace parallel {

std::vector<double> min_eigenvalues(const MatrixPoly &p, std::span<const double> xs) {
    std::vector<double> vals(xs.size());
    const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        vals[k] = kernels::min_eigenvalue(p(xs[k]));
    }
    return vals;
}

GridExtremum min_eigenvalue(const MatrixPoly &p, std::span<const double> xs) {
    return reduce_min(min_eigenvalues(p, xs), xs);
}

GridExtremum max_spectral_norm(const MatrixPoly &p, std::span<const double> xs) {
    std::vector<double> vals(xs.size());
    const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        vals[k] = spectral_norm(p(xs[k]));
    }
    return reduce_max(vals, xs);
}

GridExtremum circle_min_eigenvalue(const LaurentPoly &u, int points) {
    std::vector<double> vals(static_cast<std::size_t>(points));
#pragma omp parallel for schedule(static)
    for (int j = 0; j < points; ++j) {
        vals[static_cast<std::size_t>(j)] = circle_value(u, j, points);
    }
    return reduce_min(vals, circle_points(points));
}

} // namespace parallel

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace matmom::kernels
