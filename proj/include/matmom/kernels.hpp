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
 * Data-parallel inner loops: grid evaluation of matrix polynomials and
 * independent trial batches.
 *
 * Every kernel exists twice. `serial::` is the reference implementation kept
 * for tests and benchmarks; `parallel::` distributes the same per-point work
 * over OpenMP threads. Per-point results land in a vector that is reduced in
 * index order, so both versions return bit-identical answers for any thread
 * count. The unqualified entry points dispatch to `parallel::`.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polymat.hpp"

namespace matmom::kernels {

struct GridExtremum {
    double value = 0.0;
    double x = 0.0;          ///< grid point attaining the value (first on ties)
    std::size_t index = 0;
};

/// `count` equispaced points of [a, b] including both ends.
std::vector<double> uniform_grid(double a, double b, int count);

/// `count` Chebyshev points of the first kind mapped to [a, b], ascending.
std::vector<double> chebyshev_grid(double a, double b, int count);

/// Smallest eigenvalue of a symmetric matrix (symmetrized before solving).
double min_eigenvalue(const Matrix &m);

/// Smallest and largest |eigenvalue|; the pair used by scale-aware PSD tests.
struct Spectrum {
    double min = 0.0;
    double abs_max = 0.0;
};
Spectrum spectrum(const Matrix &m);

namespace serial {

GridExtremum min_eigenvalue(const MatrixPoly &p, std::span<const double> xs);
GridExtremum max_spectral_norm(const MatrixPoly &p, std::span<const double> xs);
/// min over t_j = 2πj/points of λ_min(u(e^{i t_j})).
GridExtremum circle_min_eigenvalue(const LaurentPoly &u, int points);
/// λ_min at every grid point.
std::vector<double> min_eigenvalues(const MatrixPoly &p, std::span<const double> xs);

template <typename Fn>
auto map_trials(std::size_t count, Fn &&fn) -> std::vector<decltype(fn(std::size_t{}))> {
    std::vector<decltype(fn(std::size_t{}))> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = fn(i);
    }
    return out;
}

} // namespace serial

namespace parallel {

GridExtremum min_eigenvalue(const MatrixPoly &p, std::span<const double> xs);
GridExtremum max_spectral_norm(const MatrixPoly &p, std::span<const double> xs);
GridExtremum circle_min_eigenvalue(const LaurentPoly &u, int points);
std::vector<double> min_eigenvalues(const MatrixPoly &p, std::span<const double> xs);

/// Runs fn(i) for i in [0, count) across threads; results stay in index order.
/// fn must not touch shared mutable state.
template <typename Fn>
auto map_trials(std::size_t count, Fn &&fn) -> std::vector<decltype(fn(std::size_t{}))> {
    std::vector<decltype(fn(std::size_t{}))> out(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    }
    return out;
}

} // namespace parallel

using parallel::circle_min_eigenvalue;
using parallel::map_trials;
using parallel::max_spectral_norm;
using parallel::min_eigenvalues;

inline GridExtremum min_eigenvalue(const MatrixPoly &p, std::span<const double> xs) {
    return parallel::min_eigenvalue(p, xs);
}

/// Seed for trial `index` of a run seeded with `seed` (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

} // namespace matmom::kernels
