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

#pragma once

#include <cstdint>
#include <random>

#include "polymat.hpp"

namespace matmom {

/// Seeded generator for the standard Gaussian matrix ensemble.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(engine_); }
    int uniform_int(int a, int b) { return std::uniform_int_distribution<int>(a, b)(engine_); }

    Matrix gaussian(int rows, int cols) {
        Matrix m(rows, cols);
        for (int j = 0; j < cols; ++j) {
            for (int i = 0; i < rows; ++i) {
                m(i, j) = normal();
            }
        }
        return m;
    }

    /// Q·diag(λ)·Qᵀ with Q Haar-orthogonal and λ uniform in [lo, hi].
    Matrix psd(int n, double lo, double hi);

    /// G·Gᵀ for an n x rank Gaussian G.
    Matrix wishart(int n, int rank) {
        Matrix g = gaussian(n, rank);
        Matrix w = g * g.transpose();
        return 0.5 * (w + w.transpose());
    }

    /// Polynomial of exact degree `degree` with Gaussian coefficients.
    MatrixPoly poly(int n, int degree);

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace matmom
