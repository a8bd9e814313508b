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

#include <initializer_list>
#include <vector>

#include "matmom/polymat.hpp"

namespace matmom::test {

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto &row : rows) {
        Eigen::Index j = 0;
        for (double v : row) {
            m(i, j++) = v;
        }
        ++i;
    }
    return m;
}

inline Matrix scalar(double v) { return Matrix::Constant(1, 1, v); }

/// Scalar polynomial as a 1x1 MatrixPoly.
inline MatrixPoly spoly(std::initializer_list<double> c) {
    std::vector<Matrix> m;
    for (double v : c) {
        m.push_back(scalar(v));
    }
    return MatrixPoly(std::move(m), true);
}

inline MatrixPoly mpoly(std::initializer_list<Matrix> c, bool symmetric = false) {
    return MatrixPoly(std::vector<Matrix>(c), symmetric);
}

/// Max over sample points of ‖P(x) − Q(x)‖_∞; the evaluation oracle.
inline double eval_distance(const MatrixPoly &p, const MatrixPoly &q, std::initializer_list<double> xs) {
    double d = 0.0;
    for (double x : xs) {
        d = std::max(d, max_abs(p(x) - q(x)));
    }
    return d;
}

inline const std::initializer_list<double> kSamplePoints = {-2.5, -1.0, -0.3, 0.0, 0.4, 1.0, 1.7, 3.0};

} // namespace matmom::test
