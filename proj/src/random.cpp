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

#include "matmom/random.hpp"

#include <Eigen/QR>

namespace matmom {

Matrix Rng::psd(int n, double lo, double hi) {
    Eigen::HouseholderQR<Matrix> qr(gaussian(n, n));
    Matrix q = qr.householderQ();
    Vector lam(n);
    for (int i = 0; i < n; ++i) {
        lam(i) = uniform(lo, hi);
    }
    Matrix w = q * lam.asDiagonal() * q.transpose();
    return 0.5 * (w + w.transpose());
}

MatrixPoly Rng::poly(int n, int degree) {
    std::vector<Matrix> c;
    c.reserve(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) {
        c.push_back(gaussian(n, n));
    }
    return MatrixPoly(std::move(c));
}

} // namespace matmom
