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
 * Common matrix aliases and the exception hierarchy shared by every module.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace matmom {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: size mismatch, ragged matrices, bad JSON fields.
class InputError : public Error {
  public:
    using Error::Error;
};

/// Entrywise max-abs norm, the `‖·‖_∞` used for all coefficient residuals.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace matmom
