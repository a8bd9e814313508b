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
 * Truncated moment sequences of symmetric matrices and the block-Hankel
 * positivity criteria for representing measures on ℝ, [0, ∞) and [0, 1].
 *
 * For a functional L on matrix polynomials, S_p = [L(x^p E_kl)]_{k,l}. A
 * measure supported in
 *
 *  - ℝ       makes [S_{i+j}] PSD,
 *  - [0, ∞)  additionally makes [S_{i+j+1}] PSD,
 *  - [0, 1]  additionally makes [S_{i+j} − S_{i+j+1}] and
 *            [S_{i+j+1} − S_{i+j+2}] PSD,
 *
 * for every order m. Finite data only allows orders with 2m + shift <= D, so
 * the checkers are necessary conditions and report which orders they tested.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "types.hpp"

namespace matmom {

inline constexpr double kDefaultPsdTol = 1e-9;

class MomentSequence {
  public:
    /// Rejects non-square, mismatched or asymmetric (beyond 1e-12·‖S_p‖_∞) entries.
    MomentSequence(int n, std::vector<Matrix> moments);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int max_degree() const { return static_cast<int>(moments_.size()) - 1; }
    [[nodiscard]] const Matrix &operator[](int p) const { return moments_.at(static_cast<std::size_t>(p)); }
    [[nodiscard]] const std::vector<Matrix> &moments() const { return moments_; }

  private:
    int n_;
    std::vector<Matrix> moments_;
};

struct PsdReport {
    bool pass = true;
    double min_eigenvalue = 0.0;
    std::vector<int> tested_orders;
    std::optional<int> failing_order;
    std::string failing_family; ///< "hankel", "shifted", "diff", "diff_shifted" or ""
};

/// Scale-aware PSD test: λ_min >= −tol·max(1, max|λ|).
struct PsdVerdict {
    bool pass;
    double min_eigenvalue;
};
PsdVerdict psd_verdict(const Matrix &m, double tol);

/// [S_{i+j+shift}]_{i,j=0..m}; requires 2m + shift <= D and shift in {0, 1, 2}.
Matrix block_hankel(const MomentSequence &s, int m, int shift);

/// [S_{i+j+shift} − S_{i+j+shift+1}]_{i,j=0..m}; requires 2m + shift + 1 <= D.
Matrix block_hankel_difference(const MomentSequence &s, int m, int shift);

enum class MomentVariant { Hamburger, Stieltjes, Hausdorff };

std::string to_string(MomentVariant v);
MomentVariant parse_variant(const std::string &name);

PsdReport check_hamburger(const MomentSequence &s, double tol = kDefaultPsdTol);
PsdReport check_stieltjes(const MomentSequence &s, double tol = kDefaultPsdTol);
/// Throws InputError when D < 2.
PsdReport check_hausdorff(const MomentSequence &s, double tol = kDefaultPsdTol);
PsdReport check(const MomentSequence &s, MomentVariant variant, double tol = kDefaultPsdTol);

/**
 * Operator form of the criteria for a fixed tuple (A_0, ..., A_m): the
 * scalar matrices [⟨S_{i+j+shift}, A_iᵀA_j⟩_F] (and their differenced
 * analogues for Hausdorff) must be PSD.
 */
PsdReport operator_check(const MomentSequence &s, std::span<const Matrix> tuple, MomentVariant variant,
                         double tol = kDefaultPsdTol);

} // namespace matmom
