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
 * Finite truncation of the compact non-archimedean preordering generated by
 * G(x) = diag(p_1, p_2, ...), p_i(x) = x³/i − x².
 *
 * The infinite diagonal is cut to its top-left N x N corner and the shift
 * (x_1, x_2, ...) ↦ (x_2, x_3, ...) to the nilpotent matrix with ones on the
 * superdiagonal. Then S^n G (Sᵀ)^n = A_n x³ − P_n x² where
 * A_n = diag(1/(n+1), ..., 1/N, 0, ..., 0) and P_n keeps the first N − n ones.
 *
 * Module elements are sums of AᵀA, AᵀGA and Aᵀ(q_1 ⋯ q_l P_u)A with
 * q = ⟨G̃f, f⟩, G̃ ∈ {G, Id} and u = e_1. Their leading coefficients are PSD,
 * which is the obstruction that keeps (K² − x²)·Id out of the preordering.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "measures.hpp"
#include "random.hpp"

namespace matmom {

struct ShiftFamily {
    int N = 0;
    MatrixPoly G{1};
    Matrix shift; ///< S(i, i+1) = 1
};

ShiftFamily build_family(int N);

/// S^n G (Sᵀ)^n for 0 <= n < N.
MatrixPoly shift_compress(const ShiftFamily &fam, int n);

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Same product in exact rational arithmetic; coefficient k of x^k, k = 0..3.
std::vector<RationalMatrix> shift_compress_exact(int N, int n);

class ShiftGapError : public Error {
  public:
    ShiftGapError(const std::string &what, std::optional<MatrixPoly> witness, std::string label, double value)
        : Error(what), witness_(std::move(witness)), label_(std::move(label)), value_(value) {}
    [[nodiscard]] const std::optional<MatrixPoly> &witness() const { return witness_; }
    [[nodiscard]] const std::string &label() const { return label_; }
    [[nodiscard]] double value() const { return value_; }

  private:
    std::optional<MatrixPoly> witness_;
    std::string label_;
    double value_;
};

struct ModuleElement {
    MatrixPoly poly{1};
    std::string label;
};

/// One random element of the module generated by G and its e_1 compressions
/// (1 to 3 summands, total degree <= 8).
ModuleElement random_module_element(const ShiftFamily &fam, Rng &rng);

inline constexpr double kProbeTol = 1e-9;

struct ProbeReport {
    int trials = 0;
    double min_eigenvalue = 0.0; ///< smallest raw eigenvalue of a leading coefficient
    double min_relative = 0.0;   ///< smallest λ_min / max(1, ‖lead‖)
    int violations = 0;          ///< elements with min_relative < −kProbeTol
    int max_degree = 0;
    double candidate_min_eigenvalue = 0.0; ///< λ_min of the lead of (1 − x²)·Id
    bool candidate_rejected = false;
};

ProbeReport leading_coeff_probe(const ShiftFamily &fam, int trials, std::uint64_t seed);
/// Single-threaded reference; identical output.
ProbeReport leading_coeff_probe_serial(const ShiftFamily &fam, int trials, std::uint64_t seed);

inline constexpr double kAuditScaleTol = 1e-9;

struct ModuleAudit {
    bool pass = true;
    int structured_checked = 0;
    int random_checked = 0;
    double min_normalized = 0.0; ///< min L(F) / scale(F) over checked elements
    std::optional<MatrixPoly> witness;
    std::string witness_label;
    double witness_value = 0.0;
};

/**
 * Samples L(F) >= 0 for F in the truncated preordering, L(F) = Σ_j tr(F(x_j) W_j).
 * Compressions n = N−1, ..., 0 come first, then p_i E_ii, then random
 * elements; the first element with L(F) < −1e−9·scale is the witness.
 */
ModuleAudit module_audit(const AtomicMatrixMeasure &mu, const ShiftFamily &fam, int trials = 256,
                         std::uint64_t seed = 0);

struct ChainReport {
    std::vector<int> n_values;
    double lhs = 0.0;                   ///< L(Id x²)
    std::vector<double> lhs_compressed; ///< L(P_n x²)
    std::vector<double> mid;            ///< L(A_n x³)
    std::vector<double> cs_bound;       ///< L(A_n²)^½ L(Id x⁶)^½
    std::vector<double> rhs;            ///< L(Id)^½ L(Id x⁶)^½ / (n+1)
    bool all_hold = true;
    double base = 0.0;                  ///< L(Id)^½ L(Id x⁶)^½
    double truncation_bound = 0.0;      ///< base / N
    double truncation_ratio = 0.0;      ///< lhs / base (0 when base = 0)
    bool truncation_bound_holds = true;
};

inline constexpr double kChainTol = 1e-9;

/// Throws ShiftGapError carrying the violating element when the audit fails.
ChainReport cauchy_schwarz_chain(const AtomicMatrixMeasure &mu, const ShiftFamily &fam, int audit_trials = 256,
                                 std::uint64_t seed = 0);

/**
 * True iff |L(x^k (E_ab + E_ba)/2)| <= tol for k = 1..max(6, #atoms), i.e.
 * L(F) = L(F(0)). Requires atoms in [0, N] and a passing audit; throws
 * ShiftGapError otherwise.
 */
bool support_collapse_check(const AtomicMatrixMeasure &mu, const ShiftFamily &fam, double tol = 1e-9,
                            int audit_trials = 256, std::uint64_t seed = 0);

/// (0, Id) + (N+1, 1e-3·Id): the functional used when none is supplied.
AtomicMatrixMeasure default_functional(int N);

} // namespace matmom
