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
 * Finitely atomic operator-valued measures on the real line.
 *
 * AtomicMatrixMeasure carries PSD weights W_j at points x_j and acts on matrix
 * polynomials through the trace pairing L(F) = Σ_j tr(F(x_j) W_j).
 * PositiveMapMeasure carries, at each point, a linear map Φ_j sending PSD
 * h x h matrices to PSD k x k matrices, and integrates to Σ_j Φ_j(F(x_j)).
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "moments.hpp"
#include "polymat.hpp"

namespace matmom {

struct Atom {
    double x = 0.0;
    Matrix weight;
};

/// Atoms closer than this are merged by adding their weights.
inline constexpr double kAtomMergeDistance = 1e-12;

class AtomicMatrixMeasure {
  public:
    explicit AtomicMatrixMeasure(int n) : n_(n) {}
    /// Validates sizes and PSD weights (λ_min >= −1e−10·max(1, λ_max)),
    /// sorts atoms by position and merges near-coincident ones.
    AtomicMatrixMeasure(int n, std::vector<Atom> atoms);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] const std::vector<Atom> &atoms() const { return atoms_; }
    [[nodiscard]] bool empty() const { return atoms_.empty(); }
    /// Total mass S_0 = Σ_j W_j.
    [[nodiscard]] Matrix mass() const;

  private:
    int n_;
    std::vector<Atom> atoms_;
};

/**
 * Measure whose atoms carry positive linear maps B(h) → B(k).
 *
 * The primary representation is Kraus-like, Φ(A) = Σ_r V_rᵀ A V_r with
 * V_r of size h x k, which is completely positive. from_action() accepts an
 * arbitrary linear action and only checks PSD preservation on random samples.
 */
class PositiveMapMeasure {
  public:
    using Action = std::function<Matrix(const Matrix &)>;

    struct KrausAtom {
        double x = 0.0;
        std::vector<Matrix> kraus;
    };

    struct ActionAtom {
        double x = 0.0;
        Action action;
    };

    static PositiveMapMeasure from_kraus(int h_dim, int k_dim, std::vector<KrausAtom> atoms);

    /// Throws InputError when a sampled PSD input is mapped outside the PSD cone.
    static PositiveMapMeasure from_action(int h_dim, int k_dim, std::vector<ActionAtom> atoms,
                                          int samples = 64, std::uint64_t seed = 0);

    [[nodiscard]] int h_dim() const { return h_dim_; }
    [[nodiscard]] int k_dim() const { return k_dim_; }
    [[nodiscard]] std::size_t atom_count() const { return points_.size(); }
    [[nodiscard]] double point(std::size_t j) const { return points_[j]; }
    [[nodiscard]] bool completely_positive() const { return !kraus_.empty() || points_.empty(); }
    [[nodiscard]] const std::vector<KrausAtom> &kraus_atoms() const { return kraus_; }

    /// Φ_j(a).
    [[nodiscard]] Matrix apply(std::size_t j, const Matrix &a) const;

  private:
    PositiveMapMeasure(int h, int k) : h_dim_(h), k_dim_(k) {}

    int h_dim_;
    int k_dim_;
    std::vector<double> points_;
    std::vector<KrausAtom> kraus_;
    std::vector<Action> actions_;
};

/// Σ_j tr(F(x_j) W_j).
double integrate_trace(const MatrixPoly &f, const AtomicMatrixMeasure &mu);

/// Σ_j Φ_j(F(x_j)), a k x k matrix.
Matrix integrate_map(const MatrixPoly &f, const PositiveMapMeasure &m);

/// S_p = Σ_j x_j^p W_j for p = 0..max_degree.
MomentSequence forward_moments(const AtomicMatrixMeasure &mu, int max_degree);

/// Precondition failure of positivity_audit: an atom outside the set {g >= 0}.
class SupportViolation : public Error {
  public:
    SupportViolation(std::size_t atom, double x, std::size_t generator, double value);

    [[nodiscard]] std::size_t atom() const { return atom_; }
    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] std::size_t generator() const { return generator_; }
    [[nodiscard]] double value() const { return value_; }

  private:
    std::size_t atom_;
    double x_;
    std::size_t generator_;
    double value_;
};

struct AuditViolation {
    std::size_t trial = 0;
    std::optional<std::size_t> generator; ///< index into the generator list; empty for the unit generator
    MatrixPoly witness;                   ///< the test polynomial A
    double value = 0.0;                   ///< L(g·AᵀA)
    double scale = 0.0;
};

struct AuditReport {
    int trials = 0;
    double min_normalized = 0.0; ///< min over trials of L(g·AᵀA) / scale
    std::vector<AuditViolation> violations;

    [[nodiscard]] bool pass() const { return violations.empty(); }
};

inline constexpr double kAuditTol = 1e-9;

/**
 * Checks L(g·AᵀA) >= −1e−9·scale for `trials` random pairs (g, A) with g drawn
 * from the generators plus the unit polynomial and A a random matrix
 * polynomial of degree <= 3. `scale` is Σ_j |g(x_j)|·‖A(x_j)‖_F²·‖W_j‖_2.
 *
 * Throws SupportViolation when some generator is negative at an atom.
 * Each trial draws from its own seed, so the report does not depend on the
 * thread count.
 */
AuditReport positivity_audit(const AtomicMatrixMeasure &mu, std::span<const ScalarPoly> generators, int trials,
                             std::uint64_t seed);

} // namespace matmom
