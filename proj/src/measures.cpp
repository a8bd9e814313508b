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

#include "matmom/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "matmom/kernels.hpp"
#include "matmom/random.hpp"

namespace matmom {

AtomicMatrixMeasure::AtomicMatrixMeasure(int n, std::vector<Atom> atoms) : n_(n) {
    if (n <= 0) {
        throw InputError("measure: n must be positive");
    }
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        Matrix &w = atoms[j].weight;
        if (w.rows() != n || w.cols() != n) {
            throw InputError("atoms[" + std::to_string(j) + "].W is not " + std::to_string(n) + "x" +
                             std::to_string(n));
        }
        if (!std::isfinite(atoms[j].x)) {
            throw InputError("atoms[" + std::to_string(j) + "].x is not finite");
        }
        if (max_abs(w - w.transpose()) > 1e-12 * std::max(1.0, max_abs(w))) {
            throw InputError("atoms[" + std::to_string(j) + "].W is not symmetric");
        }
        w = (0.5 * (w + w.transpose())).eval();
        const kernels::Spectrum sp = kernels::spectrum(w);
        if (sp.min < -1e-10 * std::max(1.0, sp.abs_max)) {
            throw InputError("atoms[" + std::to_string(j) + "].W is not positive semidefinite");
        }
    }
    std::stable_sort(atoms.begin(), atoms.end(), [](const Atom &a, const Atom &b) { return a.x < b.x; });
    for (Atom &a : atoms) {
        if (!atoms_.empty() && a.x - atoms_.back().x < kAtomMergeDistance) {
            atoms_.back().weight += a.weight;
        } else {
            atoms_.push_back(std::move(a));
        }
    }
}

Matrix AtomicMatrixMeasure::mass() const {
    Matrix m = Matrix::Zero(n_, n_);
    for (const Atom &a : atoms_) {
        m += a.weight;
    }
    return m;
}

PositiveMapMeasure PositiveMapMeasure::from_kraus(int h_dim, int k_dim, std::vector<KrausAtom> atoms) {
    if (h_dim <= 0 || k_dim <= 0) {
        throw InputError("map measure: h_dim and k_dim must be positive");
    }
    PositiveMapMeasure m(h_dim, k_dim);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        for (const Matrix &v : atoms[j].kraus) {
            if (v.rows() != h_dim || v.cols() != k_dim) {
                throw InputError("atoms[" + std::to_string(j) + "].kraus entry is not " + std::to_string(h_dim) +
                                 "x" + std::to_string(k_dim));
            }
        }
        m.points_.push_back(atoms[j].x);
    }
    m.kraus_ = std::move(atoms);
    return m;
}

PositiveMapMeasure PositiveMapMeasure::from_action(int h_dim, int k_dim, std::vector<ActionAtom> atoms,
                                                   int samples, std::uint64_t seed) {
    if (h_dim <= 0 || k_dim <= 0) {
        throw InputError("map measure: h_dim and k_dim must be positive");
    }
    PositiveMapMeasure m(h_dim, k_dim);
    Rng rng(seed);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        for (int s = 0; s < samples; ++s) {
            const Matrix a = rng.wishart(h_dim, rng.uniform_int(1, h_dim));
            const Matrix out = atoms[j].action(a);
            if (out.rows() != k_dim || out.cols() != k_dim) {
                throw InputError("atoms[" + std::to_string(j) + "] action returns the wrong size");
            }
            const kernels::Spectrum sp = kernels::spectrum(out);
            if (sp.min < -1e-10 * std::max(1.0, sp.abs_max)) {
                throw InputError("atoms[" + std::to_string(j) + "] action does not preserve positivity");
            }
        }
        m.points_.push_back(atoms[j].x);
        m.actions_.push_back(std::move(atoms[j].action));
    }
    return m;
}

Matrix PositiveMapMeasure::apply(std::size_t j, const Matrix &a) const {
    if (!kraus_.empty()) {
        Matrix out = Matrix::Zero(k_dim_, k_dim_);
        for (const Matrix &v : kraus_[j].kraus) {
            out.noalias() += v.transpose() * a * v;
        }
        return out;
    }
    return actions_[j](a);
}

double integrate_trace(const MatrixPoly &f, const AtomicMatrixMeasure &mu) {
    if (f.size() != mu.size()) {
        throw InputError("integrate_trace: polynomial is " + std::to_string(f.size()) + "x" +
                         std::to_string(f.size()) + " but the measure has n = " + std::to_string(mu.size()));
    }
    double acc = 0.0;
    for (const Atom &a : mu.atoms()) {
        acc += (f(a.x).array() * a.weight.transpose().array()).sum();
    }
    return acc;
}

Matrix integrate_map(const MatrixPoly &f, const PositiveMapMeasure &m) {
    if (f.size() != m.h_dim()) {
        throw InputError("integrate_map: polynomial size does not match h_dim");
    }
    Matrix acc = Matrix::Zero(m.k_dim(), m.k_dim());
    for (std::size_t j = 0; j < m.atom_count(); ++j) {
        acc += m.apply(j, f(m.point(j)));
    }
    return acc;
}

MomentSequence forward_moments(const AtomicMatrixMeasure &mu, int max_degree) {
    if (max_degree < 0) {
        throw InputError("forward_moments: degree must be >= 0");
    }
    const int n = mu.size();
    std::vector<Matrix> s(static_cast<std::size_t>(max_degree) + 1, Matrix::Zero(n, n));
    for (const Atom &a : mu.atoms()) {
        double xp = 1.0;
        for (int p = 0; p <= max_degree; ++p) {
            s[static_cast<std::size_t>(p)] += xp * a.weight;
            xp *= a.x;
        }
    }
    return MomentSequence(n, std::move(s));
}

SupportViolation::SupportViolation(std::size_t atom, double x, std::size_t generator, double value)
    : Error([&] {
          std::ostringstream msg;
          msg << "measure not supported in K_M: atom " << atom << " at x = " << x << " has generator "
              << generator << " value " << value;
          return msg.str();
      }()),
      atom_(atom), x_(x), generator_(generator), value_(value) {}

AuditReport positivity_audit(const AtomicMatrixMeasure &mu, std::span<const ScalarPoly> generators, int trials,
                             std::uint64_t seed) {
    for (std::size_t j = 0; j < mu.atoms().size(); ++j) {
        const double x = mu.atoms()[j].x;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const double v = generators[g](x);
            if (v < -1e-12 * std::max(1.0, std::abs(x))) {
                throw SupportViolation(j, x, g, v);
            }
        }
    }

    std::vector<double> weight_norms;
    for (const Atom &a : mu.atoms()) {
        weight_norms.push_back(std::max(0.0, kernels::spectrum(a.weight).abs_max));
    }

    struct Trial {
        std::optional<std::size_t> generator;
        MatrixPoly witness;
        double value = 0.0;
        double scale = 0.0;
    };
    const auto results = kernels::map_trials(static_cast<std::size_t>(std::max(trials, 0)), [&](std::size_t t) {
        Rng rng(kernels::trial_seed(seed, t));
        const int pick = rng.uniform_int(0, static_cast<int>(generators.size()));
        Trial out;
        if (pick < static_cast<int>(generators.size())) {
            out.generator = static_cast<std::size_t>(pick);
        }
        const ScalarPoly g = out.generator ? generators[*out.generator] : ScalarPoly({1.0});
        out.witness = rng.poly(mu.size(), rng.uniform_int(0, 3));
        const MatrixPoly integrand = g * matmul(transpose_poly(out.witness), out.witness);
        out.value = integrate_trace(integrand, mu);
        for (std::size_t j = 0; j < mu.atoms().size(); ++j) {
            const double x = mu.atoms()[j].x;
            out.scale += std::abs(g(x)) * out.witness(x).squaredNorm() * weight_norms[j];
        }
        return out;
    });

    AuditReport report;
    report.trials = trials;
    report.min_normalized = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < results.size(); ++t) {
        const Trial &r = results[t];
        if (r.scale > 0.0) {
            report.min_normalized = std::min(report.min_normalized, r.value / r.scale);
        }
        if (r.value < -kAuditTol * r.scale) {
            report.violations.push_back({t, r.generator, r.witness, r.value, r.scale});
        }
    }
    if (!std::isfinite(report.min_normalized)) {
        report.min_normalized = 0.0;
    }
    return report;
}

} // namespace matmom
