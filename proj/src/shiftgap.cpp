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

#include "matmom/shiftgap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "matmom/kernels.hpp"

namespace matmom {

namespace {

Matrix power(const Matrix &m, int k) {
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) {
        out = out * m;
    }
    return out;
}

// ⟨G̃f, f⟩ as a scalar polynomial.
ScalarPoly quadratic_form(const MatrixPoly &g, const std::vector<Vector> &f) {
    const int df = static_cast<int>(f.size()) - 1;
    std::vector<double> q(static_cast<std::size_t>(2 * df + g.degree() + 1), 0.0);
    for (int i = 0; i <= df; ++i) {
        for (int j = 0; j <= g.degree(); ++j) {
            const Vector gf = g.coeffs()[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(i)];
            for (int l = 0; l <= df; ++l) {
                q[static_cast<std::size_t>(i + j + l)] += f[static_cast<std::size_t>(l)].dot(gf);
            }
        }
    }
    return ScalarPoly(std::move(q));
}

MatrixPoly conjugate(const MatrixPoly &a, const MatrixPoly &f) { return matmul(transpose_poly(a), matmul(f, a)); }

double functional(const AtomicMatrixMeasure &mu, const MatrixPoly &f) { return integrate_trace(f, mu); }

// Σ_j ‖W_j‖·‖F(x_j)‖: the size L(F) is compared against.
double functional_scale(const AtomicMatrixMeasure &mu, const MatrixPoly &f) {
    double s = 0.0;
    for (const Atom &a : mu.atoms()) {
        s += kernels::spectrum(a.weight).abs_max * kernels::spectrum(f(a.x)).abs_max;
    }
    return s;
}

struct ProbeSample {
    double min_eig = 0.0;
    double relative = 0.0;
    int degree = 0;
};

template <typename Map>
ProbeReport run_probe(const ShiftFamily &fam, int trials, std::uint64_t seed, Map map) {
    if (trials < 1) {
        throw InputError("leading_coeff_probe: trials must be >= 1");
    }
    const auto samples = map(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng(kernels::trial_seed(seed, t));
        const ModuleElement e = random_module_element(fam, rng);
        const kernels::Spectrum sp = kernels::spectrum(e.poly.leading());
        return ProbeSample{sp.min, sp.min / std::max(1.0, sp.abs_max), e.poly.degree()};
    });
    ProbeReport r;
    r.trials = trials;
    r.min_eigenvalue = std::numeric_limits<double>::infinity();
    r.min_relative = std::numeric_limits<double>::infinity();
    for (const ProbeSample &s : samples) {
        r.min_eigenvalue = std::min(r.min_eigenvalue, s.min_eig);
        r.min_relative = std::min(r.min_relative, s.relative);
        r.max_degree = std::max(r.max_degree, s.degree);
        if (s.relative < -kProbeTol) {
            ++r.violations;
        }
    }
    const MatrixPoly candidate({Matrix::Identity(fam.N, fam.N), Matrix::Zero(fam.N, fam.N),
                                -Matrix::Identity(fam.N, fam.N)},
                               true);
    r.candidate_min_eigenvalue = kernels::spectrum(candidate.leading()).min;
    r.candidate_rejected = r.candidate_min_eigenvalue < -kProbeTol;
    return r;
}

} // namespace

ShiftFamily build_family(int N) {
    if (N < 1) {
        throw InputError("build_family: N must be >= 1");
    }
    ShiftFamily fam;
    fam.N = N;
    Matrix cubic = Matrix::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        cubic(i, i) = 1.0 / (i + 1);
    }
    fam.G = MatrixPoly({Matrix::Zero(N, N), Matrix::Zero(N, N), -Matrix::Identity(N, N), cubic}, true);
    fam.shift = Matrix::Zero(N, N);
    for (int i = 0; i + 1 < N; ++i) {
        fam.shift(i, i + 1) = 1.0;
    }
    return fam;
}

MatrixPoly shift_compress(const ShiftFamily &fam, int n) {
    if (n < 0 || n >= fam.N) {
        throw InputError("shift_compress: n = " + std::to_string(n) + " outside [0, " + std::to_string(fam.N) + ")");
    }
    const Matrix sn = power(fam.shift, n);
    std::vector<Matrix> c;
    for (const Matrix &g : fam.G.coeffs()) {
        c.push_back(sn * g * sn.transpose());
    }
    return MatrixPoly(std::move(c), true);
}

std::vector<RationalMatrix> shift_compress_exact(int N, int n) {
    if (N < 1 || n < 0 || n >= N) {
        throw InputError("shift_compress_exact: need 0 <= n < N");
    }
    const auto zero = [N] { return RationalMatrix(static_cast<std::size_t>(N), std::vector<Rational>(N)); };
    const auto mul = [&](const RationalMatrix &a, const RationalMatrix &b) {
        RationalMatrix out = zero();
        for (int i = 0; i < N; ++i) {
            for (int k = 0; k < N; ++k) {
                if (a[i][k].numerator() == 0) {
                    continue;
                }
                for (int j = 0; j < N; ++j) {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        return out;
    };
    RationalMatrix s = zero();
    RationalMatrix st = zero();
    for (int i = 0; i + 1 < N; ++i) {
        s[i][i + 1] = 1;
        st[i + 1][i] = 1;
    }
    RationalMatrix sn = zero();
    RationalMatrix snt = zero();
    for (int i = 0; i < N; ++i) {
        sn[i][i] = 1;
        snt[i][i] = 1;
    }
    for (int k = 0; k < n; ++k) {
        sn = mul(sn, s);
        snt = mul(st, snt);
    }
    std::vector<RationalMatrix> g(4, zero());
    for (int i = 0; i < N; ++i) {
        g[2][i][i] = -1;
        g[3][i][i] = Rational(1, i + 1);
    }
    std::vector<RationalMatrix> out;
    for (const RationalMatrix &c : g) {
        out.push_back(mul(mul(sn, c), snt));
    }
    return out;
}

ModuleElement random_module_element(const ShiftFamily &fam, Rng &rng) {
    const int n = fam.N;
    Matrix pu = Matrix::Zero(n, n);
    pu(0, 0) = 1.0;
    const MatrixPoly id = MatrixPoly::identity(n);

    ModuleElement e{MatrixPoly(n), ""};
    const int summands = rng.uniform_int(1, 3);
    for (int s = 0; s < summands; ++s) {
        std::string label;
        MatrixPoly term(n);
        switch (rng.uniform_int(0, 2)) {
        case 0: {
            const MatrixPoly r = rng.poly(n, rng.uniform_int(0, 2));
            term = matmul(transpose_poly(r), r);
            label = "RtR";
            break;
        }
        case 1: {
            const MatrixPoly r = rng.poly(n, rng.uniform_int(0, 2));
            term = conjugate(r, fam.G);
            label = "RtGR";
            break;
        }
        default: {
            const int len = rng.uniform_int(1, 2);
            ScalarPoly q({1.0});
            for (int l = 0; l < len; ++l) {
                const int fdeg = len == 1 ? rng.uniform_int(0, 1) : 0;
                std::vector<Vector> f;
                for (int k = 0; k <= fdeg; ++k) {
                    f.push_back(rng.gaussian(n, 1).col(0));
                }
                q = q * quadratic_form(rng.uniform_int(0, 1) == 0 ? fam.G : id, f);
            }
            const MatrixPoly a = rng.poly(n, rng.uniform_int(0, 1));
            term = conjugate(a, MatrixPoly::scaled(q, pu));
            label = "At(qPu)A";
            break;
        }
        }
        e.poly = e.poly + term;
        e.label += (e.label.empty() ? "" : " + ") + label;
    }
    e.poly = e.poly.with_symmetry_detected();
    return e;
}

ProbeReport leading_coeff_probe(const ShiftFamily &fam, int trials, std::uint64_t seed) {
    return run_probe(fam, trials, seed,
                     [](std::size_t count, auto &&fn) { return kernels::parallel::map_trials(count, fn); });
}

ProbeReport leading_coeff_probe_serial(const ShiftFamily &fam, int trials, std::uint64_t seed) {
    return run_probe(fam, trials, seed,
                     [](std::size_t count, auto &&fn) { return kernels::serial::map_trials(count, fn); });
}

ModuleAudit module_audit(const AtomicMatrixMeasure &mu, const ShiftFamily &fam, int trials, std::uint64_t seed) {
    if (mu.size() != fam.N) {
        throw InputError("module_audit: functional has n = " + std::to_string(mu.size()) + " but N = " +
                         std::to_string(fam.N));
    }
    ModuleAudit audit;
    audit.min_normalized = std::numeric_limits<double>::infinity();
    auto consider = [&](const MatrixPoly &f, const std::string &label) {
        const double value = functional(mu, f);
        const double scale = functional_scale(mu, f);
        if (scale > 0.0) {
            audit.min_normalized = std::min(audit.min_normalized, value / scale);
        }
        if (audit.pass && value < -kAuditScaleTol * scale) {
            audit.pass = false;
            audit.witness = f;
            audit.witness_label = label;
            audit.witness_value = value;
        }
    };

    for (int n = fam.N - 1; n >= 0; --n) {
        consider(shift_compress(fam, n), "shift_compress(" + std::to_string(n) + ")");
        ++audit.structured_checked;
    }
    for (int i = 0; i < fam.N; ++i) {
        Matrix e = Matrix::Zero(fam.N, fam.N);
        e(i, i) = 1.0;
        consider(conjugate(MatrixPoly::constant(e), fam.G), "p_" + std::to_string(i + 1));
        ++audit.structured_checked;
    }

    const auto elements = kernels::map_trials(static_cast<std::size_t>(std::max(trials, 0)), [&](std::size_t t) {
        Rng rng(kernels::trial_seed(seed, t));
        return random_module_element(fam, rng);
    });
    for (std::size_t t = 0; t < elements.size(); ++t) {
        consider(elements[t].poly, "random[" + std::to_string(t) + "]: " + elements[t].label);
        ++audit.random_checked;
    }
    if (!std::isfinite(audit.min_normalized)) {
        audit.min_normalized = 0.0;
    }
    return audit;
}

namespace {

void require_audit(const AtomicMatrixMeasure &mu, const ShiftFamily &fam, int trials, std::uint64_t seed) {
    const ModuleAudit audit = module_audit(mu, fam, trials, seed);
    if (!audit.pass) {
        std::ostringstream msg;
        msg << "functional is not positive on the preordering: L(" << audit.witness_label
            << ") = " << audit.witness_value;
        throw ShiftGapError(msg.str(), audit.witness, audit.witness_label, audit.witness_value);
    }
}

MatrixPoly id_power(int n, int k) { return MatrixPoly::monomial(Matrix::Identity(n, n), k); }

} // namespace

ChainReport cauchy_schwarz_chain(const AtomicMatrixMeasure &mu, const ShiftFamily &fam, int audit_trials,
                                 std::uint64_t seed) {
    require_audit(mu, fam, audit_trials, seed);
    const int n_dim = fam.N;
    ChainReport r;
    r.lhs = functional(mu, id_power(n_dim, 2));
    const double l_id = functional(mu, id_power(n_dim, 0));
    const double l_x6 = functional(mu, id_power(n_dim, 6));
    r.base = std::sqrt(std::max(0.0, l_id)) * std::sqrt(std::max(0.0, l_x6));
    const double tol = kChainTol * std::max(1.0, r.base);

    for (int n = 0; n < n_dim; ++n) {
        const MatrixPoly c = shift_compress(fam, n);
        const Matrix a = c.coeff(3);
        const Matrix p = -c.coeff(2);
        const double lhs_n = functional(mu, MatrixPoly::monomial(p, 2));
        const double mid = functional(mu, MatrixPoly::monomial(a, 3));
        const double cs = std::sqrt(std::max(0.0, functional(mu, MatrixPoly::constant(a * a)))) *
                          std::sqrt(std::max(0.0, l_x6));
        const double rhs = r.base / (n + 1);
        r.n_values.push_back(n);
        r.lhs_compressed.push_back(lhs_n);
        r.mid.push_back(mid);
        r.cs_bound.push_back(cs);
        r.rhs.push_back(rhs);
        if (lhs_n > mid + tol || mid > cs + tol || cs > rhs + tol) {
            r.all_hold = false;
        }
    }
    r.truncation_bound = r.base / n_dim;
    r.truncation_ratio = r.base > 0.0 ? r.lhs / r.base : 0.0;
    r.truncation_bound_holds = r.lhs <= r.truncation_bound + tol;
    return r;
}

bool support_collapse_check(const AtomicMatrixMeasure &mu, const ShiftFamily &fam, double tol, int audit_trials,
                            std::uint64_t seed) {
    for (const Atom &a : mu.atoms()) {
        if (a.x < 0.0 || a.x > fam.N) {
            std::ostringstream msg;
            msg << "support_collapse_check: atom at x = " << a.x << " lies outside [0, " << fam.N << "]";
            throw ShiftGapError(msg.str(), std::nullopt, "support", a.x);
        }
    }
    require_audit(mu, fam, audit_trials, seed);
    const int kmax = std::max<int>(6, static_cast<int>(mu.atoms().size()));
    for (int k = 1; k <= kmax; ++k) {
        Matrix m = Matrix::Zero(fam.N, fam.N);
        for (const Atom &a : mu.atoms()) {
            m += std::pow(a.x, k) * a.weight;
        }
        // L(x^k (E_ab + E_ba)/2) = (M_ab + M_ba)/2 with M = Σ_j x_j^k W_j
        if (max_abs(0.5 * (m + m.transpose())) > tol) {
            return false;
        }
    }
    return true;
}

AtomicMatrixMeasure default_functional(int N) {
    if (N < 1) {
        throw InputError("default_functional: N must be >= 1");
    }
    const Matrix id = Matrix::Identity(N, N);
    return AtomicMatrixMeasure(N, {{0.0, id}, {static_cast<double>(N + 1), 1e-3 * id}});
}

} // namespace matmom
