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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "matmom/certificates.hpp"
#include "matmom/kernels.hpp"
#include "matmom/measures.hpp"
#include "matmom/moments.hpp"
#include "matmom/random.hpp"
#include "matmom/recovery.hpp"
#include "matmom/shiftgap.hpp"
#include "matmom/spectral.hpp"

using namespace matmom;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double max_abs(const Matrix &m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const CMatrix &m) { return m.cwiseAbs().maxCoeff(); }

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

MatrixPoly random_square(Rng &rng, int n, int max_degree) {
    return hermitian_square(rng.poly(n, rng.uniform_int(0, max_degree)));
}

/// Random F of degree <= 8 that is PSD on the domain by construction.
MatrixPoly psd_on(Rng &rng, int n, Domain domain) {
    const ScalarPoly x({0.0, 1.0});
    const ScalarPoly one_minus({1.0, -1.0});
    switch (domain) {
    case Domain::Line:
        return random_square(rng, n, 4) + random_square(rng, n, 4);
    case Domain::HalfLine:
        return random_square(rng, n, 4) + x * random_square(rng, n, 3);
    case Domain::Interval:
        return random_square(rng, n, 4) + x * random_square(rng, n, 3) + one_minus * random_square(rng, n, 3) +
               (x * one_minus) * random_square(rng, n, 3);
    }
    return MatrixPoly(n);
}

AtomicMatrixMeasure separated_measure(Rng &rng, int n, int r, double lo, double hi, double separation) {
    std::vector<Atom> atoms;
    while (static_cast<int>(atoms.size()) < r) {
        const double x = rng.uniform(lo, hi);
        const bool ok = std::none_of(atoms.begin(), atoms.end(),
                                     [&](const Atom &a) { return std::abs(a.x - x) < separation; });
        if (ok) {
            atoms.push_back({x, rng.psd(n, 0.5, 10.0)});
        }
    }
    return AtomicMatrixMeasure(n, atoms);
}

std::vector<CMatrix> random_factor(Rng &rng, int n, int d) {
    std::vector<CMatrix> f;
    for (int k = 0; k <= d; ++k) {
        CMatrix b(n, n);
        b.real() = rng.gaussian(n, n);
        b.imag() = rng.gaussian(n, n);
        f.push_back(b);
    }
    return f;
}

Outcome spectral_round_trip() {
    Rng rng(101);
    Stopwatch clock;
    double worst = 0.0;
    int failures = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform_int(1, 4);
        const int d = rng.uniform_int(1, 6);
        const LaurentPoly u = laurent_from_factor(random_factor(rng, n, d));
        const double a0 = max_abs(u.coeff(0));
        try {
            const SpectralFactor f = fejer_riesz(u);
            worst = std::max(worst, f.residual / a0);
            failures += f.residual > 1e-6 * a0;
        } catch (const Error &) {
            ++failures;
        }
    }
    const double secs = clock.seconds();
    return {failures == 0 && secs <= 60.0,
            fmt("200 factors, max residual/|A_0| = %.2e (limit 1e-6), failures %d, %.3f s (limit 60 s)", worst,
                failures, secs)};
}

Outcome line_certificates() {
    Rng rng(102);
    double worst = 0.0;
    std::size_t most_factors = 0;
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
        const MatrixPoly f = psd_on(rng, rng.uniform_int(1, 3), Domain::Line);
        try {
            const SosCertificate c = decompose_line(f);
            const double r = verify_certificate(f, c);
            worst = std::max(worst, r);
            most_factors = std::max(most_factors, c.factor_count(Generator::One));
            failures += r > 1e-6 || c.factor_count(Generator::One) > 2;
        } catch (const Error &) {
            ++failures;
        }
    }
    return {failures == 0, fmt("100 inputs, max residual %.2e (limit 1e-6), max factors %zu (limit 2), failures %d",
                               worst, most_factors, failures)};
}

Outcome halfline_interval_certificates() {
    Rng rng(103);
    double worst = 0.0;
    double worst_sigma = 0.0;
    int failures = 0;
    for (Domain domain : {Domain::HalfLine, Domain::Interval}) {
        const double hi = domain == Domain::HalfLine ? 10.0 : 1.0;
        const std::vector<double> grid = kernels::chebyshev_grid(0.0, hi, 50);
        for (int t = 0; t < 50; ++t) {
            const int n = rng.uniform_int(1, 3);
            const MatrixPoly f = psd_on(rng, n, domain);
            try {
                const SosCertificate c = decompose(f, domain);
                const double r = verify_certificate(f, c);
                worst = std::max(worst, r);
                bool ok = r <= 1e-6;
                for (Generator g : kAllGenerators) {
                    if (c.factor_count(g) == 0) {
                        continue;
                    }
                    const MatrixPoly sigma = c.sigma_sum(g, n);
                    for (double x : grid) {
                        const kernels::Spectrum sp = kernels::spectrum(sigma(x));
                        const double rel = -sp.min / std::max(1.0, sp.abs_max);
                        worst_sigma = std::max(worst_sigma, rel);
                        ok = ok && rel <= 1e-8;
                    }
                }
                failures += !ok;
            } catch (const Error &) {
                ++failures;
            }
        }
    }
    return {failures == 0,
            fmt("50 half-line + 50 interval inputs, max residual %.2e (limit 1e-6), largest relative negative "
                "sigma eigenvalue %.2e (limit 1e-8), failures %d",
                worst, worst_sigma, failures)};
}

Outcome moment_soundness() {
    Rng rng(104);
    struct Class {
        const char *name;
        MomentVariant variant;
        double lo, hi;
        double outside; ///< NaN when the class has no outside
    };
    const Class classes[] = {{"R", MomentVariant::Hamburger, -2.0, 2.0, std::nan("")},
                             {"[0,inf)", MomentVariant::Stieltjes, 0.0, 3.0, -0.5},
                             {"[0,1]", MomentVariant::Hausdorff, 0.0, 1.0, 1.5}};
    std::ostringstream out;
    bool pass = true;
    for (const Class &c : classes) {
        int sound_fail = 0;
        int detect_fail = 0;
        double weakest = -INFINITY;
        for (int t = 0; t < 100; ++t) {
            const int n = rng.uniform_int(1, 3);
            const int r = rng.uniform_int(1, 4);
            const int d = 2 * (r + 1) + 2;
            AtomicMatrixMeasure mu = separated_measure(rng, n, r, c.lo, c.hi, 0.05);
            sound_fail += !check(forward_moments(mu, d), c.variant).pass;
            if (!std::isnan(c.outside)) {
                std::vector<Atom> atoms = mu.atoms();
                atoms.push_back({c.outside, rng.psd(n, 0.5, 10.0)});
                const PsdReport bad = check(forward_moments(AtomicMatrixMeasure(n, atoms), d), c.variant);
                weakest = std::max(weakest, bad.min_eigenvalue);
                detect_fail += bad.pass || bad.min_eigenvalue > -1e-4;
            }
        }
        pass = pass && sound_fail == 0 && detect_fail == 0;
        out << c.name << ": sound " << 100 - sound_fail << "/100";
        if (std::isnan(c.outside)) {
            out << ", no outside atom; ";
        } else {
            out << ", outside atom detected " << 100 - detect_fail << "/100 (weakest min_eigenvalue "
                << fmt("%.2e", weakest) << "); ";
        }
    }
    return {pass, out.str()};
}

Outcome operator_congruence() {
    Rng rng(105);
    int checked = 0;
    int failures = 0;
    for (int t = 0; t < 20; ++t) {
        const int n = rng.uniform_int(1, 3);
        const AtomicMatrixMeasure mu = separated_measure(rng, n, rng.uniform_int(1, 4), 0.0, 1.0, 0.05);
        const MomentSequence s = forward_moments(mu, 8);
        if (!check_hamburger(s).pass) {
            ++failures;
            continue;
        }
        for (MomentVariant v : {MomentVariant::Hamburger, MomentVariant::Stieltjes, MomentVariant::Hausdorff}) {
            for (int k = 0; k < 50; ++k) {
                const int m = rng.uniform_int(0, 3);
                std::vector<Matrix> tuple;
                for (int i = 0; i <= m; ++i) {
                    tuple.push_back(rng.gaussian(n, n));
                }
                ++checked;
                failures += !operator_check(s, tuple, v, 1e-9).pass;
            }
        }
    }
    return {failures == 0, fmt("20 measures x 3 variants x 50 tuples = %d checks at tol 1e-9, failures %d", checked,
                               failures)};
}

Outcome recovery_round_trip() {
    Rng rng(106);
    Stopwatch clock;
    double worst_x = 0.0;
    double worst_w = 0.0;
    int failures = 0;
    for (int t = 0; t < 100; ++t) {
        const int n = rng.uniform_int(1, 3);
        const int r = rng.uniform_int(1, 5);
        const AtomicMatrixMeasure mu = separated_measure(rng, n, r, -1.5, 1.5, 0.1);
        try {
            const RecoveryResult got = recover(forward_moments(mu, 2 * (r + 1)));
            if (got.measure.atoms().size() != mu.atoms().size()) {
                ++failures;
                continue;
            }
            bool ok = true;
            for (std::size_t j = 0; j < mu.atoms().size(); ++j) {
                const double dx = std::abs(got.measure.atoms()[j].x - mu.atoms()[j].x);
                const double dw = (got.measure.atoms()[j].weight - mu.atoms()[j].weight).norm();
                worst_x = std::max(worst_x, dx);
                worst_w = std::max(worst_w, dw);
                ok = ok && dx <= 1e-6 && dw <= 1e-6;
            }
            failures += !ok;
        } catch (const Error &) {
            ++failures;
        }
    }
    const double secs = clock.seconds();
    return {failures == 0 && secs <= 30.0,
            fmt("100 measures, max atom error %.2e, max weight error %.2e (limits 1e-6), failures %d, %.3f s "
                "(limit 30 s)",
                worst_x, worst_w, failures, secs)};
}

Outcome shift_replica() {
    std::ostringstream out;
    bool pass = true;
    for (int N : {2, 4, 6}) {
        const ShiftFamily fam = build_family(N);

        bool exact = true;
        for (int n = 0; n < N; ++n) {
            const auto c = shift_compress_exact(N, n);
            const MatrixPoly f = shift_compress(fam, n);
            for (int i = 0; i < N; ++i) {
                for (int j = 0; j < N; ++j) {
                    const bool live = i == j && i < N - n;
                    exact = exact && c[3][i][j] == (live ? Rational(1, n + i + 1) : Rational(0)) &&
                            c[2][i][j] == (live ? Rational(-1) : Rational(0)) && c[1][i][j] == Rational(0) &&
                            c[0][i][j] == Rational(0) &&
                            f.coeff(3)(i, j) == boost::rational_cast<double>(c[3][i][j]) &&
                            f.coeff(2)(i, j) == boost::rational_cast<double>(c[2][i][j]);
                }
            }
        }

        const ProbeReport probe = leading_coeff_probe(fam, 10000, static_cast<std::uint64_t>(N));
        const bool probe_ok = probe.min_eigenvalue >= -1e-9 && probe.candidate_rejected;

        Rng rng(700 + static_cast<std::uint64_t>(N));
        int chain_fail = 0;
        int decay_fail = 0;
        int trunc_fail = 0;
        for (int t = 0; t < 20; ++t) {
            std::vector<Atom> atoms{{0.0, rng.psd(N, 0.5, 10.0)}};
            const int extra = rng.uniform_int(1, 3);
            for (int k = 0; k < extra; ++k) {
                const double x = k == 0 && t % 4 == 0 ? static_cast<double>(N) : rng.uniform(N, N + 3.0);
                atoms.push_back({x, rng.psd(N, 0.5, 10.0)});
            }
            const AtomicMatrixMeasure mu(N, atoms);
            try {
                const ChainReport r = cauchy_schwarz_chain(mu, fam);
                chain_fail += !r.all_hold;
                for (int n = 0; n < N; ++n) {
                    decay_fail += r.rhs[static_cast<std::size_t>(n)] != r.rhs[0] / (n + 1);
                }
                trunc_fail += !(r.truncation_bound_holds && r.lhs <= r.truncation_bound * (1 + 1e-12));
            } catch (const Error &) {
                ++chain_fail;
            }
        }
        const bool ok = exact && probe_ok && chain_fail == 0 && decay_fail == 0 && trunc_fail == 0;
        pass = pass && ok;
        out << "N=" << N << ": exact " << (exact ? "yes" : "no") << ", probe min "
            << fmt("%.2e", probe.min_eigenvalue) << " over 1e4, chain " << 20 - chain_fail << "/20, decay "
            << (decay_fail == 0 ? "exact" : "broken") << ", truncation " << 20 - trunc_fail << "/20; ";
    }
    return {pass, out.str()};
}

Outcome scalarization() {
    Rng rng(108);
    const std::vector<double> xs = kernels::uniform_grid(-5.0, 5.0, 1000);
    std::size_t mismatches = 0;
    for (int t = 0; t < 50; ++t) {
        const int n = rng.uniform_int(1, 3);
        const MatrixPoly p = rng.poly(n, rng.uniform_int(0, 4));
        const MatrixPoly g = (p + transpose_poly(p)).with_symmetry_detected();
        mismatches += scalarize_mismatches(scalarize(g), xs).size();
    }
    return {mismatches == 0, fmt("50 inputs x 1000 points, mismatches %zu", mismatches)};
}

Outcome duality() {
    Rng rng(109);
    int pairs = 0;
    int failures = 0;
    double worst = INFINITY;
    for (int t = 0; t < 50; ++t) {
        const Domain domain = t % 3 == 0 ? Domain::Line : t % 3 == 1 ? Domain::HalfLine : Domain::Interval;
        const double lo = domain == Domain::Line ? -3.0 : 0.0;
        const double hi = domain == Domain::Interval ? 1.0 : 3.0;
        const int n = rng.uniform_int(1, 3);
        const MatrixPoly f = psd_on(rng, n, domain);
        try {
            const SosCertificate c = decompose(f, domain);
            if (verify_certificate(f, c) > 1e-6) {
                ++failures;
                continue;
            }
        } catch (const Error &) {
            ++failures;
            continue;
        }
        const AtomicMatrixMeasure mu = separated_measure(rng, n, rng.uniform_int(1, 5), lo, hi, 0.01);
        double scale = 0.0;
        for (const Atom &a : mu.atoms()) {
            scale += a.weight.norm() * f(a.x).norm();
        }
        const double value = integrate_trace(f, mu);
        worst = std::min(worst, value / std::max(scale, 1e-300));
        failures += value < -1e-8 * scale;
        ++pairs;
    }
    return {failures == 0,
            fmt("%d certified pairs, min L(F)/scale = %.2e (limit -1e-8), failures %d", pairs, worst, failures)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"spectral round trip", spectral_round_trip},
        {"line certificates", line_certificates},
        {"half-line and interval certificates", halfline_interval_certificates},
        {"moment criteria soundness", moment_soundness},
        {"operator-version check", operator_congruence},
        {"recovery round trip", recovery_round_trip},
        {"shift counterexample replica", shift_replica},
        {"scalarization", scalarization},
        {"duality smoke test", duality},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("uncaught: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %zu [%s] %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
