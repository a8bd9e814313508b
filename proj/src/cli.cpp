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

#include "matmom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "matmom/json_io.hpp"

namespace matmom::cli {

namespace {

using io::Json;

std::string read_source(const std::string &path, std::istream &in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path);
    if (!f) {
        throw InputError(path + ": cannot open file");
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Json load(const std::string &path, std::istream &in) { return io::parse(read_source(path, in), path); }

// Re-prefixes parse errors with the file they came from.
template <typename Fn>
auto from_file(const std::string &path, std::istream &in, Fn &&fn) {
    const Json j = load(path, in);
    try {
        return fn(j);
    } catch (const InputError &e) {
        throw InputError(path + ": " + e.what());
    }
}

CommandResult emit(const Json &report, bool pass) {
    return {pass ? kPass : kFail, report.dump(2) + "\n", ""};
}

Json failure(const std::string &kind, const std::string &message) {
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["pass"] = false;
    j["error"] = kind;
    j["message"] = message;
    return j;
}

std::string certificate_kind(CertificateError::Kind k) {
    switch (k) {
    case CertificateError::Kind::OddDegree:
        return "OddDegree";
    case CertificateError::Kind::NotPsdOnLine:
        return "NotPsdOnLine";
    case CertificateError::Kind::NotPsdOnHalfLine:
        return "NotPsdOnHalfLine";
    case CertificateError::Kind::NotPsdOnInterval:
        return "NotPsdOnInterval";
    case CertificateError::Kind::Consistency:
        return "Consistency";
    }
    return "";
}

std::string recovery_kind(RecoveryError::Kind k) {
    switch (k) {
    case RecoveryError::Kind::HankelNotPsd:
        return "HankelNotPsd";
    case RecoveryError::Kind::RankDeficiencyAmbiguous:
        return "RankDeficiencyAmbiguous";
    case RecoveryError::Kind::ComplexAtoms:
        return "ComplexAtoms";
    }
    return "";
}

Json spectral_failure(const SpectralError &e) {
    Json j = failure(e.kind() == SpectralError::Kind::NotPsdOnCircle ? "NotPsdOnCircle" : "NoConvergence", e.what());
    j["value"] = e.value();
    return j;
}

struct Options {
    std::string variant = "hamburger";
    std::string moments;
    std::string laurent;
    std::string poly;
    std::string domain;
    std::string cert;
    std::string measure;
    std::string functional;
    double psd_tol = kDefaultPsdTol;
    double factor_tol = kDefaultFactorTol;
    int max_order = kDefaultMaxOrder;
    double cert_tol = kDefaultCertTol;
    double recovery_tol = kDefaultRecoveryTol;
    double collapse_tol = 1e-9;
    int dim = 4;
    int trials = 1000;
    int audit_trials = 256;
    std::uint64_t seed = 0;
};

CommandResult cmd_check(const Options &o, std::istream &in) {
    const MomentVariant v = parse_variant(o.variant);
    const MomentSequence s = from_file(o.moments, in, io::moments_from_json);
    const PsdReport r = check(s, v, o.psd_tol);
    return emit(io::report(r, v), r.pass);
}

CommandResult cmd_factor(const Options &o, std::istream &in) {
    const LaurentPoly u = from_file(o.laurent, in, io::laurent_from_json);
    try {
        const SpectralFactor f = fejer_riesz(u, o.factor_tol, o.max_order);
        Json j = io::report(f);
        j["pass"] = true;
        return emit(j, true);
    } catch (const SpectralError &e) {
        return emit(spectral_failure(e), false);
    }
}

CommandResult cmd_certify(const Options &o, std::istream &in) {
    const Domain d = parse_domain(o.domain);
    const MatrixPoly f = from_file(o.poly, in, [](const Json &j) { return io::poly_from_json(j); });
    try {
        const SosCertificate c = decompose(f, d, o.cert_tol);
        Json j;
        j["schema_version"] = io::kSchemaVersion;
        const Json body = io::to_json(c);
        for (const auto &[k, v] : body.items()) {
            j[k] = v;
        }
        return emit(j, true);
    } catch (const CertificateError &e) {
        return emit(failure(certificate_kind(e.kind()), e.what()), false);
    } catch (const SpectralError &e) {
        return emit(spectral_failure(e), false);
    }
}

CommandResult cmd_verify(const Options &o, std::istream &in) {
    const MatrixPoly f = from_file(o.poly, in, [](const Json &j) { return io::poly_from_json(j); });
    const SosCertificate c = from_file(o.cert, in, io::certificate_from_json);
    const double residual = verify_certificate(f, c);
    const double bound = o.cert_tol * std::max(1.0, f.coeff_norm());
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["variant"] = to_string(c.variant);
    j["residual"] = residual;
    j["bound"] = bound;
    j["pass"] = residual <= bound;
    return emit(j, residual <= bound);
}

CommandResult cmd_recover(const Options &o, std::istream &in) {
    const MomentSequence s = from_file(o.moments, in, io::moments_from_json);
    try {
        Json j = io::report(recover(s, o.recovery_tol));
        j["pass"] = true;
        return emit(j, true);
    } catch (const RecoveryError &e) {
        return emit(failure(recovery_kind(e.kind()), e.what()), false);
    }
}

CommandResult cmd_integrate(const Options &o, std::istream &in) {
    const MatrixPoly f = from_file(o.poly, in, [](const Json &j) { return io::poly_from_json(j); });
    const Json mj = load(o.measure, in);
    Json j;
    j["schema_version"] = io::kSchemaVersion;
    try {
        if (io::is_map_measure(mj)) {
            j["kind"] = "map";
            j["value"] = io::to_json(integrate_map(f, io::map_measure_from_json(mj)));
        } else {
            j["kind"] = "trace";
            j["value"] = integrate_trace(f, io::measure_from_json(mj));
        }
    } catch (const InputError &e) {
        throw InputError(o.measure + ": " + e.what());
    }
    return emit(j, true);
}

CommandResult cmd_shiftgap(const Options &o, std::istream &in) {
    const ShiftFamily fam = build_family(o.dim);
    const AtomicMatrixMeasure mu = o.functional.empty()
                                       ? default_functional(o.dim)
                                       : from_file(o.functional, in, io::measure_from_json);
    if (mu.size() != o.dim) {
        throw InputError("functional.n: expected " + std::to_string(o.dim) + ", got " + std::to_string(mu.size()));
    }
    if (o.trials < 1) {
        throw InputError("--trials: must be >= 1");
    }
    const ProbeReport probe = leading_coeff_probe(fam, o.trials, o.seed);
    const ModuleAudit audit = module_audit(mu, fam, o.audit_trials, o.seed);

    Json j;
    j["schema_version"] = io::kSchemaVersion;
    j["N"] = o.dim;
    j["seed"] = o.seed;
    j["probe"] = io::report(probe);
    j["audit"] = io::report(audit);
    bool pass = probe.violations == 0 && probe.candidate_rejected && audit.pass;
    if (audit.pass) {
        const ChainReport chain = cauchy_schwarz_chain(mu, fam, o.audit_trials, o.seed);
        j["chain"] = io::report(chain);
        pass = pass && chain.all_hold && chain.truncation_bound_holds;
        const bool inside = std::all_of(mu.atoms().begin(), mu.atoms().end(),
                                        [&](const Atom &a) { return a.x >= 0.0 && a.x <= o.dim; });
        j["support_collapse"] =
            inside ? Json(support_collapse_check(mu, fam, o.collapse_tol, o.audit_trials, o.seed)) : Json(nullptr);
    } else {
        j["chain"] = nullptr;
        j["support_collapse"] = nullptr;
    }
    j["pass"] = pass;
    return emit(j, pass);
}

} // namespace

CommandResult run(const std::vector<std::string> &args, std::istream &in) {
    CLI::App app{"Matrix moment problems: criteria, certificates, recovery", "momentctl"};
    app.require_subcommand(1, 1);
    Options o;

    auto *check = app.add_subcommand("check", "block Hankel moment criteria");
    check->add_option("--variant", o.variant, "hamburger|stieltjes|hausdorff")
        ->check(CLI::IsMember({"hamburger", "stieltjes", "hausdorff"}));
    check->add_option("--moments", o.moments, "moment sequence JSON (- for stdin)")->required();
    check->add_option("--tol", o.psd_tol, "relative PSD tolerance")->capture_default_str();

    auto *factor = app.add_subcommand("factor", "Fejer-Riesz spectral factorization");
    factor->add_option("--laurent", o.laurent, "Laurent polynomial JSON (- for stdin)")->required();
    factor->add_option("--tol", o.factor_tol, "relative residual target")->capture_default_str();
    factor->add_option("--max-order", o.max_order, "largest Toeplitz order")->capture_default_str();

    auto *certify = app.add_subcommand("certify", "sum-of-squares certificate");
    certify->add_option("--poly", o.poly, "matrix polynomial JSON (- for stdin)")->required();
    certify->add_option("--domain", o.domain, "line|halfline|interval")
        ->required()
        ->check(CLI::IsMember({"line", "halfline", "interval"}));
    certify->add_option("--tol", o.cert_tol, "relative residual tolerance")->capture_default_str();

    auto *verify = app.add_subcommand("verify", "check a certificate against a polynomial");
    verify->add_option("--poly", o.poly, "matrix polynomial JSON")->required();
    verify->add_option("--cert", o.cert, "certificate JSON (- for stdin)")->required();
    verify->add_option("--tol", o.cert_tol, "relative residual tolerance")->capture_default_str();

    auto *recov = app.add_subcommand("recover", "atomic measure from moments");
    recov->add_option("--moments", o.moments, "moment sequence JSON (- for stdin)")->required();
    recov->add_option("--tol", o.recovery_tol, "relative rank cut")->capture_default_str();

    auto *integ = app.add_subcommand("integrate", "integrate a polynomial against a measure");
    integ->add_option("--poly", o.poly, "matrix polynomial JSON")->required();
    integ->add_option("--measure", o.measure, "atomic or map measure JSON")->required();

    auto *shift = app.add_subcommand("shiftgap", "finite shift-operator counterexample");
    shift->add_option("--dim", o.dim, "truncation dimension N")->required()->check(CLI::PositiveNumber);
    shift->add_option("--trials", o.trials, "probe trials")->capture_default_str();
    shift->add_option("--seed", o.seed, "random seed")->capture_default_str();
    shift->add_option("--functional", o.functional, "atomic measure JSON for L");
    shift->add_option("--audit-trials", o.audit_trials, "random module elements in the audit")->capture_default_str();
    shift->add_option("--tol", o.collapse_tol, "support collapse tolerance")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        return {kPass, app.help(), ""};
    } catch (const CLI::ParseError &e) {
        return {kInputError, "", e.what()};
    }

    try {
        if (check->parsed()) {
            return cmd_check(o, in);
        }
        if (factor->parsed()) {
            return cmd_factor(o, in);
        }
        if (certify->parsed()) {
            return cmd_certify(o, in);
        }
        if (verify->parsed()) {
            return cmd_verify(o, in);
        }
        if (recov->parsed()) {
            return cmd_recover(o, in);
        }
        if (integ->parsed()) {
            return cmd_integrate(o, in);
        }
        return cmd_shiftgap(o, in);
    } catch (const InputError &e) {
        return {kInputError, "", e.what()};
    }
}

} // namespace matmom::cli
