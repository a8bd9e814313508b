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

#include "matmom/json_io.hpp"

#include <cmath>

namespace matmom::io {

namespace {

std::string join(const std::string &path, const std::string &key) { return path.empty() ? key : path + "." + key; }

std::string index(const std::string &path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw InputError((path.empty() ? std::string("document") : path) + ": " + what);
}

const Json &field(const Json &j, const std::string &key, const std::string &path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail(join(path, key), "missing field");
    }
    return *it;
}

const Json &array_field(const Json &j, const std::string &key, const std::string &path) {
    const Json &a = field(j, key, path);
    if (!a.is_array()) {
        fail(join(path, key), "expected an array");
    }
    return a;
}

int int_field(const Json &j, const std::string &key, const std::string &path) {
    const Json &v = field(j, key, path);
    if (!v.is_number_integer()) {
        fail(join(path, key), "expected an integer");
    }
    return v.get<int>();
}

double number(const Json &v, const std::string &path) {
    if (!v.is_number()) {
        fail(path, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        fail(path, "not finite");
    }
    return d;
}

std::vector<Matrix> matrix_list(const Json &a, const std::string &path, int rows, int cols) {
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        Matrix m = matrix_from_json(a[k], index(path, k));
        if (m.rows() != rows || m.cols() != cols) {
            fail(index(path, k), "expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
        }
        out.push_back(std::move(m));
    }
    return out;
}

template <typename Fn>
auto rethrow_at(const std::string &path, Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InputError &e) {
        fail(path, e.what());
    }
}

Json versioned(Json body) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    for (auto &[k, v] : body.items()) {
        out[k] = v;
    }
    return out;
}

Json optional_int(const std::optional<int> &v) { return v ? Json(*v) : Json(nullptr); }

} // namespace

Json parse(const std::string &text, const std::string &source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(source + ": malformed JSON (" + e.what() + ")");
    }
}

Json to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        fail(path, "expected a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array()) {
        fail(index(path, 0), "expected an array");
    }
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array()) {
            fail(index(path, i), "expected an array");
        }
        if (j[i].size() != cols) {
            fail(index(path, i), "ragged row");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = number(j[i][k], index(index(path, i), k));
        }
    }
    return m;
}

Json to_json(const MatrixPoly &p) {
    Json j;
    j["n"] = p.size();
    j["symmetric"] = p.is_symmetric();
    Json c = Json::array();
    for (const Matrix &m : p.coeffs()) {
        c.push_back(to_json(m));
    }
    j["coeffs"] = std::move(c);
    return j;
}

MatrixPoly poly_from_json(const Json &j, const std::string &path) {
    const int n = int_field(j, "n", path);
    if (n <= 0) {
        fail(join(path, "n"), "must be positive");
    }
    bool symmetric = false;
    if (j.contains("symmetric")) {
        if (!j["symmetric"].is_boolean()) {
            fail(join(path, "symmetric"), "expected a boolean");
        }
        symmetric = j["symmetric"].get<bool>();
    }
    const std::string cpath = join(path, "coeffs");
    std::vector<Matrix> coeffs = matrix_list(array_field(j, "coeffs", path), cpath, n, n);
    if (coeffs.empty()) {
        return MatrixPoly(n);
    }
    return rethrow_at(cpath, [&] { return MatrixPoly(std::move(coeffs), symmetric); });
}

Json to_json(const MomentSequence &s) {
    Json j;
    j["n"] = s.size();
    Json m = Json::array();
    for (const Matrix &x : s.moments()) {
        m.push_back(to_json(x));
    }
    j["moments"] = std::move(m);
    return j;
}

MomentSequence moments_from_json(const Json &j) {
    const int n = int_field(j, "n", "");
    if (n <= 0) {
        fail("n", "must be positive");
    }
    std::vector<Matrix> m = matrix_list(array_field(j, "moments", ""), "moments", n, n);
    if (m.empty()) {
        fail("moments", "needs at least S_0");
    }
    return rethrow_at("moments", [&] { return MomentSequence(n, std::move(m)); });
}

Json to_json(const LaurentPoly &u) {
    Json j;
    j["n"] = u.size();
    j["band"] = u.band();
    Json re = Json::array();
    Json im = Json::array();
    for (const CMatrix &c : u.coeffs()) {
        re.push_back(to_json(c.real()));
        im.push_back(to_json(c.imag()));
    }
    j["coeffs_re"] = std::move(re);
    j["coeffs_im"] = std::move(im);
    return j;
}

LaurentPoly laurent_from_json(const Json &j) {
    const int n = int_field(j, "n", "");
    const int band = int_field(j, "band", "");
    if (n <= 0) {
        fail("n", "must be positive");
    }
    if (band < 0) {
        fail("band", "must be >= 0");
    }
    const auto count = static_cast<std::size_t>(2 * band + 1);
    const Json &re_j = array_field(j, "coeffs_re", "");
    if (re_j.size() != count) {
        fail("coeffs_re", "expected " + std::to_string(count) + " coefficients for band " + std::to_string(band));
    }
    std::vector<Matrix> re = matrix_list(re_j, "coeffs_re", n, n);
    std::vector<Matrix> im;
    if (j.contains("coeffs_im")) {
        const Json &im_j = array_field(j, "coeffs_im", "");
        if (im_j.size() != count) {
            fail("coeffs_im", "expected " + std::to_string(count) + " coefficients for band " + std::to_string(band));
        }
        im = matrix_list(im_j, "coeffs_im", n, n);
    } else {
        im.assign(count, Matrix::Zero(n, n));
    }
    std::vector<CMatrix> c;
    for (std::size_t k = 0; k < count; ++k) {
        CMatrix m(n, n);
        m.real() = re[k];
        m.imag() = im[k];
        c.push_back(std::move(m));
    }
    return LaurentPoly(n, band, std::move(c));
}

Json to_json(const AtomicMatrixMeasure &mu) {
    Json j;
    j["n"] = mu.size();
    Json atoms = Json::array();
    for (const Atom &a : mu.atoms()) {
        atoms.push_back(Json{{"x", a.x}, {"W", to_json(a.weight)}});
    }
    j["atoms"] = std::move(atoms);
    return j;
}

AtomicMatrixMeasure measure_from_json(const Json &j) {
    const int n = int_field(j, "n", "");
    if (n <= 0) {
        fail("n", "must be positive");
    }
    const Json &aj = array_field(j, "atoms", "");
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < aj.size(); ++k) {
        const std::string p = index("atoms", k);
        Atom a;
        a.x = number(field(aj[k], "x", p), join(p, "x"));
        a.weight = matrix_from_json(field(aj[k], "W", p), join(p, "W"));
        if (a.weight.rows() != n || a.weight.cols() != n) {
            fail(join(p, "W"), "expected " + std::to_string(n) + "x" + std::to_string(n));
        }
        atoms.push_back(std::move(a));
    }
    return rethrow_at("atoms", [&] { return AtomicMatrixMeasure(n, std::move(atoms)); });
}

Json to_json(const PositiveMapMeasure &m) {
    Json j;
    j["h_dim"] = m.h_dim();
    j["k_dim"] = m.k_dim();
    Json atoms = Json::array();
    for (const auto &a : m.kraus_atoms()) {
        Json kr = Json::array();
        for (const Matrix &v : a.kraus) {
            kr.push_back(to_json(v));
        }
        atoms.push_back(Json{{"x", a.x}, {"kraus", std::move(kr)}});
    }
    j["atoms"] = std::move(atoms);
    return j;
}

bool is_map_measure(const Json &j) { return j.is_object() && j.contains("h_dim"); }

PositiveMapMeasure map_measure_from_json(const Json &j) {
    const int h = int_field(j, "h_dim", "");
    const int k = int_field(j, "k_dim", "");
    if (h <= 0 || k <= 0) {
        fail(h <= 0 ? "h_dim" : "k_dim", "must be positive");
    }
    const Json &aj = array_field(j, "atoms", "");
    std::vector<PositiveMapMeasure::KrausAtom> atoms;
    for (std::size_t i = 0; i < aj.size(); ++i) {
        const std::string p = index("atoms", i);
        PositiveMapMeasure::KrausAtom a;
        a.x = number(field(aj[i], "x", p), join(p, "x"));
        a.kraus = matrix_list(array_field(aj[i], "kraus", p), join(p, "kraus"), h, k);
        atoms.push_back(std::move(a));
    }
    return PositiveMapMeasure::from_kraus(h, k, std::move(atoms));
}

Json to_json(const SosCertificate &c) {
    Json j;
    j["variant"] = to_string(c.variant);
    Json sigma = Json::object();
    for (Generator g : kAllGenerators) {
        Json list = Json::array();
        if (auto it = c.sigma.find(g); it != c.sigma.end()) {
            for (const MatrixPoly &p : it->second) {
                list.push_back(to_json(p));
            }
        }
        sigma[to_string(g)] = std::move(list);
    }
    j["sigma"] = std::move(sigma);
    j["residual"] = c.residual;
    return j;
}

SosCertificate certificate_from_json(const Json &j) {
    SosCertificate c;
    const Json &v = field(j, "variant", "");
    if (!v.is_string()) {
        fail("variant", "expected a string");
    }
    c.variant = rethrow_at("variant", [&] { return parse_domain(v.get<std::string>()); });
    const Json &sigma = field(j, "sigma", "");
    if (!sigma.is_object()) {
        fail("sigma", "expected an object keyed by generator");
    }
    for (auto it = sigma.begin(); it != sigma.end(); ++it) {
        const std::string p = join("sigma", "\"" + it.key() + "\"");
        const Generator g = rethrow_at(p, [&] { return parse_generator(it.key()); });
        if (!it.value().is_array()) {
            fail(p, "expected an array of polynomials");
        }
        for (std::size_t k = 0; k < it.value().size(); ++k) {
            c.sigma[g].push_back(poly_from_json(it.value()[k], index(p, k)));
        }
    }
    if (j.contains("residual")) {
        c.residual = number(j["residual"], "residual");
    }
    return c;
}

Json report(const PsdReport &r, MomentVariant variant) {
    return versioned(Json{{"variant", to_string(variant)},
                          {"pass", r.pass},
                          {"min_eigenvalue", r.min_eigenvalue},
                          {"tested_orders", r.tested_orders},
                          {"failing_order", optional_int(r.failing_order)},
                          {"failing_family", r.failing_family.empty() ? Json(nullptr) : Json(r.failing_family)}});
}

Json report(const SpectralFactor &f) {
    Json re = Json::array();
    Json im = Json::array();
    for (const CMatrix &b : f.coeffs) {
        re.push_back(to_json(b.real()));
        im.push_back(to_json(b.imag()));
    }
    return versioned(Json{{"degree", static_cast<int>(f.coeffs.size()) - 1},
                          {"coeffs_re", std::move(re)},
                          {"coeffs_im", std::move(im)},
                          {"residual", f.residual},
                          {"epsilon_used", f.epsilon_used},
                          {"toeplitz_order", f.toeplitz_order}});
}

Json report(const RecoveryResult &r) {
    return versioned(Json{{"measure", to_json(r.measure)},
                          {"moment_residual", r.moment_residual},
                          {"rank_used", r.rank_used}});
}

Json report(const ProbeReport &r) {
    return versioned(Json{{"trials", r.trials},
                          {"min_eigenvalue", r.min_eigenvalue},
                          {"min_relative", r.min_relative},
                          {"violations", r.violations},
                          {"max_degree", r.max_degree},
                          {"candidate_min_eigenvalue", r.candidate_min_eigenvalue},
                          {"candidate_rejected", r.candidate_rejected}});
}

Json report(const ChainReport &r) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.n_values.size(); ++i) {
        rows.push_back(Json{{"n", r.n_values[i]},
                            {"lhs_compressed", r.lhs_compressed[i]},
                            {"mid", r.mid[i]},
                            {"cs_bound", r.cs_bound[i]},
                            {"rhs", r.rhs[i]}});
    }
    return versioned(Json{{"lhs", r.lhs},
                          {"table", std::move(rows)},
                          {"all_hold", r.all_hold},
                          {"base", r.base},
                          {"truncation_bound", r.truncation_bound},
                          {"truncation_ratio", r.truncation_ratio},
                          {"truncation_bound_holds", r.truncation_bound_holds}});
}

Json report(const ModuleAudit &a) {
    return versioned(Json{{"pass", a.pass},
                          {"structured_checked", a.structured_checked},
                          {"random_checked", a.random_checked},
                          {"min_normalized", a.min_normalized},
                          {"witness_label", a.witness ? Json(a.witness_label) : Json(nullptr)},
                          {"witness_value", a.witness ? Json(a.witness_value) : Json(nullptr)},
                          {"witness", a.witness ? to_json(*a.witness) : Json(nullptr)}});
}

} // namespace matmom::io
