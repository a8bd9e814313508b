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

#include <doctest.h>

#include "matmom/json_io.hpp"
#include "matmom/random.hpp"
#include "support.hpp"

using namespace matmom;
using namespace matmom::test;
using matmom::io::Json;

namespace {

std::string error_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const InputError &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("matrix polynomial round trip is exact") {
    Rng rng(1);
    const MatrixPoly p = rng.poly(3, 4);
    const MatrixPoly q = io::poly_from_json(io::parse(io::to_json(p).dump(), "mem"));
    CHECK(coeff_distance(p, q) == 0.0);

    const MatrixPoly s = hermitian_square(p);
    const MatrixPoly t = io::poly_from_json(io::to_json(s));
    CHECK(t.is_symmetric());
    CHECK(coeff_distance(s, t) == 0.0);
}

TEST_CASE("parser errors name the field") {
    CHECK(error_of([] { io::poly_from_json(Json::parse(R"({"coeffs": []})")); }).find("n: missing field") !=
          std::string::npos);
    CHECK(error_of([] { io::poly_from_json(Json::parse(R"({"n": 2, "coeffs": [[[1, 2], [3]]]})")); })
              .find("coeffs[0][1]: ragged row") != std::string::npos);
    CHECK(error_of([] { io::poly_from_json(Json::parse(R"({"n": 2, "coeffs": [[[1, 2, 3], [3, 4, 5]]]})")); })
              .find("coeffs[0]: expected 2x2") != std::string::npos);
    CHECK(error_of([] { io::poly_from_json(Json::parse(R"({"n": 1, "coeffs": [[["a"]]]})")); })
              .find("coeffs[0][0][0]: expected a number") != std::string::npos);
    CHECK(error_of([] { io::poly_from_json(Json::parse(R"({"n": 2, "symmetric": true, "coeffs": [[[1, 2], [3, 4]]]})")); })
              .find("coeffs") != std::string::npos);
    CHECK(error_of([] { io::parse("{nope", "f.json"); }).find("f.json: malformed JSON") != std::string::npos);
}

TEST_CASE("moments, measures and laurent polynomials round trip") {
    const MomentSequence s(2, {Matrix::Identity(2, 2), mat({{0, 1}, {1, 0}})});
    const MomentSequence s2 = io::moments_from_json(io::to_json(s));
    CHECK(s2.moments() == s.moments());

    const AtomicMatrixMeasure mu(2, {{-0.25, mat({{2, 1}, {1, 1}})}, {3.0, Matrix::Identity(2, 2)}});
    const AtomicMatrixMeasure mu2 = io::measure_from_json(io::to_json(mu));
    REQUIRE(mu2.atoms().size() == 2);
    CHECK(mu2.atoms()[0].x == -0.25);
    CHECK(mu2.atoms()[0].weight == mu.atoms()[0].weight);
    CHECK_FALSE(io::is_map_measure(io::to_json(mu)));

    LaurentPoly u(2, 1);
    u.coeff(0) = CMatrix::Identity(2, 2) * 3.0;
    u.coeff(1)(0, 1) = Complex(0.5, -0.25);
    u.coeff(-1) = u.coeff(1).adjoint();
    const LaurentPoly v = io::laurent_from_json(io::to_json(u));
    for (int k = -1; k <= 1; ++k) {
        CHECK(v.coeff(k) == u.coeff(k));
    }
    CHECK(error_of([] { io::laurent_from_json(Json::parse(R"({"n": 1, "band": 1, "coeffs_re": [[[1]]]})")); })
              .find("coeffs_re: expected 3") != std::string::npos);
    CHECK(error_of([] { io::measure_from_json(Json::parse(R"({"n": 1, "atoms": [{"x": 0, "W": [[-1]]}]})")); })
              .find("positive semidefinite") != std::string::npos);
}

TEST_CASE("map measure and certificate round trip") {
    const auto m = PositiveMapMeasure::from_kraus(2, 1, {{3.0, {mat({{1}, {0}})}}});
    const Json j = io::to_json(m);
    CHECK(io::is_map_measure(j));
    const PositiveMapMeasure m2 = io::map_measure_from_json(j);
    CHECK(m2.h_dim() == 2);
    CHECK(m2.kraus_atoms()[0].kraus[0] == mat({{1}, {0}}));

    SosCertificate c;
    c.variant = Domain::Interval;
    c.sigma[Generator::XOneMinusX] = {spoly({1})};
    c.residual = 1e-15;
    const Json cj = io::to_json(c);
    CHECK(cj["sigma"].contains("x(1-x)"));
    CHECK(cj["sigma"]["1"].empty());
    const SosCertificate c2 = io::certificate_from_json(cj);
    CHECK(c2.variant == Domain::Interval);
    CHECK(c2.factor_count(Generator::XOneMinusX) == 1);
    CHECK(error_of([] { io::certificate_from_json(Json::parse(R"({"variant": "line", "sigma": {"y": []}})")); })
              .find("unknown generator") != std::string::npos);
}

TEST_CASE("reports carry a schema version") {
    PsdReport r;
    r.failing_order = 1;
    const Json j = io::report(r, MomentVariant::Stieltjes);
    CHECK(j["schema_version"] == 1);
    CHECK(j["failing_order"] == 1);
    CHECK(io::report(ProbeReport{})["schema_version"] == 1);
    CHECK(io::report(ChainReport{})["schema_version"] == 1);
}
