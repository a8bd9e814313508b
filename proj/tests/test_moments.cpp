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

#include <Eigen/Eigenvalues>

#include "matmom/measures.hpp"
#include "matmom/moments.hpp"
#include "matmom/random.hpp"
#include "support.hpp"

using namespace matmom;
using namespace matmom::test;

namespace {

const Matrix I2 = Matrix::Identity(2, 2);
const Matrix Z2 = Matrix::Zero(2, 2);

// ½I₂δ_{−1} + ½I₂δ_{+1}
AtomicMatrixMeasure plus_minus() { return AtomicMatrixMeasure(2, {{-1.0, 0.5 * I2}, {1.0, 0.5 * I2}}); }

MomentSequence constant_moments(const Matrix &w, int d, double ratio) {
    std::vector<Matrix> s;
    double f = 1.0;
    for (int p = 0; p <= d; ++p) {
        s.push_back(f * w);
        f *= ratio;
    }
    return MomentSequence(static_cast<int>(w.rows()), s);
}

AtomicMatrixMeasure random_measure(Rng &rng, int n, double lo, double hi) {
    std::vector<Atom> atoms;
    const int r = rng.uniform_int(1, 4);
    for (int j = 0; j < r; ++j) {
        atoms.push_back({rng.uniform(lo, hi), rng.wishart(n, rng.uniform_int(1, n))});
    }
    return AtomicMatrixMeasure(n, atoms);
}

} // namespace

TEST_CASE("moment sequence validation") {
    CHECK_THROWS_AS(MomentSequence(2, {Matrix::Zero(3, 3)}), InputError);
    CHECK_THROWS_AS(MomentSequence(2, {mat({{1, 2}, {0, 1}})}), InputError);
    CHECK_THROWS_AS(MomentSequence(2, {}), InputError);
}

TEST_CASE("block_hankel examples") {
    const MomentSequence s(2, {I2, Z2, I2});
    CHECK(block_hankel(s, 1, 0) == Matrix::Identity(4, 4));
    CHECK(block_hankel(s, 0, 1) == Z2);
    CHECK(block_hankel(s, 0, 0) == I2);
    CHECK_THROWS_AS(block_hankel(s, 1, 1), InputError);
    CHECK_THROWS_AS(block_hankel(s, 0, 3), InputError);
}

TEST_CASE("block_hankel is exactly symmetric") {
    Rng rng(5);
    const MomentSequence s = forward_moments(random_measure(rng, 3, -2, 2), 8);
    for (int shift = 0; shift <= 2; ++shift) {
        const Matrix h = block_hankel(s, 3, shift);
        CHECK(h == h.transpose());
    }
}

TEST_CASE("hamburger examples") {
    CHECK(check_hamburger(forward_moments(plus_minus(), 4)).pass);

    // [[I, I],[I, 0]] has eigenvalue (1 − √5)/2
    const PsdReport r = check_hamburger(MomentSequence(2, {I2, I2, Z2}));
    CHECK_FALSE(r.pass);
    CHECK(r.min_eigenvalue == doctest::Approx((1.0 - std::sqrt(5.0)) / 2.0));
    CHECK(r.failing_order == 1);

    CHECK(check_hamburger(MomentSequence(2, {Z2, Z2, Z2, Z2, Z2})).pass);
}

TEST_CASE("stieltjes examples") {
    CHECK(check_stieltjes(constant_moments(I2, 4, 1.0)).pass);

    const PsdReport r = check_stieltjes(MomentSequence(2, {I2, Z2, I2, Z2}));
    CHECK_FALSE(r.pass);
    CHECK(r.min_eigenvalue == doctest::Approx(-1.0));
    CHECK(r.failing_family == "shifted");
    // shift-1 order 0 is S_1 = 0, which passes; the first failure is the 2x2 block at m = 1
    CHECK(r.failing_order == 1);

    CHECK(check_stieltjes(MomentSequence(2, {Z2, Z2, Z2, Z2})).pass);
}

TEST_CASE("hausdorff examples") {
    CHECK(check_hausdorff(constant_moments(I2, 4, 0.5)).pass);

    const PsdReport r = check_hausdorff(constant_moments(I2, 2, 2.0));
    CHECK_FALSE(r.pass);
    CHECK(r.failing_order == 0);
    CHECK(r.failing_family == "diff");
    // S_1 − S_2 = −2I is also negative; the report keeps the global minimum
    CHECK(r.min_eigenvalue == doctest::Approx(-2.0));

    CHECK(check_hausdorff(MomentSequence(2, {I2, Z2, Z2, Z2})).pass);
    CHECK_THROWS_AS(check_hausdorff(MomentSequence(2, {I2, Z2})), InputError);
}

TEST_CASE("min_eigenvalue agrees with an independent eigen solve") {
    const MomentSequence s(2, {I2, I2, Z2});
    Eigen::SelfAdjointEigenSolver<Matrix> es(block_hankel(s, 1, 0));
    CHECK(check_hamburger(s).min_eigenvalue == doctest::Approx(es.eigenvalues()(0)));
}

TEST_CASE("operator_check examples") {
    // n = 1 with A_i = E_11 reduces to the scalar Hankel
    const MomentSequence s1(1, {scalar(1), scalar(2), scalar(5)});
    const std::vector<Matrix> e11{scalar(1), scalar(1)};
    const PsdReport a = operator_check(s1, e11, MomentVariant::Hamburger);
    const PsdReport b = check_hamburger(s1);
    CHECK(a.pass == b.pass);

    const MomentSequence s = forward_moments(plus_minus(), 2);
    const std::vector<Matrix> ii{I2, I2};
    const PsdReport h = operator_check(s, ii, MomentVariant::Hamburger);
    CHECK(h.pass);
    CHECK(h.min_eigenvalue == doctest::Approx(2.0));

    const MomentSequence s3 = forward_moments(plus_minus(), 3);
    const PsdReport st = operator_check(s3, ii, MomentVariant::Stieltjes);
    CHECK_FALSE(st.pass);
    CHECK(st.min_eigenvalue == doctest::Approx(-2.0));
}

TEST_CASE("forward moments of supported measures pass the matching checker") {
    Rng rng(99);
    for (int t = 0; t < 40; ++t) {
        const int n = rng.uniform_int(1, 3);
        CHECK(check_hamburger(forward_moments(random_measure(rng, n, -3, 3), 6)).pass);
        CHECK(check_stieltjes(forward_moments(random_measure(rng, n, 0, 3), 7)).pass);
        CHECK(check_hausdorff(forward_moments(random_measure(rng, n, 0, 1), 6)).pass);
    }
}

TEST_CASE("operator_check is implied by the block check") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const int n = rng.uniform_int(1, 3);
        const MomentSequence s = forward_moments(random_measure(rng, n, -2, 2), 4);
        REQUIRE(check_hamburger(s).pass);
        std::vector<Matrix> tuple;
        for (int i = 0; i <= 2; ++i) {
            tuple.push_back(rng.gaussian(n, n));
        }
        CHECK(operator_check(s, tuple, MomentVariant::Hamburger, 1e-9).pass);
    }
}

TEST_CASE("variant names round trip") {
    for (MomentVariant v : {MomentVariant::Hamburger, MomentVariant::Stieltjes, MomentVariant::Hausdorff}) {
        CHECK(parse_variant(to_string(v)) == v);
    }
    CHECK_THROWS_AS(parse_variant("riesz"), InputError);
}
