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

#include "matmom/polymat.hpp"
#include "matmom/random.hpp"
#include "support.hpp"

using namespace matmom;
using namespace matmom::test;

namespace {

// [[x²+1, x],[x, 1]]
MatrixPoly two_by_two() {
    return mpoly({mat({{1, 0}, {0, 1}}), mat({{0, 1}, {1, 0}}), mat({{1, 0}, {0, 0}})}, true);
}

} // namespace

TEST_CASE("construction validates shape and symmetry") {
    CHECK_THROWS_AS(MatrixPoly(std::vector<Matrix>{Matrix::Zero(2, 3)}), InputError);
    CHECK_THROWS_AS(MatrixPoly(std::vector<Matrix>{Matrix::Zero(2, 2), Matrix::Zero(3, 3)}), InputError);
    CHECK_THROWS_AS(mpoly({mat({{0, 1}, {0, 0}})}, true), InputError);
    CHECK_NOTHROW(mpoly({mat({{0, 1}, {1, 0}})}, true));
}

TEST_CASE("trailing coefficients are stripped") {
    const MatrixPoly p = mpoly({mat({{1}}), mat({{2}}), mat({{1e-16}})});
    CHECK(p.degree() == 1);
    const MatrixPoly z = mpoly({mat({{0, 0}, {0, 0}}), mat({{0, 0}, {0, 0}})});
    CHECK(z.degree() == 0);
    CHECK(z.is_zero());
}

TEST_CASE("eval examples") {
    CHECK(MatrixPoly(2)(3.7).isZero(0.0));
    CHECK(two_by_two()(2.0) == mat({{5, 2}, {2, 1}}));
    CHECK(MatrixPoly::identity(2)(-11.0) == Matrix::Identity(2, 2));
}

TEST_CASE("matmul examples") {
    const MatrixPoly x = MatrixPoly::monomial(Matrix::Identity(2, 2), 1);
    CHECK(matmul(x, x).coeffs() == MatrixPoly::monomial(Matrix::Identity(2, 2), 2).coeffs());

    const MatrixPoly p = mpoly({mat({{0, 1}, {1, 0}}), mat({{1, 0}, {0, 0}})});
    const MatrixPoly pp = matmul(p, transpose_poly(p));
    CHECK(coeff_distance(pp, two_by_two()) == 0.0);
    CHECK(matmul(p, MatrixPoly(2)).is_zero());
}

TEST_CASE("transpose_poly examples") {
    const MatrixPoly s = two_by_two();
    CHECK(coeff_distance(transpose_poly(s), s) == 0.0);
    const MatrixPoly e = mpoly({mat({{0, 0}, {0, 0}}), mat({{0, 1}, {0, 0}})});
    CHECK(transpose_poly(e).coeff(1) == mat({{0, 0}, {1, 0}}));
}

TEST_CASE("even_odd_split examples") {
    const EvenOddParts a = even_odd_split(spoly({1, 1, 1}));
    CHECK(coeff_distance(a.even, spoly({1, 1})) == 0.0);
    CHECK(coeff_distance(a.odd, spoly({1})) == 0.0);

    const EvenOddParts b = even_odd_split(MatrixPoly::monomial(Matrix::Identity(2, 2), 3));
    CHECK(b.even.is_zero());
    CHECK(coeff_distance(b.odd, MatrixPoly::monomial(Matrix::Identity(2, 2), 1)) == 0.0);
}

TEST_CASE("compose_scalar examples") {
    const MatrixPoly x = MatrixPoly::monomial(Matrix::Identity(2, 2), 1);
    CHECK(coeff_distance(compose_scalar(x, ScalarPoly({0, 0, 1})), MatrixPoly::monomial(Matrix::Identity(2, 2), 2)) ==
          0.0);
    const MatrixPoly p = mpoly({mat({{0, 0}, {0, 1}}), mat({{1, 0}, {0, 0}})});
    const MatrixPoly q = compose_scalar(p, ScalarPoly({1, 1}));
    CHECK(coeff_distance(q, mpoly({mat({{1, 0}, {0, 1}}), mat({{1, 0}, {0, 0}})})) == 0.0);
}

TEST_CASE("sup_norm_on examples") {
    CHECK(sup_norm_on(MatrixPoly::identity(2), 0, 1, 11) == doctest::Approx(1.0));
    CHECK(sup_norm_on(MatrixPoly::monomial(Matrix::Identity(2, 2), 1), -2, 3, 101) == doctest::Approx(3.0));
    CHECK(sup_norm_on(MatrixPoly(2), -1, 1, 11) == 0.0);
    CHECK_THROWS_AS(sup_norm_on(MatrixPoly(2), 1, -1, 11), InputError);
    CHECK_THROWS_AS(sup_norm_on(MatrixPoly(2), 0, 1, 1), InputError);
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(7);
    for (int t = 0; t < 30; ++t) {
        const int n = rng.uniform_int(1, 3);
        const MatrixPoly p = rng.poly(n, rng.uniform_int(0, 3));
        const MatrixPoly q = rng.poly(n, rng.uniform_int(0, 3));
        const MatrixPoly r = rng.poly(n, rng.uniform_int(0, 3));
        const double scale = 1.0 + p.coeff_norm() * q.coeff_norm() * r.coeff_norm();

        CHECK(coeff_distance(matmul(matmul(p, q), r), matmul(p, matmul(q, r))) <= 1e-12 * scale * 16);
        CHECK(coeff_distance(matmul(p, q + r), matmul(p, q) + matmul(p, r)) <= 1e-12 * scale * 16);
        CHECK(coeff_distance(transpose_poly(matmul(p, q)), matmul(transpose_poly(q), transpose_poly(p))) <= 1e-12 * scale);
        CHECK(coeff_distance(transpose_poly(transpose_poly(p)), p) == 0.0);

        // evaluation commutes with arithmetic
        for (double x : kSamplePoints) {
            const Matrix pq = p(x) * q(x);
            CHECK(max_abs(matmul(p, q)(x) - pq) <= 1e-12 * std::max(1.0, max_abs(pq)) * 64);
            CHECK(max_abs((p + q)(x) - (p(x) + q(x))) <= 1e-12 * std::max(1.0, max_abs(p(x)) + max_abs(q(x))));
        }

        // split round trip R(a²) + a·Q(a²) is coefficient-exact
        const EvenOddParts parts = even_odd_split(p);
        const MatrixPoly a2 = compose_scalar(parts.even, ScalarPoly({0, 0, 1})) +
                              ScalarPoly({0, 1}) * compose_scalar(parts.odd, ScalarPoly({0, 0, 1}));
        CHECK(coeff_distance(a2, p) == 0.0);

        // composition matches evaluation at q(a)
        const ScalarPoly s({rng.normal(), rng.normal(), rng.normal()});
        const MatrixPoly c = compose_scalar(p, s);
        for (double x : kSamplePoints) {
            CHECK(max_abs(c(x) - p(s(x))) <= 1e-10 * std::max(1.0, max_abs(p(s(x)))));
        }
    }
}

TEST_CASE("hermitian_square is exactly symmetric") {
    Rng rng(3);
    const MatrixPoly p = rng.poly(3, 2);
    const MatrixPoly h = hermitian_square(p);
    CHECK(h.is_symmetric());
    for (const Matrix &c : h.coeffs()) {
        CHECK(c == c.transpose());
    }
}

TEST_CASE("laurent polynomial from a factor") {
    // (1 + z)(1 + 1/z) = 2 + z + 1/z
    std::vector<CMatrix> f{CMatrix::Ones(1, 1), CMatrix::Ones(1, 1)};
    const LaurentPoly u = laurent_from_factor(f);
    CHECK(u.band() == 1);
    CHECK(std::abs(u.coeff(0)(0, 0) - Complex(2, 0)) == 0.0);
    CHECK(std::abs(u.coeff(1)(0, 0) - Complex(1, 0)) == 0.0);
    CHECK(std::abs(u.coeff(-1)(0, 0) - Complex(1, 0)) == 0.0);
    CHECK(u.hermitian_defect() == 0.0);
    CHECK(std::abs(u(Complex(-1, 0))(0, 0)) <= 1e-15);
}
