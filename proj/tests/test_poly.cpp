#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace impactzeta;
using testing::poly;
using testing::Q;
using testing::xpoly;

TEST_CASE("arithmetic examples") {
  CHECK(poly_arith(ArithKind::Mul, xpoly({1, -1}), xpoly({1, 1, 1})) == xpoly({1, 0, 0, -1}));
  CHECK(poly_arith(ArithKind::Add, poly({{0, 0, 1}, {1, 2, 1}}), BiPoly::constant(-1)) ==
        poly({{1, 2, 1}}));
  CHECK(poly_arith(ArithKind::Mul, xpoly({1, -1}).pow(2), BiPoly::constant(1)) == xpoly({1, -2, 1}));
  CHECK(poly_arith(ArithKind::Sub, Q(), Q()).is_zero());
}

TEST_CASE("exact division") {
  CHECK(poly_exact_div(BiPoly::one_minus_x(5), BiPoly::one_minus_x(1)) == xpoly({1, 1, 1, 1, 1}));
  CHECK_ERRC(poly_exact_div(BiPoly::one_minus_x(3), BiPoly::one_minus_x(2)), Errc::NotDivisible);
  const BiPoly r = poly({{0, 0, 1}, {1, 2, 1}});
  CHECK(poly_exact_div(r * BiPoly::one_minus_x(1), BiPoly::one_minus_x(1)) == r);
  BiPoly quotient;
  CHECK_FALSE(try_exact_div(xpoly({1, 1}), Q(), quotient));
  CHECK_ERRC(poly_exact_div(BiPoly::constant(1), BiPoly()), Errc::InvalidArgument);
}

TEST_CASE("series expansion") {
  auto s = series_expand(RationalFn(poly({{0, 0, 1}, {1, 2, 1}}), BiPoly::one_minus_x(1)), 3);
  REQUIRE(s.coeffs.size() == 4);
  CHECK(s.coeffs[0] == BiPoly::constant(1));
  CHECK(s.coeffs[1] == BiPoly::constant(1));
  CHECK(s.coeffs[2] == BiPoly::constant(1) + Q());
  CHECK(s.coeffs[3] == BiPoly::constant(1) + Q());

  auto g = series_expand(RationalFn(BiPoly::constant(1), BiPoly::one_minus_x(2)), 4);
  std::vector<BiPoly> want{BiPoly::constant(1), BiPoly(), BiPoly::constant(1), BiPoly(),
                           BiPoly::constant(1)};
  CHECK(g.coeffs == want);

  auto h = series_expand(RationalFn(poly({{0, 0, 1}, {0, 1, -1}, {1, 2, 1}}), BiPoly::one_minus_x(1)), 4);
  CHECK(h.coeffs[0] == BiPoly::constant(1));
  CHECK(h.coeffs[1].is_zero());
  for (int k = 2; k <= 4; ++k) CHECK(h.coeffs[k] == Q());
}

TEST_CASE("series expansion rejects a non-unit constant term") {
  CHECK_ERRC(series_expand(RationalFn(BiPoly::constant(1), xpoly({2, 1})), 3), Errc::NonUnitDenominator);
  CHECK_ERRC(series_expand(RationalFn(BiPoly::constant(1), BiPoly::x_var()), 3), Errc::NonUnitDenominator);
}

TEST_CASE("specialization at q") {
  CHECK(eval_at_q(poly({{0, 0, 1}, {1, 2, 1}}), 3) == xpoly({1, 0, 3}));
  CHECK(eval_at_q(poly({{2, 4, 1}}), 1) == poly({{0, 4, 1}}));
  BiPoly s2 = poly({{0, 0, 1}, {0, 1, -1}, {1, 2, 1}, {1, 3, -1}, {2, 4, 1}});
  CHECK(eval_at_q(s2, 2) == xpoly({1, -1, 2, -2, 4}));
}

TEST_CASE("rational functions compare by cross multiplication") {
  RationalFn a(xpoly({1, 1}), BiPoly::one_minus_x(2));
  RationalFn b(BiPoly::constant(1), BiPoly::one_minus_x(1));
  CHECK(a.equivalent(b));
  CHECK_FALSE(a.equivalent(RationalFn(BiPoly::constant(1), BiPoly::one_minus_x(2))));
  CHECK((b - a).equivalent(RationalFn()));
  CHECK_ERRC(RationalFn(BiPoly::constant(1), BiPoly()), Errc::InvalidArgument);
}

TEST_CASE("to_string") {
  CHECK(poly({{0, 0, 1}, {1, 2, 1}}).to_string() == "1 + q*X^2");
  CHECK(BiPoly().to_string() == "0");
}

namespace {

BiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 4), coeff(-5, 5), count(0, 5);
  BiPoly p;
  for (int i = count(rng); i > 0; --i) p += BiPoly::monomial(coeff(rng), exp(rng), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK(poly_exact_div(a * b, b) == a);
    for (long q0 : {0L, 1L, 2L, 7L})
      CHECK(eval_at_q(a * b + c, q0) == eval_at_q(a, q0) * eval_at_q(b, q0) + eval_at_q(c, q0));
  }
}

TEST_CASE("series of a product matches the Cauchy product of series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    BiPoly a = random_poly(rng), b = random_poly(rng);
    BiPoly den = BiPoly::constant(1) - random_poly(rng).shift_x(1);
    auto s = series_expand(RationalFn(a * b, den), 6);
    auto sa = series_expand(RationalFn(a, den), 6);
    for (unsigned k = 0; k <= 6; ++k) {
      BiPoly conv;
      for (unsigned i = 0; i <= k; ++i) conv += sa.coeffs[i] * b.x_coeff(k - i);
      CHECK(s.coeffs[k] == conv);
    }
  }
}
