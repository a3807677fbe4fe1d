#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "finsler/algebra/rat_expr.hpp"
#include "finsler/algebra/text_format.hpp"

using namespace finsler::algebra;

namespace {

RatExpr R(const char* text) { return parse_rat_expr(text); }

const RatExpr s = RatExpr::s();
const RatExpr u = RatExpr::u();

// Random rational functions in s, u, C built from small random polynomials.
RatExpr random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> deg(0, 2);
  auto poly = [&](int terms) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
      Monomial m;
      m.set(kS, deg(rng));
      m.set(kU, deg(rng));
      if (deg(rng) == 2) m.set(kC, 1);
      ts.push_back({m, Integer(coef(rng))});
    }
    return Polynomial::from_terms(std::move(ts));
  };
  Polynomial den = poly(3);
  while (den.is_zero()) den = poly(3);
  return RatExpr::fraction(poly(3), den);
}

std::array<Rational, kNumSymbols> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 7);
  std::array<Rational, kNumSymbols> p{};
  for (auto& x : p) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return p;
}

}  // namespace

TEST_CASE("rational function worked examples") {
  CHECK(s + s == RatExpr(2) * s);
  CHECK(u.pow(2) / u == u);
  CHECK((RatExpr(1) / (u - s)) * (u - s) == RatExpr(1));
  CHECK(d_ds(s.pow(2) * u) == RatExpr(2) * s * u);
  CHECK(d_db2(u) == RatExpr(1) / (RatExpr(2) * u));
  CHECK(d_db2(u.inverse()) == RatExpr(-1) / (RatExpr(2) * u.pow(3)));
  const auto cs = coeffs_in_s(RatExpr(3) * s.pow(2) + u);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == u);
  CHECK(cs[1].is_zero());
  CHECK(cs[2] == RatExpr(3));
  CHECK(eval_rational(s / u, 1, 2) == Rational(1, 2));
  CHECK_THROWS_AS(eval_rational(RatExpr(1) / (u - s), 1, 1), PoleError);
  CHECK_THROWS_AS(s / RatExpr(0), DivisionByZero);
  CHECK_THROWS_AS(RatExpr().inverse(), DivisionByZero);
  CHECK_THROWS_AS(coeffs_in_s(RatExpr(1) / s), NotPolynomial);
}

TEST_CASE("canonical form") {
  const RatExpr a = R("num: 2*s^2 - 2*u^2 / den: 4*s - 4*u");
  CHECK(a == (s + u) / RatExpr(2));
  CHECK(a.numerator() == parse_polynomial("s + u"));
  CHECK(a.denominator() == parse_polynomial("2"));
  const RatExpr b = RatExpr::fraction(parse_polynomial("1"), parse_polynomial("-s"));
  CHECK(b.numerator() == parse_polynomial("-1"));
  CHECK(b.denominator() == parse_polynomial("s"));
  // Shared factor hidden inside a product base.
  const RatExpr p = RatExpr(1) / ((s + u) * (s - u));
  CHECK(p * (s + u) == RatExpr(1) / (s - u));
  CHECK((s + u) / ((s + u).pow(2) * (s - u)) + RatExpr(1) / (s * s - u * u) == RatExpr(2) / (s * s - u * u));
  CHECK(numerator_normalized(R("num: -6*s - 4 / den: 5")) == parse_polynomial("3*s + 2"));
}

TEST_CASE("coefficient functions follow the b^2 chain rule") {
  const RatExpr c0 = RatExpr::coefficient_function(0);
  const RatExpr c1 = RatExpr::coefficient_function(1);
  const RatExpr phi = c0 + c1 * s;
  CHECK(d_db2(phi) == RatExpr::coefficient_function(0, 1) + RatExpr::coefficient_function(1, 1) * s);
  CHECK(d_db2(u * c0) == c0 / (RatExpr(2) * u) + u * RatExpr::coefficient_function(0, 1));
  CHECK_THROWS_AS(d_db2(RatExpr::coefficient_function(0, kMaxCoeffDerivative)), AlgebraError);
  // Substituting concrete coefficients commutes with differentiation.
  const RatExpr c0v = RatExpr(1) / u;
  const RatExpr c0d = d_db2(c0v);
  const RatExpr lhs = substitute(substitute(d_db2(phi * phi), coeff_symbol(0, 1), c0d), coeff_symbol(0, 0), c0v);
  const RatExpr rhs = d_db2(substitute(phi * phi, coeff_symbol(0, 0), c0v));
  CHECK(lhs == rhs);
}

TEST_CASE("field laws and evaluation homomorphism hold on random inputs") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const RatExpr a = random_rat(rng);
    const RatExpr b = random_rat(rng);
    const RatExpr c = random_rat(rng);
    CAPTURE(to_text(a));
    CAPTURE(to_text(b));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a / a == RatExpr(1));
    CHECK(parse_rat_expr(to_text(a)) == a);

    const auto pt = random_point(rng);
    try {
      const Rational va = a.evaluate(pt);
      const Rational vb = b.evaluate(pt);
      CHECK((a + b).evaluate(pt) == va + vb);
      CHECK((a * b).evaluate(pt) == va * vb);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("derivatives commute and obey the product rule") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const RatExpr a = random_rat(rng);
    const RatExpr b = random_rat(rng);
    CHECK(d_ds(d_db2(a)) == d_db2(d_ds(a)));
    CHECK(d_ds(a * b) == d_ds(a) * b + a * d_ds(b));
    CHECK(d_db2(a * b) == d_db2(a) * b + a * d_db2(b));
    if (!b.is_zero()) CHECK(d_ds(a / b) == (d_ds(a) * b - a * d_ds(b)) / (b * b));
  }
}

TEST_CASE("coefficients in s reassemble") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RatExpr a = random_rat(rng);
    const RatExpr poly_in_s = a.numerator().depends_on(kS) ? RatExpr(a.numerator()) / (u + RatExpr(3)) : a;
    if (poly_in_s.denominator().depends_on(kS)) continue;
    const auto cs = coeffs_in_s(poly_in_s);
    RatExpr acc;
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * s + cs[i];
    CHECK(acc == poly_in_s);
    if (!cs.empty()) CHECK_FALSE(cs.back().is_zero());
  }
}

TEST_CASE("derivative agrees with a finite difference") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const RatExpr a = random_rat(rng);
    const RatExpr da = d_ds(a);
    const double s0 = 0.37;
    const double u0 = 1.3;
    const double h = 1e-5;
    try {
      const double fd = (eval_double(a, s0 + h, u0) - eval_double(a, s0 - h, u0)) / (2 * h);
      const double ex = eval_double(da, s0, u0);
      if (!std::isfinite(fd) || !std::isfinite(ex) || std::abs(ex) > 1e6) continue;
      CHECK(fd == doctest::Approx(ex).epsilon(1e-5));
    } catch (const AlgebraError&) {
    }
  }
}
