#include "glnwalk/laurent.hpp"
#include "glnwalk/multipoly.hpp"
#include "glnwalk/rational.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace glnwalk;

TEST_CASE("rational canonical form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == BigInt(-3));
  CHECK(r.denominator() == BigInt(2));
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse("-3/2") == r);
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(BigInt(0), BigInt(7)).denominator() == BigInt(1));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK(Rational(BigInt(2), BigInt(3)).pow(3) == Rational(BigInt(8), BigInt(27)));
  CHECK(Rational(5) / Rational(2) == Rational(BigInt(5), BigInt(2)));
}

TEST_CASE("polynomial arithmetic basics") {
  Symbol t = Symbol::named("t"), s = Symbol::named("s");
  MultiPoly T = MultiPoly::var(t), S = MultiPoly::var(s);
  // (t+1)(t-1) = t^2 - 1
  CHECK((T + MultiPoly(1)) * (T - MultiPoly(1)) == T.pow(2) - MultiPoly(1));
  // coefficient of t s^2 in (t+s)^3 is 3
  MultiPoly cube = (T + S).pow(3);
  Monomial ts2 = Monomial::var(t).times(Monomial::var(s, 2));
  CHECK(cube.coeff(ts2) == Rational(3));
  CHECK(MultiPoly::parse("2*t^2 + t").str() == "2*t^2 + t");
  CHECK(MultiPoly::parse("t^2 - 1") == T.pow(2) - MultiPoly(1));
  CHECK(MultiPoly::parse("3/2*t") == MultiPoly(Rational(BigInt(3), BigInt(2))) * T);
  CHECK_THROWS(MultiPoly::parse("t^-1"));  // negative exponents rejected
  CHECK_THROWS(MultiPoly::parse("t +"));
}

TEST_CASE("substitution") {
  Symbol t = Symbol::named("t"), N = Symbol::named("N"), L = Symbol::named("L");
  Symbol tau = Symbol::named("tau"), eta = Symbol::named("eta");
  MultiPoly T = MultiPoly::var(t), Np = MultiPoly::var(N), Lp = MultiPoly::var(L);
  MultiPoly Ta = MultiPoly::var(tau), E = MultiPoly::var(eta);

  MultiPoly p = T.pow(2) + Np * T;  // t^2 + N t
  MultiPoly sub = p.substitute({{t, Ta * Lp}, {N, E * Lp}});
  CHECK(sub == Ta.pow(2) * Lp.pow(2) + E * Ta * Lp.pow(2));

  CHECK((MultiPoly(2) * T.pow(2) + T).substitute({{t, MultiPoly(0)}}).is_zero());

  // constant term of P_t Psi_4 at N=2, evaluated at t=3
  MultiPoly c = MultiPoly::parse("2*t^4 + 24*t^3 + 38*t^2 + 6*t");
  CHECK(c.substitute({{t, MultiPoly(3)}}).constant_value() == Rational(1170));
  CHECK(c.evaluate({{t, Rational(3)}}) == Rational(1170));
}

TEST_CASE("leading order extraction") {
  Symbol L = Symbol::named("L");
  Symbol tau = Symbol::named("tau"), eta = Symbol::named("eta");
  MultiPoly Lp = MultiPoly::var(L), Ta = MultiPoly::var(tau), E = MultiPoly::var(eta);

  auto [d1, c1] = (Ta.pow(2) * Lp.pow(2) + E * Ta * Lp.pow(2)).leading_order_in(L);
  CHECK(d1 == 2);
  CHECK(c1 == Ta.pow(2) + E * Ta);

  auto [d2, c2] = (MultiPoly(3) * Ta * Lp).leading_order_in(L);
  CHECK(d2 == 1);
  CHECK(c2 == MultiPoly(3) * Ta);

  auto [d3, c3] = (Ta.pow(3) * Lp.pow(3) + Ta * Lp).leading_order_in(L);
  CHECK(d3 == 3);
  CHECK(c3 == Ta.pow(3));

  CHECK_THROWS_AS(MultiPoly().leading_order_in(L), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(7, 0);
  std::vector<Symbol> syms = {Symbol::named("t"), Symbol::named("s"), Symbol::named("N")};
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly a = testutil::random_poly(rng, syms);
    MultiPoly b = testutil::random_poly(rng, syms);
    MultiPoly c = testutil::random_poly(rng, syms);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitute is a ring morphism") {
  Rng rng(11, 0);
  Symbol t = Symbol::named("t"), s = Symbol::named("s"), u = Symbol::named("u");
  std::vector<Symbol> syms = {t, s};
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = testutil::random_poly(rng, syms);
    MultiPoly b = testutil::random_poly(rng, syms);
    MultiPoly image = testutil::random_poly(rng, {u, s});
    std::vector<std::pair<Symbol, MultiPoly>> bind = {{t, image}};
    CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
    CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
  }
}

TEST_CASE("parse/print round trip") {
  Rng rng(13, 0);
  std::vector<Symbol> syms = {Symbol::named("t"), Symbol::named("tau"), Symbol::named("eta")};
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = testutil::random_poly(rng, syms);
    CHECK(MultiPoly::parse(a.str()) == a);
  }
}

TEST_CASE("laurent coefficients") {
  Symbol w = Symbol::named("w");
  Symbol eta = Symbol::named("eta"), tau = Symbol::named("tau");
  MultiPoly E = MultiPoly::var(eta), Ta = MultiPoly::var(tau);

  LaurentPoly p(w);
  p.add_term(-1, E);
  p.add_term(0, Ta);
  p.add_term(1, Ta);
  CHECK(p.coeff(-1) == E);

  LaurentPoly sq = p.pow(2);
  CHECK(sq.coeff(-1) == MultiPoly(2) * E * Ta);
  CHECK(sq.coeff(-3).is_zero());
  CHECK(sq.coeff(-2) == E.pow(2));

  CHECK_THROWS(p.add_term(0, MultiPoly::var(w)));  // coefficient mentions the variable
}

TEST_CASE("laurent Cauchy product rule") {
  Rng rng(17, 0);
  Symbol v = Symbol::named("v");
  auto random_laurent = [&](Rng& r) {
    LaurentPoly p(v);
    int terms = 1 + static_cast<int>(r.below(4));
    for (int q = 0; q < terms; ++q) {
      int e = -3 + static_cast<int>(r.below(7));
      p.add_term(e, MultiPoly(testutil::random_rational(r)));
    }
    return p;
  };
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly p = random_laurent(rng), q = random_laurent(rng);
    LaurentPoly pq = p * q;
    for (int r = -6; r <= 6; ++r) {
      MultiPoly conv;
      for (int s = -6; s <= 6; ++s) conv += p.coeff(s) * q.coeff(r - s);
      CHECK(pq.coeff(r) == conv);
    }
    // linearity of the coefficient map
    LaurentPoly sum = p + q;
    for (int r = -4; r <= 4; ++r) CHECK(sum.coeff(r) == p.coeff(r) + q.coeff(r));
  }
}

TEST_CASE("exact linear solve") {
  Symbol t = Symbol::named("t");
  MultiPoly T = MultiPoly::var(t);
  // [1 1; 1 -1; 2 0] x = [t+1, t-1, 2t] -> x = (t, 1)
  auto sol = linear_solve_exact(
      {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}, {Rational(2), Rational(0)}},
      {T + MultiPoly(1), T - MultiPoly(1), MultiPoly(2) * T});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == T);
  CHECK((*sol)[1] == MultiPoly(1));
  // inconsistent
  auto bad = linear_solve_exact({{Rational(1)}, {Rational(1)}}, {MultiPoly(1), MultiPoly(2)});
  CHECK(!bad.has_value());
}
