#include "glnwalk/center.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace glnwalk;
using namespace glnwalk::center;
using glnwalk::ugln::NCElement;
using glnwalk::ugln::gen;

namespace {

Symbol t_sym() { return Symbol::named("t"); }
MultiPoly T() { return MultiPoly::var(t_sym()); }

}  // namespace

TEST_CASE("path enumeration") {
  auto p13 = enum_paths(1, 3);
  REQUIRE(p13.size() == 1);
  CHECK(p13[0].vertices == std::vector<int>{1, 1, 1, 1});

  CHECK(enum_paths(3, 4).size() == 27);

  // |paths(m,k)| = m^{k-1}
  for (int m = 1; m <= 4; ++m) {
    long long expect = 1;
    for (int k = 1; k <= 6; ++k) {
      CHECK(enum_paths(m, k).size() == static_cast<std::size_t>(expect));
      expect *= m;
    }
  }
}

TEST_CASE("paper path example") {
  PathSpec p;
  p.base = 5;
  p.vertices = {5, 3, 3, 1, 5, 5, 2, 5};
  CHECK(first_return(p) == 4);

  // 4 E53 (E33-4) E31 E15 (E55-4) E52 E25
  NCElement expected = NCElement::constant(5, MultiPoly(4));
  auto g = [](int i, int j) { return NCElement::generator(5, i, j); };
  auto c = [](long long v) { return NCElement::constant(5, MultiPoly(Rational(v))); };
  expected = nc_mul(expected, g(5, 3));
  expected = nc_mul(expected, g(3, 3) - c(4));
  expected = nc_mul(expected, g(3, 1));
  expected = nc_mul(expected, g(1, 5));
  expected = nc_mul(expected, g(5, 5) - c(4));
  expected = nc_mul(expected, g(5, 2));
  expected = nc_mul(expected, g(2, 5));
  CHECK(e_of_path(p, 5) == expected);

  // found among enum_paths(5,7)
  bool present = false;
  for (auto& q : enum_paths(5, 7))
    if (q.vertices == p.vertices) present = true;
  CHECK(present);
}

TEST_CASE("e_of_path simple cases") {
  PathSpec loop;
  loop.base = 3;
  loop.vertices = {3, 3};
  NCElement expected =
      NCElement::generator(3, 3, 3) - NCElement::constant(3, MultiPoly(2));
  CHECK(e_of_path(loop, 3) == expected);

  PathSpec hop;
  hop.base = 2;
  hop.vertices = {2, 1, 2};
  NCElement e = e_of_path(hop, 2);
  CHECK(e.coeff({gen(2, 1), gen(1, 2)}) == MultiPoly(2));
  CHECK(e.term_count() == 1);
}

TEST_CASE("psi formulas") {
  // Psi_1 = sum (E_mm - m + 1)
  for (int N = 1; N <= 4; ++N) {
    NCElement expected(N);
    for (int m = 1; m <= N; ++m) {
      expected += NCElement::generator(N, m, m);
      expected -= NCElement::constant(N, MultiPoly(m - 1));
    }
    CHECK(psi(1, N) == expected);
  }
  // Psi_2 = sum (E_mm - m + 1)^2 + 2 sum_{l<m} E_ml E_lm
  for (int N = 2; N <= 3; ++N) {
    NCElement expected(N);
    for (int m = 1; m <= N; ++m) {
      NCElement d = NCElement::generator(N, m, m) - NCElement::constant(N, MultiPoly(m - 1));
      expected += nc_mul(d, d);
      for (int l = 1; l < m; ++l)
        expected += MultiPoly(2) * nc_mul(NCElement::generator(N, m, l),
                                          NCElement::generator(N, l, m));
    }
    CHECK(psi(2, N) == expected);
  }
  CHECK(ugln::is_central(psi(3, 3)));
}

TEST_CASE("psi_sub embedding") {
  CHECK(psi_sub(1, 1, 2) == NCElement::generator(2, 1, 1));
  CHECK(!ugln::is_central(psi_sub(2, 1, 2)));
  CHECK_THROWS_AS(psi_sub(1, 3, 2), std::invalid_argument);
}

TEST_CASE("harish-chandra of psi is the power sum") {
  for (int N = 1; N <= 4; ++N)
    for (int k = 1; k <= 5; ++k) {
      auto hc = harish_chandra(psi(k, N), CentralityCheck::symmetry_only);
      CHECK(hc.poly() == power_sum(k, N));
      CHECK(hc.is_symmetric());
    }
  CHECK(harish_chandra(NCElement::one(3)).poly() == MultiPoly(1));
  CHECK_THROWS_AS(harish_chandra(NCElement::generator(2, 1, 2)), std::domain_error);
}

TEST_CASE("harish-chandra is multiplicative on the centre") {
  for (int N = 2; N <= 3; ++N) {
    NCElement a = psi(1, N), b = psi(2, N);
    auto hc_ab = harish_chandra(ugln::normal_form(nc_mul(a, b)), CentralityCheck::symmetry_only);
    auto hc_a = harish_chandra(a, CentralityCheck::symmetry_only);
    auto hc_b = harish_chandra(b, CentralityCheck::symmetry_only);
    CHECK(hc_ab.poly() == hc_a.poly() * hc_b.poly());
  }
}

TEST_CASE("harish-chandra of P_t Psi_1 at N=3") {
  NCElement pt = ugln::apply_pt(psi(1, 3), T());
  auto hc = harish_chandra(ugln::normal_form(pt), CentralityCheck::full);
  CHECK(hc.poly() == power_sum(1, 3) + MultiPoly(3) * T());
}

TEST_CASE("evaluate_at") {
  CHECK(evaluate_at(psi(1, 2), {0, 0}) == Rational(-1));  // x = (0,-1)
  CHECK(evaluate_at(ugln::apply_pt(psi(4, 2), MultiPoly(3)), {4, 2}) == Rational(5453));
}

TEST_CASE("two-level P_t identity and GT evaluation") {
  NCElement joint = nc_mul(psi(1, 2), psi_sub(1, 1, 2));
  NCElement pt = ugln::apply_pt(joint, T());
  NCElement expected = joint + MultiPoly(2) * T() * psi_sub(1, 1, 2) + T() * psi(1, 2) +
                       NCElement::constant(2, MultiPoly(2) * T().pow(2) + T());
  CHECK(ugln::normal_form(pt - expected).is_zero());

  CHECK(gt_evaluate(ugln::apply_pt(joint, MultiPoly(1)), {{0}, {1, 0}}) == Rational(3));
  // central elements: GT evaluation equals the HC evaluation
  CHECK(gt_evaluate(psi(2, 2), {{7}, {4, 2}}) == evaluate_at(psi(2, 2), {4, 2}));
}

TEST_CASE("powersum decomposition") {
  Symbol x1 = x_symbol(1), x2 = x_symbol(2);
  MultiPoly X1 = MultiPoly::var(x1), X2 = MultiPoly::var(x2);

  auto d1 = powersum_decompose(ShiftedSymPoly(2, X1.pow(2) + X2.pow(2)));
  REQUIRE(d1.size() == 1);
  CHECK(d1.at({2}) == MultiPoly(1));

  auto d2 = powersum_decompose(ShiftedSymPoly(2, (X1 + X2).pow(2)));
  REQUIRE(d2.size() == 1);
  CHECK(d2.at({1, 1}) == MultiPoly(1));

  // P_t Psi_3 at N=4 matches the printed expansion coefficients
  NCElement pt = ugln::apply_pt(psi(3, 4), T());
  auto e = powersum_decompose(harish_chandra(pt, CentralityCheck::symmetry_only));
  CHECK(e.at({3}) == MultiPoly(1));
  CHECK(e.at({2}) == MultiPoly(3) * T());
  CHECK(e.at({1}) == MultiPoly(3) * (T().pow(2) + MultiPoly(4) * T()));
  const int N = 4;
  MultiPoly cnst = MultiPoly(N) * (T().pow(3) + MultiPoly(3 * N) * T().pow(2) +
                                   MultiPoly(Rational(BigInt(N * N + 1), BigInt(2))) * T());
  CHECK(e.at({}) == cnst);

  CHECK_THROWS_AS(powersum_decompose(ShiftedSymPoly(1, power_sum(2, 1).pow(2))),
                  std::domain_error);
}

TEST_CASE("decompose/reconstruct round trip on random symmetric polynomials") {
  Rng rng(53, 0);
  const int N = 3;
  for (int trial = 0; trial < 25; ++trial) {
    // random polynomial in p_1..p_3 of total degree <= 3
    MultiPoly p(testutil::random_rational(rng));
    for (auto& rho : partitions_with_sum_at_most(3)) {
      if (rho.empty()) continue;
      p += MultiPoly(testutil::random_rational(rng)) * powersum_product(rho, N);
    }
    ShiftedSymPoly sp(N, p);
    REQUIRE(sp.is_symmetric());
    auto e = powersum_decompose(sp);
    CHECK(reconstruct(e, N) == p);
  }
}

TEST_CASE("asymptotic coefficients, small k") {
  Symbol tau = tau_symbol(), eta = eta_symbol();
  MultiPoly Ta = MultiPoly::var(tau), E = MultiPoly::var(eta);

  auto a1 = asymptotic_coeffs(1);
  CHECK(a1.at({1}) == MultiPoly(1));
  CHECK(a1.at({}) == E * Ta);  // const term tN -> tau eta L^2

  auto a2 = asymptotic_coeffs(2);
  CHECK(a2.at({2}) == MultiPoly(1));
  CHECK(a2.at({1}) == MultiPoly(2) * Ta);
}

TEST_CASE("asymptotics rejects a too-small depth") {
  // depth 1 leaves a single interpolation node, which cannot represent the
  // N-dependence of the constant term
  CHECK_THROWS_AS(asymptotic_coeffs(2, 1), std::domain_error);
}
