#include "glnwalk/oracle.hpp"

#include "glnwalk/center.hpp"

#include <doctest.h>

#include <cmath>

#include "test_util.hpp"

using namespace glnwalk;
using namespace glnwalk::oracle;
using glnwalk::ugln::Word;
using glnwalk::ugln::gen;

namespace {

Symbol t_sym() { return Symbol::named("t"); }

}  // namespace

TEST_CASE("bell polynomials") {
  MultiPoly T = MultiPoly::var(t_sym());
  CHECK(bell_polynomial(0, t_sym()) == MultiPoly(1));
  CHECK(bell_polynomial(1, t_sym()) == T);
  CHECK(bell_polynomial(2, t_sym()) == T.pow(2) + T);
  CHECK(bell_polynomial(4, t_sym()) == MultiPoly::parse("t^4 + 6*t^3 + 7*t^2 + t"));
}

TEST_CASE("differentiation oracle on the printed examples") {
  Word w1 = {gen(2, 1), gen(1, 2), gen(2, 1), gen(1, 2)};
  CHECK(state_diff_oracle(w1, t_sym()) == MultiPoly::parse("2*t^2 + t"));
  Word w2 = {gen(1, 1), gen(1, 2)};
  CHECK(state_diff_oracle(w2, t_sym()).is_zero());
  Word empty;
  CHECK(state_diff_oracle(empty, t_sym()) == MultiPoly(1));
  Word too_long(9, gen(1, 1));
  CHECK_THROWS_AS(state_diff_oracle(too_long, t_sym()), std::domain_error);
}

TEST_CASE("differentiation oracle matches the partition state on random words") {
  Rng rng(81, 0);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = testutil::random_word(rng, 3, 1 + static_cast<int>(rng.below(5)));
    ugln::NCElement e(3);
    e.add_term(w, MultiPoly(1));
    CHECK(state_diff_oracle(w, t_sym()) == ugln::state(e, MultiPoly::var(t_sym())));
  }
}

TEST_CASE("determinantal formula") {
  DetFormQuery q;
  q.x = 4;
  q.y = 2;
  q.t = Rational(3);
  q.k = 4;
  q.b_max = 50;
  auto r = detform_n2(q);
  CHECK(std::abs(r.value - 5453.0) < 1e-6);

  // k=1 agrees with the symbolic P_3 Psi_1 evaluation at lambda=(4,2)
  q.k = 1;
  auto r1 = detform_n2(q);
  Rational symbolic =
      center::evaluate_at(ugln::apply_pt(center::psi(1, 2), MultiPoly(3)), {4, 2});
  CHECK(std::abs(r1.value - symbolic.to_double()) < 1e-9);

  // t -> 0+ with b_max = x: only the leading cell survives, giving p_k of the
  // initial configuration (x, y-1)
  DetFormQuery q0;
  q0.x = 4;
  q0.y = 2;
  q0.t = Rational(BigInt(1), BigInt(1000000));
  q0.k = 4;
  q0.b_max = 4;
  auto r0 = detform_n2(q0);
  CHECK(std::abs(r0.value - (256.0 + 1.0)) < 1e-3);

  DetFormQuery badq;
  badq.x = 1;
  badq.y = 2;
  badq.t = Rational(1);
  badq.b_max = 5;
  CHECK_THROWS_AS(detform_n2(badq), std::domain_error);
}

TEST_CASE("ctmc oracle: Poisson mean") {
  auto r = ctmc_expectation(surface::densely_packed(1), {{1, 2.0}},
                            {surface::Observable::power_sum(1)}, 1e-9);
  CHECK(r.error_bound < 1e-6);
  CHECK(std::abs(r.value - 2.0) <= r.error_bound + 1e-9);
}

TEST_CASE("ctmc oracle: densely packed level-2 mean") {
  // <Psi_1^(2)>_1 = 2*1 - 1 = 1
  auto r = ctmc_expectation(surface::densely_packed(2), {{2, 1.0}},
                            {surface::Observable::power_sum(1)}, 1e-9);
  CHECK(std::abs(r.value - 1.0) <= r.error_bound + 1e-9);
}

TEST_CASE("ctmc oracle: the 2.37 two-level value") {
  surface::InterlacedArray initial;
  initial.levels = {{0}, {1, -1}};
  auto r = ctmc_expectation(initial, {{2, 1.0}, {1, 1.0}},
                            {surface::Observable::power_sum(1),
                             surface::Observable::power_sum(1)},
                            1e-9);
  CHECK(r.error_bound < 0.01);
  CHECK(std::abs(r.value - 2.37) < 0.02);
  // strictly separated from the P_t prediction 3
  CHECK(3.0 - r.value > 0.5);
}

TEST_CASE("ctmc agrees with monte carlo") {
  auto ct = ctmc_expectation(surface::densely_packed(2), {{2, 1.0}, {1, 2.0}},
                             {surface::Observable::power_sum(1),
                              surface::Observable::power_sum(1)},
                             1e-9);
  auto mc = surface::mc_expectation(surface::densely_packed(2), {{2, 1.0}, {1, 2.0}},
                                    {surface::Observable::power_sum(1),
                                     surface::Observable::power_sum(1)},
                                    200000, 606);
  CHECK(std::abs(ct.value - mc.mean) <= 4 * mc.stderr_ + ct.error_bound);
}

TEST_CASE("ctmc rejects large ranks") {
  CHECK_THROWS_AS(ctmc_expectation(surface::densely_packed(4), {{4, 1.0}},
                                   {surface::Observable::power_sum(1)}, 1e-6),
                  std::invalid_argument);
}
