#include "glnwalk/ugln.hpp"

#include "glnwalk/center.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace glnwalk;
using namespace glnwalk::ugln;

namespace {

Symbol t_sym() { return Symbol::named("t"); }
MultiPoly T() { return MultiPoly::var(t_sym()); }

NCElement word_elem(int rank, std::initializer_list<std::pair<int, int>> gens) {
  Word w;
  for (auto [i, j] : gens) w.push_back(gen(i, j));
  NCElement e(rank);
  e.add_term(w, MultiPoly(1));
  return e;
}

}  // namespace

TEST_CASE("free multiplication") {
  NCElement a = NCElement::generator(2, 1, 1);
  NCElement b = NCElement::generator(2, 2, 2);
  NCElement ab = nc_mul(a, b);
  CHECK(ab.term_count() == 1);
  CHECK(ab.coeff({gen(1, 1), gen(2, 2)}) == MultiPoly(1));

  NCElement sum = NCElement::generator(2, 1, 2) + NCElement::generator(2, 2, 1);
  CHECK(nc_mul(sum, NCElement::one(2)) == sum);

  // Psi_1 * Psi_1 at N=2: the four degree-2 words of (E11 + E22 - 1)^2
  NCElement psi1 = center::psi(1, 2);
  NCElement sq = nc_mul(psi1, psi1);
  CHECK(sq.coeff({gen(1, 1), gen(1, 1)}) == MultiPoly(1));
  CHECK(sq.coeff({gen(1, 1), gen(2, 2)}) == MultiPoly(1));
  CHECK(sq.coeff({gen(2, 2), gen(1, 1)}) == MultiPoly(1));
  CHECK(sq.coeff({gen(2, 2), gen(2, 2)}) == MultiPoly(1));
  CHECK(sq.coeff({gen(1, 1)}) == MultiPoly(-2));
  CHECK(sq.coeff({gen(2, 2)}) == MultiPoly(-2));
  CHECK(sq.coeff({}) == MultiPoly(1));

  CHECK_THROWS(nc_mul(NCElement::one(2), NCElement::one(3)));
}

TEST_CASE("normal form rewriting") {
  // E12 E21 -> E21 E12 + E11 - E22
  NCElement x = word_elem(2, {{1, 2}, {2, 1}});
  NCElement nf = normal_form(x);
  CHECK(nf.coeff({gen(2, 1), gen(1, 2)}) == MultiPoly(1));
  CHECK(nf.coeff({gen(1, 1)}) == MultiPoly(1));
  CHECK(nf.coeff({gen(2, 2)}) == MultiPoly(-1));
  CHECK(nf.term_count() == 3);

  // already ordered: fixed point
  NCElement y = word_elem(2, {{2, 1}, {1, 2}});
  CHECK(normal_form(y) == y);

  // Psi_2 is central: [Psi_2, E12] normalizes to zero
  NCElement psi2 = center::psi(2, 2);
  NCElement comm = commutator(psi2, NCElement::generator(2, 1, 2));
  CHECK(normal_form(comm).is_zero());
}

TEST_CASE("normal form is well-defined and idempotent") {
  Rng rng(23, 0);
  for (int trial = 0; trial < 50; ++trial) {
    int rank = 2 + static_cast<int>(rng.below(2));  // N in {2,3}
    auto mk = [&](int len) {
      NCElement e(rank);
      e.add_term(testutil::random_word(rng, rank, len), MultiPoly(testutil::random_rational(rng)));
      e.add_term(testutil::random_word(rng, rank, len), MultiPoly(1));
      return e;
    };
    NCElement a = mk(1), b = mk(2), c = mk(3);
    CHECK(normal_form(nc_mul(a, nc_mul(b, c))) == normal_form(nc_mul(nc_mul(a, b), c)));
    NCElement nf = normal_form(nc_mul(b, c));
    CHECK(normal_form(nf) == nf);
    for (auto& [w, coeff] : nf.terms()) CHECK(word_is_normal(w));
  }
}

TEST_CASE("coproduct splittings") {
  auto pairs = coproduct({gen(1, 2)});
  REQUIRE(pairs.size() == 2);
  bool left = false, right = false;
  for (auto& [l, r] : pairs) {
    if (l == Word{gen(1, 2)} && r.empty()) left = true;
    if (l.empty() && r == Word{gen(1, 2)}) right = true;
  }
  CHECK(left);
  CHECK(right);

  auto unit = coproduct({});
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].first.empty());
  CHECK(unit[0].second.empty());

  // E13 E42 E55 E12 with S = {1,2,4}: left factor E13 E42 E12
  Word w = {gen(1, 3), gen(4, 2), gen(5, 5), gen(1, 2)};
  auto all = coproduct(w);
  CHECK(all.size() == 16);
  bool found = false;
  for (auto& [l, r] : all)
    if (l == Word{gen(1, 3), gen(4, 2), gen(1, 2)} && r == Word{gen(5, 5)}) found = true;
  CHECK(found);
}

TEST_CASE("state via set partitions") {
  CHECK(state(word_elem(2, {{2, 1}, {1, 2}, {2, 1}, {1, 2}}), T()) ==
        MultiPoly::parse("2*t^2 + t"));
  CHECK(state(word_elem(2, {{1, 1}, {1, 1}, {1, 1}, {2, 2}}), T()) ==
        MultiPoly::parse("t^4 + 3*t^3 + t^2"));
  CHECK(state(word_elem(2, {{1, 1}, {1, 2}}), T()).is_zero());
  CHECK(state(word_elem(1, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}), T()) ==
        MultiPoly::parse("t^4 + 6*t^3 + 7*t^2 + t"));
  CHECK(state(NCElement::one(2), T()) == MultiPoly(1));
  // rational time
  CHECK(state(word_elem(2, {{2, 1}, {1, 2}}), MultiPoly(Rational(BigInt(1), BigInt(2)))) ==
        MultiPoly(Rational(BigInt(1), BigInt(2))));
}

TEST_CASE("state at time zero is the constant coefficient") {
  Rng rng(29, 0);
  for (int trial = 0; trial < 30; ++trial) {
    NCElement e(3);
    e.add_term(testutil::random_word(rng, 3, 1 + static_cast<int>(rng.below(4))),
               MultiPoly(testutil::random_rational(rng)));
    e.add_term({}, MultiPoly(testutil::random_rational(rng)));
    CHECK(state(e, MultiPoly(0)) == e.coeff({}));
  }
}

TEST_CASE("state is tracial") {
  Rng rng(31, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int total = 2 + static_cast<int>(rng.below(4));  // degree <= 5
    int cut = 1 + static_cast<int>(rng.below(total - 1));
    Word xy = testutil::random_word(rng, 3, total);
    Word x(xy.begin(), xy.begin() + cut), y(xy.begin() + cut, xy.end());
    Word yx = y;
    yx.insert(yx.end(), x.begin(), x.end());
    NCElement exy(3), eyx(3);
    exy.add_term(xy, MultiPoly(1));
    eyx.add_term(yx, MultiPoly(1));
    CHECK(state(exy, T()) == state(eyx, T()));
  }
}

TEST_CASE("state degree limit") {
  Word w(13, gen(1, 1));
  NCElement e(1);
  e.add_term(w, MultiPoly(1));
  CHECK_THROWS_AS(state(e, T()), std::domain_error);
  CHECK_NOTHROW(state(e, T(), Exec::parallel, 13));
}

TEST_CASE("apply_pt basics") {
  NCElement e11 = NCElement::generator(2, 1, 1);
  NCElement pt = apply_pt(e11, T());
  CHECK(pt.coeff({gen(1, 1)}) == MultiPoly(1));
  CHECK(pt.coeff({}) == T());

  for (int N = 2; N <= 4; ++N) {
    NCElement expected = center::psi(1, N) + NCElement::constant(N, T() * Rational(N));
    CHECK(normal_form(apply_pt(center::psi(1, N), T()) - expected).is_zero());
  }
  CHECK(apply_pt(NCElement::one(3), T()) == NCElement::one(3));
}

TEST_CASE("evolution identity on words") {
  Rng rng(37, 0);
  Symbol s = Symbol::named("s");
  MultiPoly S = MultiPoly::var(s);
  for (int trial = 0; trial < 60; ++trial) {
    int rank = 1 + static_cast<int>(rng.below(3));
    NCElement e(rank);
    e.add_term(testutil::random_word(rng, rank, 1 + static_cast<int>(rng.below(4))),
               MultiPoly(1));
    CHECK(state(apply_pt(e, S), T()) == state(e, S + T()));
  }
}

TEST_CASE("semigroup on sampled words") {
  Rng rng(41, 0);
  Symbol s = Symbol::named("s");
  MultiPoly S = MultiPoly::var(s);
  for (int trial = 0; trial < 40; ++trial) {
    int rank = 1 + static_cast<int>(rng.below(3));
    NCElement e(rank);
    e.add_term(testutil::random_word(rng, rank, 1 + static_cast<int>(rng.below(4))),
               MultiPoly(1));
    CHECK(apply_pt(apply_pt(e, S), T()) == apply_pt(e, S + T()));
  }
}

TEST_CASE("centrality") {
  CHECK(is_central(center::psi(2, 2)));
  CHECK(!is_central(NCElement::generator(2, 1, 2)));
  CHECK(is_central(apply_pt(center::psi(3, 3), T())));
  // centre preservation for k <= 4, N <= 3 with symbolic t
  for (int N = 2; N <= 3; ++N)
    for (int k = 1; k <= 4; ++k) CHECK(is_central(apply_pt(center::psi(k, N), T())));
}

TEST_CASE("is_central agrees with the all-generator definition") {
  auto all_pairs_central = [](const NCElement& x) {
    for (int i = 1; i <= x.rank(); ++i)
      for (int j = 1; j <= x.rank(); ++j) {
        NCElement g = NCElement::generator(x.rank(), i, j);
        if (!normal_form(commutator(x, g)).is_zero()) return false;
      }
    return true;
  };
  Rng rng(43, 0);
  for (int trial = 0; trial < 20; ++trial) {
    NCElement e(3);
    e.add_term(testutil::random_word(rng, 3, 1 + static_cast<int>(rng.below(3))),
               MultiPoly(1));
    CHECK(is_central(e) == all_pairs_central(e));
  }
  CHECK(is_central(center::psi(2, 3)) == all_pairs_central(center::psi(2, 3)));
}

TEST_CASE("serial and parallel kernels agree") {
  NCElement big = nc_mul(center::psi(2, 3), center::psi(1, 3));
  CHECK(normal_form(big, Exec::serial) == normal_form(big, Exec::parallel));
  CHECK(state(big, T(), Exec::serial) == state(big, T(), Exec::parallel));
  CHECK(apply_pt(big, T(), Exec::serial) == apply_pt(big, T(), Exec::parallel));
  CHECK(is_central(center::psi(2, 3), Exec::serial) ==
        is_central(center::psi(2, 3), Exec::parallel));
}
