#pragma once

#include "glnwalk/multipoly.hpp"
#include "glnwalk/rng.hpp"
#include "glnwalk/ugln.hpp"

#include <vector>

namespace testutil {

using glnwalk::MultiPoly;
using glnwalk::Rational;
using glnwalk::Rng;
using glnwalk::Symbol;

inline Rational random_rational(Rng& rng, long long lo = -9, long long hi = 9,
                                long long den_max = 4) {
  long long num = lo + static_cast<long long>(rng.below(hi - lo + 1));
  long long den = 1 + static_cast<long long>(rng.below(den_max));
  return Rational(glnwalk::BigInt(num), glnwalk::BigInt(den));
}

inline Rational random_positive_rational(Rng& rng, long long hi = 9, long long den_max = 5) {
  long long num = 1 + static_cast<long long>(rng.below(hi));
  long long den = 1 + static_cast<long long>(rng.below(den_max));
  return Rational(glnwalk::BigInt(num), glnwalk::BigInt(den));
}

inline MultiPoly random_poly(Rng& rng, const std::vector<Symbol>& syms, int max_terms = 4,
                             unsigned max_exp = 3) {
  MultiPoly p;
  int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int q = 0; q < terms; ++q) {
    glnwalk::Monomial m;
    for (auto s : syms) {
      unsigned e = static_cast<unsigned>(rng.below(max_exp + 1));
      if (e) m = m.times(glnwalk::Monomial::var(s, e));
    }
    p.add_term(m, random_rational(rng));
  }
  return p;
}

inline glnwalk::ugln::Word random_word(Rng& rng, int rank, int len) {
  glnwalk::ugln::Word w;
  for (int q = 0; q < len; ++q) {
    int i = 1 + static_cast<int>(rng.below(rank));
    int j = 1 + static_cast<int>(rng.below(rank));
    w.push_back(glnwalk::ugln::gen(i, j));
  }
  return w;
}

}  // namespace testutil
