#pragma once

#include "glnwalk/exec.hpp"
#include "glnwalk/multipoly.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace glnwalk::ugln {

// Generator E_ij packed as (i << 8) | j; indices are 1-based, rank <= 255.
using Gen = std::uint16_t;
constexpr Gen gen(int i, int j) { return static_cast<Gen>((i << 8) | j); }
constexpr int gen_i(Gen g) { return g >> 8; }
constexpr int gen_j(Gen g) { return g & 0xff; }

// PBW generator order: strictly lower (i > j), then diagonal, then strictly
// upper, lexicographic by (i, j) within each class. With this order the
// Harish-Chandra projection becomes a pure "diagonal words only" term filter.
constexpr int pbw_class(Gen g) {
  return gen_i(g) > gen_j(g) ? 0 : (gen_i(g) == gen_j(g) ? 1 : 2);
}
constexpr std::uint32_t pbw_key(Gen g) {
  return (static_cast<std::uint32_t>(pbw_class(g)) << 16) | g;
}

using Word = std::vector<Gen>;  // empty word = identity monomial

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Gen g : w) h = (h ^ g) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

std::string word_str(const Word& w);
bool word_is_normal(const Word& w);

// Element of U(gl_N): finite linear combination of generator words with
// exact polynomial coefficients.
class NCElement {
 public:
  explicit NCElement(int rank);

  static NCElement zero(int rank) { return NCElement(rank); }
  static NCElement one(int rank) { return constant(rank, MultiPoly(1)); }
  static NCElement constant(int rank, const MultiPoly& c) {
    NCElement e(rank);
    e.add_term(Word{}, c);
    return e;
  }
  static NCElement generator(int rank, int i, int j) {
    NCElement e(rank);
    e.add_term(Word{gen(i, j)}, MultiPoly(1));
    return e;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  int degree() const;  // max word length, -1 when zero

  void add_term(const Word& w, const MultiPoly& c);
  MultiPoly coeff(const Word& w) const;

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const MultiPoly& c);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(NCElement a, const MultiPoly& c) { return a *= c; }
  friend NCElement operator*(const MultiPoly& c, NCElement a) { return a *= c; }
  NCElement operator-() const;

  friend bool operator==(const NCElement& a, const NCElement& b) {
    return a.rank_ == b.rank_ && a.t_ == b.t_;
  }
  friend bool operator!=(const NCElement& a, const NCElement& b) { return !(a == b); }

  const std::unordered_map<Word, MultiPoly, WordHash>& terms() const { return t_; }

  std::string str() const;  // canonical rendering, sorted words

 private:
  int rank_;
  std::unordered_map<Word, MultiPoly, WordHash> t_;
};

// Free product: word concatenation extended bilinearly, no normalization.
NCElement nc_mul(const NCElement& a, const NCElement& b);
inline NCElement operator*(const NCElement& a, const NCElement& b) { return nc_mul(a, b); }

NCElement commutator(const NCElement& a, const NCElement& b);

// Unique PBW normal form under the order above. Rewrites adjacent
// out-of-order pairs with E_ij E_kl = E_kl E_ij + d_jk E_il - d_il E_kj;
// each swap removes one inversion at equal degree, corrections drop degree.
NCElement normal_form(const NCElement& x, Exec exec = Exec::parallel);

inline constexpr int kDefaultStateDegreeLimit = 12;  // Bell(m) growth cap

// counts[p] = number of set partitions of {1..m} with p blocks in which every
// block, traversed in increasing order, is cyclically matched
// (j_{b1}=i_{b2}, ..., j_{bk}=i_{b1}).
std::vector<std::int64_t> state_block_counts(const Word& w,
                                             int degree_limit = kDefaultStateDegreeLimit);

// The state <.>_time via the set-partition formula, extended linearly;
// the empty word has state 1.
MultiPoly state(const NCElement& x, const MultiPoly& time, Exec exec = Exec::parallel,
                int degree_limit = kDefaultStateDegreeLimit);

// All 2^len splittings (E_S, E_{K\S}) of a word, both factors keeping the
// original letter order.
std::vector<std::pair<Word, Word>> coproduct(const Word& w);

// Markov operator P_time: word E_K -> sum_{S subset K} <E_{K\S}>_time E_S,
// extended linearly. Output is not normal-ordered.
NCElement apply_pt(const NCElement& x, const MultiPoly& time, Exec exec = Exec::parallel);

// True iff normal_form(x*E_ij - E_ij*x) = 0 for all generators E_ij.
// Checked against the Chevalley set {E_kk, E_k(k+1), E_(k+1)k}, which
// generates the algebra, so the condition is equivalent.
bool is_central(const NCElement& x, Exec exec = Exec::parallel);

}  // namespace glnwalk::ugln
