#pragma once

#include "glnwalk/rational.hpp"
#include "glnwalk/symbols.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace glnwalk {

// Product of variable powers; factors sorted by symbol id, exponents > 0.
class Monomial {
 public:
  Monomial() = default;  // the monomial 1

  static Monomial var(Symbol s, unsigned e = 1) {
    Monomial m;
    if (e > 0) m.f_.emplace_back(s, e);
    return m;
  }

  Monomial times(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
      if (f_[i].first.id() < o.f_[j].first.id()) {
        r.f_.push_back(f_[i++]);
      } else if (o.f_[j].first.id() < f_[i].first.id()) {
        r.f_.push_back(o.f_[j++]);
      } else {
        r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
        ++i, ++j;
      }
    }
    for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
    for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
    return r;
  }

  Monomial pow(unsigned e) const {
    Monomial r = *this;
    if (e == 0) return Monomial();
    for (auto& [s, x] : r.f_) x *= e;
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (auto& [s, e] : f_) d += static_cast<int>(e);
    return d;
  }

  unsigned degree_in(Symbol s) const {
    for (auto& [sym, e] : f_)
      if (sym == s) return e;
    return 0;
  }

  bool is_one() const { return f_.empty(); }
  const std::vector<std::pair<Symbol, unsigned>>& factors() const { return f_; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<std::pair<Symbol, unsigned>> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto& [s, e] : m.factors()) {
      h = (h ^ s.id()) * 1099511628211ull;
      h = (h ^ e) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Canonical term order used for printing: total degree descending, then
// lexicographic by variable name with the larger exponent first.
bool monomial_print_less(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial with exact rational coefficients.
// No zero coefficients are stored; equality is exact.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero
  MultiPoly(const Rational& c) { add_term(Monomial(), c); }
  MultiPoly(long long c) : MultiPoly(Rational(c)) {}
  MultiPoly(int c) : MultiPoly(Rational(c)) {}

  static MultiPoly var(Symbol s) {
    MultiPoly p;
    p.add_term(Monomial::var(s), Rational(1));
    return p;
  }

  static MultiPoly parse(std::string_view text);

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
  }
  Rational constant_value() const;  // throws unless is_constant()

  std::size_t term_count() const { return t_.size(); }
  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m.total_degree());
    return d;
  }
  int degree_in(Symbol s) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.degree_in(s)));
    return d;
  }

  Rational coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
  }

  // Coefficient polynomial of s^k (s removed from the result).
  MultiPoly coeff_of(Symbol s, unsigned k) const;

  // Highest power of `s` present and its coefficient; throws on zero input.
  std::pair<int, MultiPoly> leading_order_in(Symbol s) const;

  MultiPoly substitute(const std::vector<std::pair<Symbol, MultiPoly>>& bindings) const;

  // Total evaluation; throws if a symbol of the polynomial is unbound.
  Rational evaluate(const std::vector<std::pair<Symbol, Rational>>& bindings) const;

  MultiPoly& operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }

  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (auto& [m, c] : a.t_) {
      auto it = b.t_.find(m);
      if (it == b.t_.end() || it->second != c) return false;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  const std::unordered_map<Monomial, Rational, MonomialHash>& terms() const { return t_; }

  // Terms in the canonical print order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  std::string str() const;

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> t_;
};

// Exact solve of an (possibly overdetermined, consistent) linear system with
// rational matrix and polynomial right-hand side. Returns nullopt when the
// solution is not unique or the system is inconsistent.
std::optional<std::vector<MultiPoly>> linear_solve_exact(
    std::vector<std::vector<Rational>> rows, std::vector<MultiPoly> rhs);

}  // namespace glnwalk
