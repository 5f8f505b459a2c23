#pragma once

#include "glnwalk/multipoly.hpp"

#include <map>

namespace glnwalk {

// Finite Laurent polynomial in one distinguished variable; coefficients are
// MultiPoly in the remaining symbols and must not mention the variable.
class LaurentPoly {
 public:
  explicit LaurentPoly(Symbol var) : var_(var) {}

  static LaurentPoly term(Symbol var, int exp, const MultiPoly& c) {
    LaurentPoly p(var);
    p.add_term(exp, c);
    return p;
  }

  void add_term(int exp, const MultiPoly& c);

  Symbol var() const { return var_; }
  bool is_zero() const { return t_.empty(); }
  int min_exp() const;  // throws on zero
  int max_exp() const;

  // Exact coefficient of var^r; the zero polynomial when absent.
  const MultiPoly& coeff(int r) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned e) const;

  const std::map<int, MultiPoly>& terms() const { return t_; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.t_ == b.t_;
  }

  std::string str() const;

 private:
  Symbol var_;
  std::map<int, MultiPoly> t_;
};

}  // namespace glnwalk
