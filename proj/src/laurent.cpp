#include "glnwalk/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace glnwalk {

void LaurentPoly::add_term(int exp, const MultiPoly& c) {
  if (c.is_zero()) return;
  if (c.degree_in(var_) > 0)
    throw std::invalid_argument("LaurentPoly: coefficient mentions the Laurent variable " +
                                var_.name());
  auto [it, fresh] = t_.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int LaurentPoly::min_exp() const {
  if (t_.empty()) throw std::domain_error("LaurentPoly: zero polynomial");
  return t_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (t_.empty()) throw std::domain_error("LaurentPoly: zero polynomial");
  return t_.rbegin()->first;
}

const MultiPoly& LaurentPoly::coeff(int r) const {
  static const MultiPoly zero;
  auto it = t_.find(r);
  return it == t_.end() ? zero : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (var_ != o.var_) throw std::invalid_argument("LaurentPoly: variable mismatch");
  for (auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var_ != b.var_) throw std::invalid_argument("LaurentPoly: variable mismatch");
  LaurentPoly r(a.var_);
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = LaurentPoly::term(var_, 0, MultiPoly(1));
  LaurentPoly base = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e != 0) os << "*" << var_.name() << "^" << e;
  }
  return os.str();
}

}  // namespace glnwalk
