#include "glnwalk/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace glnwalk {

bool monomial_print_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  // name-sorted factor lists
  auto named = [](const Monomial& m) {
    std::vector<std::pair<std::string, unsigned>> v;
    for (auto& [s, e] : m.factors()) v.emplace_back(s.name(), e);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto va = named(a), vb = named(b);
  for (std::size_t i = 0; i < std::min(va.size(), vb.size()); ++i) {
    if (va[i].first != vb[i].first) return va[i].first < vb[i].first;
    if (va[i].second != vb[i].second) return va[i].second > vb[i].second;
  }
  return va.size() < vb.size();
}

Rational MultiPoly::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (t_.size() == 1 && t_.begin()->first.is_one()) return t_.begin()->second;
  throw std::domain_error("MultiPoly: not a constant: " + str());
}

MultiPoly MultiPoly::coeff_of(Symbol s, unsigned k) const {
  MultiPoly r;
  for (auto& [m, c] : t_) {
    if (m.degree_in(s) != k) continue;
    Monomial rest;
    for (auto& [sym, e] : m.factors())
      if (sym != s) rest = rest.times(Monomial::var(sym, e));
    r.add_term(rest, c);
  }
  return r;
}

std::pair<int, MultiPoly> MultiPoly::leading_order_in(Symbol s) const {
  if (is_zero()) throw std::domain_error("leading_order_in: zero polynomial");
  int d = degree_in(s);
  return {d, coeff_of(s, static_cast<unsigned>(d))};
}

MultiPoly MultiPoly::substitute(
    const std::vector<std::pair<Symbol, MultiPoly>>& bindings) const {
  auto bound = [&](Symbol s) -> const MultiPoly* {
    for (auto& [sym, p] : bindings)
      if (sym == s) return &p;
    return nullptr;
  };
  MultiPoly out;
  for (auto& [m, c] : t_) {
    MultiPoly term(c);
    for (auto& [sym, e] : m.factors()) {
      if (const MultiPoly* p = bound(sym))
        term *= p->pow(e);
      else
        term *= MultiPoly::var(sym).pow(e);
    }
    out += term;
  }
  return out;
}

Rational MultiPoly::evaluate(
    const std::vector<std::pair<Symbol, Rational>>& bindings) const {
  Rational out(0);
  for (auto& [m, c] : t_) {
    Rational term = c;
    for (auto& [sym, e] : m.factors()) {
      bool found = false;
      for (auto& [bs, bv] : bindings) {
        if (bs == sym) {
          term *= bv.pow(e);
          found = true;
          break;
        }
      }
      if (!found)
        throw std::domain_error("MultiPoly::evaluate: unbound symbol " + sym.name());
    }
    out += term;
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(Rational(1));
  MultiPoly base = *this;
  for (; e; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

std::vector<std::pair<Monomial, Rational>> MultiPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return monomial_print_less(a.first, b.first); });
  return v;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : sorted_terms()) {
    Rational a = c.abs();
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    bool need_coeff = m.is_one() || a != Rational(1);
    if (need_coeff) os << a.str();
    bool need_star = need_coeff;
    // factors in name order
    std::vector<std::pair<std::string, unsigned>> named;
    for (auto& [s, e] : m.factors()) named.emplace_back(s.name(), e);
    std::sort(named.begin(), named.end());
    for (auto& [name, e] : named) {
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser for the canonical polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*        (juxtaposition = *)
//   factor := atom ['^' nat]
//   atom   := nat | identifier | '(' expr ')'
// '/' is only valid before an integer (rational literal / exact division).
struct PolyParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  BigInt parse_nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return BigInt(std::string(s.substr(start, pos - start)));
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      fail("expected identifier");
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(start, pos - start));
  }

  MultiPoly parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      MultiPoly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(Rational(parse_nat()));
    return MultiPoly::var(Symbol::named(parse_ident()));
  }

  MultiPoly parse_factor() {
    MultiPoly a = parse_atom();
    if (peek() == '^') {
      ++pos;
      BigInt e = parse_nat();
      if (e > 64) fail("exponent too large");
      a = a.pow(e.convert_to<unsigned>());
    }
    return a;
  }

  bool at_atom_start() {
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  MultiPoly parse_term() {
    MultiPoly a = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        a *= parse_factor();
      } else if (c == '/') {
        ++pos;
        BigInt d = parse_nat();
        if (d == 0) fail("division by zero");
        a *= Rational(BigInt(1), d);
      } else if (at_atom_start()) {
        a *= parse_factor();
      } else {
        return a;
      }
    }
  }

  MultiPoly parse_expr() {
    MultiPoly acc;
    bool neg = false;
    if (peek() == '-') {
      ++pos;
      neg = true;
    } else if (peek() == '+') {
      ++pos;
    }
    MultiPoly t = parse_term();
    acc += neg ? -t : t;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        MultiPoly u = parse_term();
        acc += (c == '-') ? -u : u;
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  PolyParser p{text};
  MultiPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

std::optional<std::vector<MultiPoly>> linear_solve_exact(
    std::vector<std::vector<Rational>> rows, std::vector<MultiPoly> rhs) {
  const std::size_t nrows = rows.size();
  if (rhs.size() != nrows) throw std::invalid_argument("linear_solve_exact: shape mismatch");
  const std::size_t ncols = nrows == 0 ? 0 : rows[0].size();
  std::vector<std::size_t> pivot_row;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t p = r;
    while (p < nrows && rows[p][col].is_zero()) ++p;
    if (p == nrows) return std::nullopt;  // rank-deficient: no unique solution
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = Rational(1) / rows[r][col];
    for (std::size_t c = col; c < ncols; ++c) rows[r][c] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (std::size_t c = col; c < ncols; ++c) rows[i][c] -= f * rows[r][c];
      rhs[i] -= MultiPoly(f) * rhs[r];
    }
    pivot_row.push_back(r);
    ++r;
  }
  if (pivot_row.size() < ncols) return std::nullopt;
  // consistency of the remaining rows
  for (std::size_t i = r; i < nrows; ++i) {
    for (auto& c : rows[i])
      if (!c.is_zero()) throw std::logic_error("linear_solve_exact: elimination failed");
    if (!rhs[i].is_zero()) return std::nullopt;  // inconsistent
  }
  std::vector<MultiPoly> sol(ncols);
  for (std::size_t col = 0; col < ncols; ++col) sol[col] = rhs[pivot_row[col]];
  return sol;
}

}  // namespace glnwalk
