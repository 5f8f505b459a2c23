#include "glnwalk/element_io.hpp"

#include "glnwalk/center.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace glnwalk::io {

namespace {

using ugln::NCElement;

struct ElementParser {
  std::string_view s;
  std::size_t pos = 0;
  int rank;

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
    throw std::invalid_argument("element parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  long long parse_nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return std::stoll(std::string(s.substr(start, pos - start)));
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

  std::pair<long long, long long> parse_bracket_pair() {
    if (!eat('[')) fail("expected '['");
    long long a = parse_nat();
    if (!eat(',')) fail("expected ','");
    long long b = parse_nat();
    if (!eat(']')) fail("expected ']'");
    return {a, b};
  }

  NCElement parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      NCElement e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = parse_nat();
      if (peek() == '/') {
        ++pos;
        long long den = parse_nat();
        if (den == 0) fail("division by zero");
        return NCElement::constant(rank, MultiPoly(Rational(BigInt(num), BigInt(den))));
      }
      return NCElement::constant(rank, MultiPoly(Rational(num)));
    }
    std::string name = parse_ident();
    if ((name == "E" || name == "Psi") && peek() == '[') {
      auto [a, b] = parse_bracket_pair();
      if (name == "E") {
        if (a < 1 || b < 1 || a > rank || b > rank) fail("generator index outside rank");
        return NCElement::generator(rank, static_cast<int>(a), static_cast<int>(b));
      }
      if (a < 1 || b < 1 || b > rank) fail("Psi index outside rank");
      return center::psi_sub(static_cast<int>(a), static_cast<int>(b), rank);
    }
    return NCElement::constant(rank, MultiPoly::var(Symbol::named(name)));
  }

  bool at_atom_start() {
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  NCElement parse_factor() {
    NCElement a = parse_atom();
    if (peek() == '^') {
      ++pos;
      long long e = parse_nat();
      if (e < 0 || e > 16) fail("exponent out of range");
      NCElement r = NCElement::one(rank);
      for (long long q = 0; q < e; ++q) r = nc_mul(r, a);
      return r;
    }
    return a;
  }

  NCElement parse_term() {
    NCElement a = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        a = nc_mul(a, parse_factor());
      } else if (c == '/') {
        ++pos;
        long long d = parse_nat();
        if (d == 0) fail("division by zero");
        a *= MultiPoly(Rational(BigInt(1), BigInt(d)));
      } else if (at_atom_start()) {
        a = nc_mul(a, parse_factor());
      } else {
        return a;
      }
    }
  }

  NCElement parse_expr() {
    NCElement acc = NCElement::zero(rank);
    bool neg = false;
    if (peek() == '-') {
      ++pos;
      neg = true;
    } else if (peek() == '+') {
      ++pos;
    }
    NCElement t = parse_term();
    acc += neg ? -t : t;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        NCElement u = parse_term();
        acc += (c == '-') ? -u : u;
      } else {
        return acc;
      }
    }
  }
};

int infer_rank(std::string_view text) {
  // scan for E[i,j] and Psi[k,M] index bounds
  int best = 1;
  for (std::size_t p = 0; p < text.size(); ++p) {
    bool is_e = text[p] == 'E';
    bool is_psi = p + 2 < text.size() && text.compare(p, 3, "Psi") == 0;
    if (!is_e && !is_psi) continue;
    if (is_e && p > 0 &&
        (std::isalnum(static_cast<unsigned char>(text[p - 1])) || text[p - 1] == '_'))
      continue;
    std::size_t q = p + (is_psi ? 3 : 1);
    while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
    if (q >= text.size() || text[q] != '[') continue;
    ++q;
    long long vals[2] = {0, 0};
    for (int slot = 0; slot < 2; ++slot) {
      while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
      std::size_t start = q;
      while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
      if (q == start) break;
      vals[slot] = std::stoll(std::string(text.substr(start, q - start)));
      while (q < text.size() && std::isspace(static_cast<unsigned char>(text[q]))) ++q;
      if (slot == 0 && q < text.size() && text[q] == ',') ++q;
    }
    if (is_e)
      best = std::max<long long>(best, std::max(vals[0], vals[1]));
    else
      best = std::max<long long>(best, vals[1]);
  }
  return best;
}

}  // namespace

ugln::NCElement parse_element(std::string_view text, int rank) {
  if (rank <= 0) rank = infer_rank(text);
  ElementParser p{text, 0, rank};
  NCElement r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace glnwalk::io
