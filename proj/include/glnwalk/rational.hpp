#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glnwalk {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always reduced, denominator > 0. Backed by
// boost::multiprecision::cpp_rational; this wrapper fixes the "p/q" text form
// used by the CLI and test fixtures.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = boost::multiprecision::cpp_rational(num, den);
  }

  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    return Rational(BigInt(std::string(s.substr(0, slash))),
                    BigInt(std::string(s.substr(slash + 1))));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  bool is_negative() const { return v_ < 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return is_negative() ? -*this : *this; }

  Rational pow(unsigned e) const {
    Rational r(1), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  double to_double() const { return v_.convert_to<double>(); }

  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

 private:
  boost::multiprecision::cpp_rational v_;
};

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace glnwalk
