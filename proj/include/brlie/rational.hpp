#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace brlie {

/// Arbitrary-precision rational, kept canonical (gcd 1, denominator > 0).
/// Thin value wrapper around GMP's mpq_class so it composes cleanly with
/// the scalar-templated containers in this library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "p/q" or "p". Throws on malformed input or q = 0.
  static Rational parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("Rational::parse: bad rational '" + std::string(s) + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
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

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  /// Integer power, negative exponents allowed for nonzero values.
  Rational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpq_class r(1), b(v_);
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      if (k > 1) b *= b;
    }
    return Rational(std::move(r));
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }

  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace brlie
