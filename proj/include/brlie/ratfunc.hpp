#pragma once

#include <stdexcept>
#include <string>

#include "brlie/polynomial.hpp"

namespace brlie {

/// Rational function in the parameter m over Q, kept in canonical form:
/// gcd(num, den) = 1 and den monic. Equality is representation equality.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
  }

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  bool is_zero() const { return num_.is_zero(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction inv() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
  }

  RationalFunction pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RationalFunction r(1), b(*this);
    for (long k = e; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      if (k > 1) b *= b;
    }
    return r;
  }

  /// Fails exactly at the (finitely many) denominator roots.
  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
    return num_.eval(x) / d;
  }

  std::string str() const {
    if (den_ == Polynomial(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
  }

private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
    Rational l = den_.leading();
    den_ = den_.monic();
    num_ = num_ * Polynomial(l.inv());
  }

  Polynomial num_, den_;
};

}  // namespace brlie
