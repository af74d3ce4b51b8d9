#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brlie/rational.hpp"

namespace brlie {

/// Univariate polynomial over Rational, printed in the variable "m".
class Polynomial {
public:
  Polynomial() {}
  Polynomial(const Rational& c) { if (!c.is_zero()) coeffs_ = {c}; }
  Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial variable() { return Polynomial(std::vector<Rational>{0, 1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
  }
  Rational leading() const {
    if (is_zero()) throw std::domain_error("Polynomial: leading of zero");
    return coeffs_.back();
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; remainder degree < divisor degree.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
    Polynomial q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int d = r.degree() - b.degree();
      Rational c = r.leading() / b.leading();
      std::vector<Rational> t(d + 1);
      t[d] = c;
      Polynomial term(std::move(t));
      q += term;
      r -= term * b;
    }
    return {q, r};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    Rational l = leading();
    for (auto& c : r.coeffs_) c /= l;
    return r;
  }

  /// Monic gcd over Q.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      a = b;
      b = r;
    }
    return a.is_zero() ? a : a.monic();
  }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  std::string str(const std::string& var = "m") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      Rational c = coeff(k);
      if (c.is_zero()) continue;
      if (!first) os << (c.sign() > 0 ? " + " : " - ");
      else if (c.sign() < 0) os << "-";
      Rational a = abs(c);
      if (k == 0 || a != Rational(1)) os << a.str();
      if (k > 0) {
        if (a != Rational(1)) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies m^k
};

}  // namespace brlie
