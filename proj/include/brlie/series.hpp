#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brlie/rational.hpp"

namespace brlie {

/// Ambient truncation order used by default-constructed series. Matrix code
/// default-constructs entries, so generic K support goes through this knob.
inline int& series_default_order() {
  static int k = 8;
  return k;
}

/// Temporarily set the default truncation order.
struct SeriesOrderGuard {
  int saved;
  explicit SeriesOrderGuard(int k) : saved(series_default_order()) { series_default_order() = k; }
  ~SeriesOrderGuard() { series_default_order() = saved; }
  SeriesOrderGuard(const SeriesOrderGuard&) = delete;
};

/// Element of C[h]/(h^K): truncated power series in h with exact
/// coefficients. The truncation order K is fixed per value and must agree
/// between operands.
template <typename C = Rational>
class TruncatedSeries {
public:
  static constexpr int kDefaultOrder = 8;

  TruncatedSeries() : coeffs_(series_default_order()) {}
  explicit TruncatedSeries(int order) : coeffs_(check_order(order)) {}
  TruncatedSeries(const C& constant, int order) : coeffs_(check_order(order)) {
    coeffs_[0] = constant;
  }
  explicit TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(static_cast<int>(coeffs_.size()));
  }

  static TruncatedSeries constant(const C& c, int order = 0) {
    return TruncatedSeries(c, order ? order : series_default_order());
  }
  /// The series h itself.
  static TruncatedSeries h(int order = 0) {
    TruncatedSeries s(order ? order : series_default_order());
    if (s.order() > 1) s.coeffs_[1] = C(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  const C& coeff(int k) const { return coeffs_.at(k); }
  C& coeff(int k) { return coeffs_.at(k); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a.check_same(b);
    for (int k = 0; k < a.order(); ++k) a.coeffs_[k] += b.coeffs_[k];
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a + (-b); }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same(b);
    TruncatedSeries r(a.order());
    for (int i = 0; i < a.order(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j < a.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  /// Multiplicative inverse; requires invertible constant term.
  TruncatedSeries inv() const {
    if (coeffs_[0].is_zero())
      throw std::domain_error("TruncatedSeries: inverse needs nonzero constant term");
    TruncatedSeries r(order());
    C c0inv = C(1) / coeffs_[0];
    r.coeffs_[0] = c0inv;
    for (int k = 1; k < order(); ++k) {
      C acc{};
      for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -(c0inv * acc);
    }
    return r;
  }

  std::string str(const std::string& var = "h") const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < order(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!first) os << " + ";
      os << coeffs_[k];
      if (k >= 1) {
        os << "*" << var;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() << ")";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    return os << s.str();
  }

private:
  static int check_order(int order) {
    if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    return order;
  }
  void check_same(const TruncatedSeries& o) const {
    if (order() != o.order())
      throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
  }

  std::vector<C> coeffs_;
};

/// exp of a series with zero constant term: sum of a^k/k! truncated at h^K.
template <typename C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& a) {
  if (!a.coeff(0).is_zero())
    throw std::domain_error("series_exp: nonzero constant term");
  TruncatedSeries<C> r = TruncatedSeries<C>::constant(C(1), a.order());
  TruncatedSeries<C> term = r;
  for (int k = 1; k < a.order(); ++k) {
    term = term * a;
    for (int j = 0; j < term.order(); ++j) term.coeff(j) = term.coeff(j) / C(k);
    r += term;
  }
  return r;
}

/// The involution h -> -h: coefficient of h^k picks up (-1)^k.
template <typename C>
TruncatedSeries<C> epsilon(const TruncatedSeries<C>& a) {
  TruncatedSeries<C> r = a;
  for (int k = 1; k < r.order(); k += 2) r.coeff(k) = -r.coeff(k);
  return r;
}

/// exp(c h) as a convenience.
template <typename C>
TruncatedSeries<C> exp_ch(const C& c, int order = 0) {
  TruncatedSeries<C> ch = TruncatedSeries<C>::h(order);
  for (int k = 0; k < ch.order(); ++k) ch.coeff(k) = ch.coeff(k) * c;
  return series_exp(ch);
}

}  // namespace brlie
