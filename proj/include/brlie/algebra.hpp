#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brlie/diagram.hpp"
#include "brlie/rational.hpp"

namespace brlie {

/// Element of Br_n: finite scalar-weighted sum of diagrams. Zero
/// coefficients are never stored. The deformation parameter m is not part
/// of the value; operations that need it take it as an argument, so the
/// same element type serves specialized (Rational) and generic
/// (RationalFunction) coefficients.
template <typename T>
class AlgebraElement {
public:
  explicit AlgebraElement(int n) : n_(n) {}

  static AlgebraElement unit(int n) { return from_diagram(BrauerDiagram::identity(n)); }
  static AlgebraElement from_diagram(const BrauerDiagram& d, T c = T(1)) {
    AlgebraElement e(d.strands());
    e.add_term(d, std::move(c));
    return e;
  }
  static AlgebraElement s(int n, int i, int j) { return from_diagram(BrauerDiagram::s(n, i, j)); }
  static AlgebraElement p(int n, int i, int j) { return from_diagram(BrauerDiagram::p(n, i, j)); }
  /// t_ij = s_ij - p_ij.
  static AlgebraElement t(int n, int i, int j) {
    AlgebraElement e = s(n, i, j);
    e.add_term(BrauerDiagram::p(n, i, j), T(-1));
    return e;
  }
  /// T = sum over pairs of t_ij.
  static AlgebraElement big_t(int n) {
    AlgebraElement e(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) e += t(n, i, j);
    return e;
  }
  /// t'_ij = t_ij - 2T/(n(n-1)): the traceless modification.
  static AlgebraElement t_prime(int n, int i, int j) {
    AlgebraElement e = t(n, i, j);
    T c = T(-2) / T(n * (n - 1));
    e += c * big_t(n);
    return e;
  }

  int strands() const { return n_; }
  const std::map<BrauerDiagram, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  T coeff(const BrauerDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? T{} : it->second;
  }

  void add_term(const BrauerDiagram& d, T c) {
    if (d.strands() != n_) throw std::invalid_argument("AlgebraElement: strand mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement operator-() const {
    AlgebraElement r(n_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
  }
  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this += -o; }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const T& c, const AlgebraElement& a) {
    AlgebraElement r(a.n_);
    for (const auto& [d, x] : a.terms_) r.add_term(d, c * x);
    return r;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  AlgebraElement tau() const {
    AlgebraElement r(n_);
    for (const auto& [d, c] : terms_) r.add_term(d.tau(), c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c << ")*" << d.str();
      first = false;
    }
    return os.str();
  }

private:
  void check_compatible(const AlgebraElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("AlgebraElement: strand mismatch");
  }
  int n_;
  std::map<BrauerDiagram, T> terms_;
};

/// Bilinear extension of diagram composition; each removed loop contributes
/// a factor m.
template <typename T>
AlgebraElement<T> multiply(const AlgebraElement<T>& a, const AlgebraElement<T>& b, const T& m) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("multiply: strand-count mismatch");
  AlgebraElement<T> r(a.strands());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      auto [d, loops] = compose(da, db);
      T c = ca * cb;
      for (int k = 0; k < loops; ++k) c *= m;
      r.add_term(d, std::move(c));
    }
  return r;
}

/// Markov trace, diagrammatically: tr_M(d) = m^(gamma(d) - n) with gamma
/// the closure loop count, extended linearly.
template <typename T>
T markov_trace(const AlgebraElement<T>& a, const T& m) {
  T r{};
  for (const auto& [d, c] : a.terms()) {
    long e = closure_loops(d) - d.strands();
    r += c * pow_scalar(m, e);
  }
  return r;
}

template <typename T>
T pow_scalar(const T& x, long e) {
  return x.pow(e);
}

/// <a,b> = tr_M(a tau(b)).
template <typename T>
T form(const AlgebraElement<T>& a, const AlgebraElement<T>& b, const T& m) {
  return markov_trace(multiply(a, b.tau(), m), m);
}

}  // namespace brlie
