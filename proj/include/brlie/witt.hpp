#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "brlie/matrix.hpp"
#include "brlie/rational.hpp"
#include "brlie/specht.hpp"

namespace brlie {

/// Congruence diagonalization of a symmetric bilinear form: returns the
/// diagonal entries of P^t G P for some invertible P.
inline std::vector<Rational> diagonalize_form(Matrix<Rational> g) {
  if (g.rows() != g.cols() || !g.is_symmetric())
    throw std::invalid_argument("diagonalize_form: symmetric matrix required");
  int n = g.rows();
  std::vector<Rational> diag;
  // Work on the trailing block, shrinking by one each step.
  for (int step = 0; step < n; ++step) {
    int base = step;
    // Find a nonzero diagonal entry in the remaining block.
    int piv = -1;
    for (int i = base; i < n; ++i)
      if (!g.at(i, i).is_zero()) { piv = i; break; }
    if (piv < 0) {
      // All diagonal zero: find a nonzero off-diagonal pair and mix.
      int a = -1, b = -1;
      for (int i = base; i < n && a < 0; ++i)
        for (int j = i + 1; j < n && a < 0; ++j)
          if (!g.at(i, j).is_zero()) { a = i; b = j; }
      if (a < 0) {
        // Remaining block is zero: record zero diagonal entries.
        for (int i = base; i < n; ++i) diag.push_back(Rational(0));
        return diag;
      }
      // Replace v_a by v_a + v_b: row/col update.
      for (int j = 0; j < n; ++j) g.at(a, j) += g.at(b, j);
      for (int i = 0; i < n; ++i) g.at(i, a) += g.at(i, b);
      piv = a;
    }
    if (piv != base) {
      // Swap basis vectors piv and base.
      for (int j = 0; j < n; ++j) std::swap(g.at(piv, j), g.at(base, j));
      for (int i = 0; i < n; ++i) std::swap(g.at(i, piv), g.at(i, base));
    }
    Rational d = g.at(base, base);
    diag.push_back(d);
    for (int i = base + 1; i < n; ++i) {
      Rational f = g.at(i, base) / d;
      if (f.is_zero()) continue;
      for (int j = base; j < n; ++j) g.at(i, j) -= f * g.at(base, j);
      for (int j = base; j < n; ++j) g.at(j, i) = g.at(i, j);
    }
  }
  return diag;
}

namespace detail {

/// Is r a square in Q? Reduced numerator and denominator must both be
/// perfect squares.
inline bool is_rational_square(const Rational& r) {
  if (r.sign() < 0) return false;
  if (r.is_zero()) return true;
  mpz_class num = r.numerator(), den = r.denominator();
  return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

/// Bounded search for an isotropic vector of a diagonal form; coefficients
/// range over -bound..bound. Returns nullopt when none is found.
inline std::optional<std::vector<Rational>> find_isotropic_bounded(
    const std::vector<Rational>& diag, int bound) {
  int n = static_cast<int>(diag.size());
  if (n < 2) return std::nullopt;
  std::vector<int> x(n, 0);
  // Iterate over all coefficient vectors with first nonzero entry positive.
  std::function<std::optional<std::vector<Rational>>(int, Rational, bool)> rec =
      [&](int i, Rational acc, bool nonzero) -> std::optional<std::vector<Rational>> {
    if (i == n) {
      if (nonzero && acc.is_zero()) {
        std::vector<Rational> v(n);
        for (int j = 0; j < n; ++j) v[j] = Rational(x[j]);
        return v;
      }
      return std::nullopt;
    }
    int lo = nonzero ? -bound : 0;  // canonical sign for the first nonzero
    for (int c = lo; c <= bound; ++c) {
      x[i] = c;
      auto r = rec(i + 1, acc + Rational(c * c) * diag[i], nonzero || c != 0);
      if (r) return r;
      x[i] = 0;
    }
    return std::nullopt;
  };
  return rec(0, Rational(0), false);
}

}  // namespace detail

struct WittResult {
  int witt_index = 0;
  bool certain = true;  // false if the bounded isotropic search was the limit
};

/// Witt index of a nondegenerate symmetric form over Q: dimension of a
/// maximal totally isotropic subspace, found by splitting hyperbolic
/// planes. Signature bounds certify maximality in the cases of interest.
inline WittResult witt_index(const Matrix<Rational>& form, int search_bound = 8) {
  std::vector<Rational> diag = diagonalize_form(form);
  for (const auto& d : diag)
    if (d.is_zero()) throw std::domain_error("witt_index: degenerate form");

  int index = 0;
  bool certain = true;
  while (true) {
    // Signature of the remaining diagonal form.
    int pos = 0, neg = 0;
    for (const auto& d : diag) (d.sign() > 0 ? pos : neg)++;
    int max_extra = std::min(pos, neg);
    if (max_extra == 0) break;
    // Greedy pairing: d_i, d_j split a hyperbolic plane iff -d_i/d_j is a
    // rational square.
    bool paired = false;
    int n = static_cast<int>(diag.size());
    for (int i = 0; i < n && !paired; ++i)
      for (int j = i + 1; j < n && !paired; ++j) {
        if (detail::is_rational_square(-(diag[i] / diag[j]))) {
          ++index;
          std::vector<Rational> rest;
          for (int k = 0; k < n; ++k)
            if (k != i && k != j) rest.push_back(diag[k]);
          diag = std::move(rest);
          paired = true;
        }
      }
    if (paired) continue;
    // Fall back to a bounded isotropic-vector search on the remaining form.
    auto iso = detail::find_isotropic_bounded(diag, search_bound);
    if (!iso) {
      certain = false;
      break;
    }
    // Split the hyperbolic plane spanned by v and a suitable partner, then
    // restrict to the orthogonal complement.
    const auto& v = *iso;
    int u = -1;
    for (int k = 0; k < n; ++k)
      if (!v[k].is_zero()) { u = k; break; }
    // b(v, e_u) = d_u v_u != 0, so span(v, e_u) is a hyperbolic plane.
    // Complement: vectors w with b(w,v) = b(w,e_u) = 0.
    Matrix<Rational> constraints(2, n);
    for (int k = 0; k < n; ++k) {
      constraints.at(0, k) = diag[k] * v[k];
      constraints.at(1, k) = (k == u) ? diag[k] : Rational(0);
    }
    auto comp = kernel_basis(constraints);
    Matrix<Rational> sub(static_cast<int>(comp.size()), static_cast<int>(comp.size()));
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = 0; b < comp.size(); ++b) {
        Rational s(0);
        for (int k = 0; k < n; ++k) s += comp[a][k] * diag[k] * comp[b][k];
        sub.at(static_cast<int>(a), static_cast<int>(b)) = s;
      }
    ++index;
    diag = diagonalize_form(sub);
    for (const auto& d : diag)
      if (d.is_zero()) throw std::logic_error("witt_index: unexpected degeneracy after split");
  }
  return {index, certain};
}

/// A nondegenerate symmetric form on even dimension is hyperbolic when the
/// Witt index reaches half the dimension.
inline bool is_hyperbolic(const Matrix<Rational>& form) {
  if (form.rows() % 2 != 0) return false;
  return witt_index(form).witt_index == form.rows() / 2;
}

/// Invariant form with beta(g v, g w) = sign(g) beta(v, w): kernel of the
/// system  t(rho(s_k)) B rho(s_k) + B = 0  over all adjacent
/// transpositions. For lambda self-conjugate the solution line is unique.
inline std::vector<Matrix<Rational>> sign_twisted_invariant_forms(const SpechtRep& rep) {
  int d = rep.dim();
  int n = rep.group_size();
  int rows = (n - 1) * d * d;
  Matrix<Rational> sys(rows, d * d);
  int row = 0;
  for (int k = 1; k < n; ++k) {
    const auto& s = rep.adjacent(k);
    // Equation entries for B index (a,b): sum_{i,j} s(i,a) B(i,j) s(j,b) + B(a,b) = 0.
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            Rational c = s.at(i, a) * s.at(j, b);
            if (i == a && j == b) c += Rational(1);
            if (!c.is_zero()) sys.at(row, i * d + j) += c;
          }
        ++row;
      }
  }
  std::vector<Matrix<Rational>> out;
  for (auto& v : kernel_basis(sys)) {
    Matrix<Rational> b(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) b.at(i, j) = v[i * d + j];
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace brlie
