#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "brlie/rational.hpp"

namespace brlie {

/// Dense matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
  static Matrix scalar(int n, const T& c) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const T& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a + (-b); }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator*(const T& c, Matrix a) {
    for (auto& x : a.data_) x = c * x;
    return a;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// [a,b] = ab - ba.
  friend Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }
  int rows_, cols_;
  std::vector<T> data_;
};

namespace detail {

/// Rescale a vector in place to a convenient representative of its line.
/// Generic fallback: divide by the first nonzero entry.
template <typename T>
void normalize_line(std::vector<T>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      T p = x;
      for (auto& y : v) y = y / p;
      return;
    }
  }
}

/// For rationals: scale to a primitive integer vector with positive lead,
/// which keeps echelon entries small across long reduction chains.
inline void normalize_line(std::vector<Rational>& v) {
  mpz_class lcm_den(1), gcd_num(0);
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
    lcm_den = l;
  }
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_class n = x.numerator() * (lcm_den / x.denominator());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    gcd_num = g;
  }
  if (gcd_num == 0) return;
  Rational scale(mpq_class(lcm_den, gcd_num));
  int lead_sign = 0;
  for (auto& x : v) {
    if (x.is_zero()) continue;
    x = x * scale;
    if (lead_sign == 0) lead_sign = x.sign();
  }
  if (lead_sign < 0)
    for (auto& x : v) x = -x;
}

}  // namespace detail

/// Incrementally maintained echelonized row space, the workhorse for
/// spans, membership tests and kernels in exact arithmetic.
template <typename T>
class RowSpace {
public:
  explicit RowSpace(int ncols) : ncols_(ncols) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  /// Reduces v against the current basis in place; on exit v is zero iff it
  /// was in the span.
  void reduce(std::vector<T>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const T& x = v[pivots_[r]];
      if (x.is_zero()) continue;
      T c = x / rows_[r][pivots_[r]];
      const auto& row = rows_[r];
      for (int j = 0; j < ncols_; ++j)
        if (!row[j].is_zero()) v[j] -= c * row[j];
    }
  }

  bool contains(std::vector<T> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds a vector; returns true if it enlarged the span.
  bool add(std::vector<T> v) {
    if (static_cast<int>(v.size()) != ncols_)
      throw std::invalid_argument("RowSpace: wrong vector length");
    reduce(v);
    int p = -1;
    for (int j = 0; j < ncols_; ++j)
      if (!v[j].is_zero()) { p = j; break; }
    if (p < 0) return false;
    detail::normalize_line(v);
    // Re-find the pivot: normalization keeps the leading position.
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<std::vector<T>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

private:
  int ncols_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> pivots_;
};

template <typename T>
int rank(const Matrix<T>& a) {
  RowSpace<T> rs(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<T> row(a.cols());
    for (int j = 0; j < a.cols(); ++j) row[j] = a.at(i, j);
    rs.add(std::move(row));
  }
  return rs.dim();
}

/// Basis of { x : A x = 0 }.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a) {
  int n = a.cols();
  // Gauss-Jordan on a copy.
  std::vector<std::vector<T>> rows;
  rows.reserve(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<T> r(n);
    for (int j = 0; j < n; ++j) r[j] = a.at(i, j);
    rows.push_back(std::move(r));
  }
  std::vector<int> pivot_col;
  size_t rr = 0;
  for (int c = 0; c < n && rr < rows.size(); ++c) {
    size_t sel = rr;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rr], rows[sel]);
    T p = rows[rr][c];
    for (int j = c; j < n; ++j) rows[rr][j] = rows[rr][j] / p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rr || rows[i][c].is_zero()) continue;
      T f = rows[i][c];
      for (int j = c; j < n; ++j) rows[i][j] -= f * rows[rr][j];
    }
    pivot_col.push_back(c);
    ++rr;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<T> v(n);
    v[c] = T(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -rows[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b; returns nullopt when inconsistent. For underdetermined
/// systems an arbitrary solution is produced.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  int n = a.cols();
  Matrix<T> aug(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = -b[i];
  }
  // x solves Ax=b iff (x,1) is in the kernel of [A|-b] with last coord 1.
  for (auto& v : kernel_basis(aug)) {
    if (!v[n].is_zero()) {
      T c = v[n];
      std::vector<T> x(n);
      for (int j = 0; j < n; ++j) x[j] = v[j] / c;
      return x;
    }
  }
  return std::nullopt;
}

struct LdltResult {
  bool positive_definite = false;
  /// Index of the first non-positive pivot when not positive definite.
  std::optional<int> failing_pivot_index;
  /// True when a zero pivot made the symmetric elimination break down.
  bool degenerate = false;
};

/// Sylvester-style positive definiteness test by symmetric elimination with
/// exact rational pivots.
inline LdltResult ldlt_positive_definite(Matrix<Rational> g) {
  LdltResult res;
  if (g.rows() != g.cols()) throw std::invalid_argument("ldlt: square matrix required");
  int n = g.rows();
  for (int k = 0; k < n; ++k) {
    Rational piv = g.at(k, k);
    if (piv.sign() <= 0) {
      res.failing_pivot_index = k;
      res.degenerate = piv.is_zero();
      return res;
    }
    for (int i = k + 1; i < n; ++i) {
      Rational f = g.at(i, k) / piv;
      if (f.is_zero()) continue;
      for (int j = k + 1; j < n; ++j) g.at(i, j) -= f * g.at(k, j);
    }
  }
  res.positive_definite = true;
  return res;
}

}  // namespace brlie
