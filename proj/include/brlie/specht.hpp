#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "brlie/matrix.hpp"
#include "brlie/partition.hpp"
#include "brlie/rational.hpp"

namespace brlie {

/// Irreducible representation of S_n in Young's seminormal form over Q.
/// Basis indexed by standard tableaux; generator matrices act on column
/// vectors.
class SpechtRep {
public:
  static constexpr int kMaxSize = 8;

  explicit SpechtRep(const Partition& lambda) : lambda_(lambda) {
    int n = lambda.size();
    if (n > kMaxSize) throw std::invalid_argument("SpechtRep: size bound exceeded");
    tableaux_ = standard_tableaux(lambda);
    int d = static_cast<int>(tableaux_.size());
    std::map<std::vector<int>, int> index;
    for (int t = 0; t < d; ++t) index[key(tableaux_[t])] = t;

    for (int k = 1; k < n; ++k) {
      Matrix<Rational> mat(d, d);
      for (int t = 0; t < d; ++t) {
        const auto& tab = tableaux_[t];
        int dk = tab.content(k + 1) - tab.content(k);  // axial distance, nonzero
        if (dk == 1) {
          mat.at(t, t) = Rational(1);  // same row, adjacent
        } else if (dk == -1) {
          mat.at(t, t) = Rational(-1);  // same column, adjacent
        } else {
          // Swapping k and k+1 yields another standard tableau t2.
          StandardTableau swapped = tab;
          std::swap(swapped.row[k - 1], swapped.row[k]);
          std::swap(swapped.col[k - 1], swapped.col[k]);
          int t2 = index.at(key(swapped));
          Rational rho(1, dk);
          mat.at(t, t) = rho;
          if (dk > 0) {
            // s v_t = rho v_t + v_t2 ; partner handled from the other side.
            mat.at(t2, t) = Rational(1);
          } else {
            mat.at(t2, t) = Rational(1) - rho * rho;
          }
        }
      }
      gens_.push_back(std::move(mat));
    }
  }

  const Partition& shape() const { return lambda_; }
  int dim() const { return static_cast<int>(tableaux_.size()); }
  int group_size() const { return lambda_.size(); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

  /// Matrix of the adjacent transposition (k, k+1), 1 <= k < n.
  const Matrix<Rational>& adjacent(int k) const { return gens_.at(k - 1); }

  /// Matrix of an arbitrary permutation given by images (0-based).
  Matrix<Rational> permutation(const std::vector<int>& w) const {
    Matrix<Rational> m = Matrix<Rational>::identity(dim());
    for (int k : adjacent_factorization(w)) m = m * adjacent(k);
    return m;
  }

  /// Writes w as a product of adjacent transpositions, left-to-right.
  static std::vector<int> adjacent_factorization(std::vector<int> w) {
    std::vector<int> factors;
    int n = static_cast<int>(w.size());
    // Selection sort by adjacent swaps; the recorded swaps, applied in
    // order, rebuild w.
    for (int pass = n - 1; pass > 0; --pass) {
      for (int i = 0; i < pass; ++i) {
        if (w[i] > w[i + 1]) {
          std::swap(w[i], w[i + 1]);
          factors.push_back(i + 1);
        }
      }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
  }

private:
  static std::vector<int> key(const StandardTableau& t) {
    std::vector<int> k = t.row;
    k.insert(k.end(), t.col.begin(), t.col.end());
    return k;
  }

  Partition lambda_;
  std::vector<StandardTableau> tableaux_;
  std::vector<Matrix<Rational>> gens_;
};

/// Character of lambda at a permutation of the given cycle type, computed
/// as an exact matrix trace.
inline Rational specht_character(const SpechtRep& rep, const Partition& cycle_type) {
  int n = rep.group_size();
  if (cycle_type.size() != n) throw std::invalid_argument("specht_character: wrong cycle type size");
  // Representative permutation: consecutive cycles.
  std::vector<int> w(n);
  int pos = 0;
  for (int len : cycle_type.parts()) {
    for (int i = 0; i < len; ++i) w[pos + i] = pos + (i + 1) % len;
    pos += len;
  }
  return rep.permutation(w).trace();
}

namespace detail {

inline mpz_class cycle_type_class_size(int n, const Partition& mu) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  mpz_class z(1);
  std::map<int, int> mult;
  for (int p : mu.parts()) {
    z *= p;
    ++mult[p];
  }
  for (auto [part, m] : mult) {
    mpz_class mf;
    mpz_fac_ui(mf.get_mpz_t(), m);
    z *= mf;
  }
  return fact / z;
}

inline int cycle_type_sign(int n, const Partition& mu) {
  return (n - mu.rows()) % 2 == 0 ? 1 : -1;
}

inline Partition cycle_type_of_square(const Partition& mu) {
  std::vector<int> parts;
  for (int l : mu.parts()) {
    if (l % 2 == 1) parts.push_back(l);
    else {
      parts.push_back(l / 2);
      parts.push_back(l / 2);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

}  // namespace detail

/// Multiplicity of the sign character in S^2(rho) (plus = true) or
/// Lambda^2(rho) (plus = false), via exact character inner products.
inline long sign_multiplicity_in_square(const Partition& lambda, bool symmetric_part) {
  int n = lambda.size();
  SpechtRep rep(lambda);
  std::map<Partition, Rational> chi;
  for (const auto& mu : partitions_of(n)) chi[mu] = specht_character(rep, mu);
  Rational acc(0);
  mpz_class order;
  mpz_fac_ui(order.get_mpz_t(), n);
  for (const auto& mu : partitions_of(n)) {
    Rational c = chi[mu];
    Rational csq = chi[detail::cycle_type_of_square(mu)];
    Rational chi2 = (c * c + (symmetric_part ? csq : -csq)) / Rational(2);
    Rational eps(detail::cycle_type_sign(n, mu));
    acc += Rational(detail::cycle_type_class_size(n, mu)) * eps * chi2;
  }
  Rational result = acc / Rational(mpz_class(order));
  if (!result.is_integer() || result.sign() < 0)
    throw std::logic_error("sign_multiplicity_in_square: non-integral inner product");
  return result.numerator().get_si();
}

inline bool sym_square_contains_sign(const Partition& lambda) {
  return sign_multiplicity_in_square(lambda, true) > 0;
}
inline bool alt_square_contains_sign(const Partition& lambda) {
  return sign_multiplicity_in_square(lambda, false) > 0;
}

}  // namespace brlie
