#pragma once

#include <deque>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "brlie/cell.hpp"
#include "brlie/matrix.hpp"
#include "brlie/rational.hpp"
#include "brlie/series.hpp"

namespace brlie {

// Words in the free monoid on sigma_1^{+-1}, ..., sigma_{n-1}^{+-1}.
// Letter 2k is sigma_{k+1}, letter 2k+1 is sigma_{k+1}^{-1}.
using Word = std::vector<int>;

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << "*";
    os << "s" << (w[k] / 2 + 1);
    if (w[k] % 2) os << "'";
  }
  return os.str();
}

/// Finite linear combination of words, used to state presentation relations.
struct WordPoly {
  std::map<Word, Rational> terms;

  static WordPoly unit() { return scalar(Rational(1)); }
  static WordPoly scalar(const Rational& c) {
    WordPoly p;
    if (!c.is_zero()) p.terms[Word{}] = c;
    return p;
  }
  static WordPoly gen(int letter) {
    WordPoly p;
    p.terms[Word{letter}] = Rational(1);
    return p;
  }

  void add(const Word& w, const Rational& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[w] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  friend WordPoly operator+(WordPoly a, const WordPoly& b) {
    for (const auto& [w, c] : b.terms) a.add(w, c);
    return a;
  }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) {
    for (const auto& [w, c] : b.terms) a.add(w, -c);
    return a;
  }
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b) {
    WordPoly r;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add(w, ca * cb);
      }
    return r;
  }
  friend WordPoly operator*(const Rational& c, WordPoly a) {
    WordPoly r;
    for (const auto& [w, cw] : a.terms) r.add(w, c * cw);
    return r;
  }
};

/// Vector enumeration of the cyclic regular module of an algebra given by
/// generators and relations. Basis elements are images of words acting on 1;
/// relations are imposed at every basis vector and coincidences eliminate the
/// newest element, so the process converges to the algebra itself whenever it
/// is finite dimensional.
class RegularEnumerator {
public:
  RegularEnumerator(int ngen, std::vector<WordPoly> rels, long cap)
      : ngen_(ngen), rels_(std::move(rels)), cap_(cap) {}

  bool run() {
    new_element(Word{});
    int hint_b = 0, hint_g = 0;
    while (true) {
      while (!queue_.empty()) {
        auto [r, b] = queue_.front();
        queue_.pop_front();
        if (r >= 0)
          push_relation(r, b);
        else
          push_row_equation(-r - 1, b);
      }
      int fb = -1, fg = -1;
      for (int b = hint_b; b < total() && fb < 0; ++b) {
        if (dead_[b]) continue;
        for (int g = (b == hint_b ? hint_g : 0); g < ngen_; ++g)
          if (!act_[g][b]) {
            fb = b;
            fg = g;
            break;
          }
      }
      if (fb < 0) return true;
      if (total() >= cap_) return false;
      hint_b = fb;
      hint_g = fg;
      Word w{fg};
      w.insert(w.end(), words_[fb].begin(), words_[fb].end());
      int t = new_element(std::move(w));
      act_[fg][fb] = Vec{{t, Rational(1)}};
      requeue_waiters(fg, fb);
    }
  }

  int alive_dim() const {
    int n = 0;
    for (int b = 0; b < total(); ++b)
      if (!dead_[b]) ++n;
    return n;
  }
  const std::vector<Word>& words() const { return words_; }
  const std::vector<char>& dead() const { return dead_; }

  /// Left action matrix of one generator on the alive basis.
  Matrix<Rational> generator_matrix(int g) const {
    std::vector<int> idx(total(), -1);
    int n = 0;
    for (int b = 0; b < total(); ++b)
      if (!dead_[b]) idx[b] = n++;
    Matrix<Rational> m(n, n);
    for (int b = 0; b < total(); ++b) {
      if (dead_[b]) continue;
      Vec v = *act_[g][b];
      normalize(v);
      for (const auto& [a, c] : v) m.at(idx[a], idx[b]) = c;
    }
    return m;
  }

private:
  using Vec = std::map<int, Rational>;

  int total() const { return static_cast<int>(words_.size()); }

  int new_element(Word w) {
    int t = total();
    words_.push_back(std::move(w));
    dead_.push_back(0);
    rep_.emplace_back();
    for (int g = 0; g < ngen_; ++g) act_[g].push_back(std::nullopt);
    for (size_t r = 0; r < rels_.size(); ++r) {
      satisfied_[r].push_back(0);
      queue_.emplace_back(static_cast<int>(r), t);
    }
    return t;
  }

  static void axpy(Vec& dst, const Rational& c, const Vec& src) {
    for (const auto& [b, v] : src) {
      auto it = dst.find(b);
      if (it == dst.end()) {
        dst[b] = c * v;
        continue;
      }
      it->second += c * v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }

  // Substitutes away dead indices; each rule rewrites strictly downward.
  void normalize(Vec& v) const {
    while (true) {
      int p = -1;
      for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (dead_[it->first]) {
          p = it->first;
          break;
        }
      if (p < 0) return;
      Rational c = v[p];
      v.erase(p);
      axpy(v, c, rep_[p]);
    }
  }

  // nullopt with a blocking (g, b) pair when a product is not yet defined.
  std::optional<Vec> apply_letter(int g, const Vec& v, std::pair<int, int>* block) {
    Vec out;
    for (const auto& [b, c] : v) {
      if (!act_[g][b]) {
        *block = {g, b};
        return std::nullopt;
      }
      axpy(out, c, *act_[g][b]);
    }
    normalize(out);
    return out;
  }

  void push_relation(int r, int b) {
    if (dead_[b] || satisfied_[r][b]) return;
    Vec acc;
    for (const auto& [w, c] : rels_[r].terms) {
      Vec v{{b, Rational(1)}};
      normalize(v);
      std::pair<int, int> block;
      bool okw = true;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto next = apply_letter(*it, v, &block);
        if (!next) {
          waiting_[block].emplace_back(r, b);
          okw = false;
          break;
        }
        v = std::move(*next);
      }
      if (!okw) return;
      axpy(acc, c, v);
    }
    normalize(acc);
    if (acc.empty()) {
      satisfied_[r][b] = 1;
      return;
    }
    coincidence(std::move(acc));
    if (!dead_[b]) queue_.emplace_back(r, b);
  }

  // A dead element p with a defined product g*p = v asserts v = g*rep(p);
  // the difference is a further coincidence once it can be evaluated.
  void push_row_equation(int g, int p) {
    if (!act_[g][p]) return;
    Vec lhs = *act_[g][p];
    normalize(lhs);
    Vec r = rep_[p];
    normalize(r);
    std::pair<int, int> block;
    auto rhs = apply_letter(g, r, &block);
    if (!rhs) {
      waiting_[block].emplace_back(-g - 1, p);
      return;
    }
    axpy(lhs, Rational(-1), *rhs);
    normalize(lhs);
    if (!lhs.empty()) coincidence(std::move(lhs));
  }

  void coincidence(Vec v) {
    auto it = v.rbegin();
    int p = it->first;
    Rational c = it->second;
    v.erase(p);
    Vec& rp = rep_[p];
    rp.clear();
    axpy(rp, Rational(-1) / c, v);
    dead_[p] = 1;
    for (int g = 0; g < ngen_; ++g) {
      requeue_waiters(g, p);
      if (act_[g][p]) queue_.emplace_back(-g - 1, p);
    }
  }

  void requeue_waiters(int g, int b) {
    auto it = waiting_.find({g, b});
    if (it == waiting_.end()) return;
    for (const auto& rb : it->second) queue_.push_back(rb);
    waiting_.erase(it);
  }

  int ngen_;
  std::vector<WordPoly> rels_;
  long cap_;
  std::vector<Word> words_;
  std::vector<char> dead_;
  std::vector<Vec> rep_;
  std::vector<std::vector<std::optional<Vec>>> act_ =
      std::vector<std::vector<std::optional<Vec>>>(ngen_);
  std::vector<std::vector<char>> satisfied_ = std::vector<std::vector<char>>(rels_.size());
  std::deque<std::pair<int, int>> queue_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> waiting_;
};

struct EnumeratedAlgebra {
  int n = 0;
  Rational s, alpha;
  bool has_e = false;
  int dim = 0;
  mpz_class expected_dim;
  bool degenerate = false;
  std::vector<Word> words;
  std::vector<std::string> basis_words;
  std::vector<Matrix<Rational>> sigma, sigma_inv, e;
  Rational delta;  // e_i^2 = delta e_i, as found
  bool delta_ok = false;

  const Matrix<Rational>& letter_matrix(int letter) const {
    return letter % 2 ? sigma_inv[letter / 2] : sigma[letter / 2];
  }

  Matrix<Rational> basis_vector(int b) const {
    Matrix<Rational> v(dim, 1);
    v.at(b, 0) = Rational(1);
    return v;
  }

  Matrix<Rational> apply_word(const Word& w, Matrix<Rational> v) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = letter_matrix(*it) * v;
    return v;
  }

  /// Product of two elements given as coordinate columns.
  Matrix<Rational> mult(const Matrix<Rational>& x, const Matrix<Rational>& y) const {
    Matrix<Rational> acc(dim, 1);
    for (int b = 0; b < dim; ++b) {
      if (x.at(b, 0).is_zero()) continue;
      acc += x.at(b, 0) * apply_word(words[b], y);
    }
    return acc;
  }
};

namespace detail {

inline void add_braid_and_inverse_relations(int n, std::vector<WordPoly>* rels) {
  auto S = [](int i) { return WordPoly::gen(2 * i); };
  auto Si = [](int i) { return WordPoly::gen(2 * i + 1); };
  for (int i = 0; i + 1 < n; ++i) {
    rels->push_back(S(i) * Si(i) - WordPoly::unit());
    rels->push_back(Si(i) * S(i) - WordPoly::unit());
  }
  for (int i = 0; i + 2 < n; ++i)
    rels->push_back(S(i) * S(i + 1) * S(i) - S(i + 1) * S(i) * S(i + 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 2; j + 1 < n; ++j) rels->push_back(S(i) * S(j) - S(j) * S(i));
}

// (x - r1)(x - r2)(x - r3) in the generator sigma_{i+1}
inline WordPoly cubic_relation(int i, const Rational& r1, const Rational& r2, const Rational& r3) {
  WordPoly x = WordPoly::gen(2 * i);
  WordPoly x2 = x * x;
  return x2 * x - (r1 + r2 + r3) * x2 + (r1 * r2 + r1 * r3 + r2 * r3) * x -
         WordPoly::scalar(r1 * r2 * r3);
}

inline WordPoly e_poly(int i, const Rational& s0) {
  Rational d = Rational(1) / (s0 - s0.inv());
  return WordPoly::unit() - d * WordPoly::gen(2 * i) + d * WordPoly::gen(2 * i + 1);
}

}  // namespace detail

inline mpz_class double_factorial_odd(int n) {
  mpz_class r(1);
  if (n >= 1) mpz_2fac_ui(r.get_mpz_t(), 2 * n - 1);
  return r;
}

/// BMW_n at a rational specialization (s0, a0), as basis plus left action
/// matrices, via vector enumeration of the regular module.
inline EnumeratedAlgebra build_bmw(int n, const Rational& s0, const Rational& a0,
                                   long cap = 100000) {
  if (n < 2 || n > 4) throw std::invalid_argument("build_bmw: n must be in [2, 4]");
  if (s0.is_zero() || s0 == Rational(1) || s0 == Rational(-1))
    throw std::invalid_argument("build_bmw: s must avoid {0, 1, -1}");
  if (a0.is_zero()) throw std::invalid_argument("build_bmw: alpha must be nonzero");

  std::vector<WordPoly> rels;
  detail::add_braid_and_inverse_relations(n, &rels);
  // Cubic (x - s)(x + s^-1)(x - alpha^-1). The sign of the third root is
  // forced by the sandwich scalar below: e_i is the spectral projection onto
  // the third eigenvalue lam of sigma_i, and e_i sigma_j e_i = lam^-1 e_i for
  // adjacent j, so lam = alpha^-1 is the only choice compatible with
  // e sigma e = alpha e. The opposite sign collapses the algebra to H_n(s).
  for (int i = 0; i + 1 < n; ++i)
    rels.push_back(detail::cubic_relation(i, s0, -s0.inv(), a0.inv()));
  // e_i sigma_j^{+-1} e_i = alpha^{+-1} e_i for |i - j| = 1
  for (int i = 0; i + 1 < n; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j + 1 >= n) continue;
      WordPoly ei = detail::e_poly(i, s0);
      rels.push_back(ei * WordPoly::gen(2 * j) * ei - a0 * ei);
      rels.push_back(ei * WordPoly::gen(2 * j + 1) * ei - a0.inv() * ei);
    }

  RegularEnumerator en(2 * (n - 1), std::move(rels), cap);
  bool closed = en.run();

  EnumeratedAlgebra alg;
  alg.n = n;
  alg.s = s0;
  alg.alpha = a0;
  alg.has_e = true;
  alg.expected_dim = double_factorial_odd(n);
  if (!closed) {
    alg.degenerate = true;
    return alg;
  }
  alg.dim = en.alive_dim();
  for (size_t b = 0; b < en.words().size(); ++b)
    if (!en.dead()[b]) {
      alg.words.push_back(en.words()[b]);
      alg.basis_words.push_back(word_str(en.words()[b]));
    }
  for (int i = 0; i + 1 < n; ++i) {
    alg.sigma.push_back(en.generator_matrix(2 * i));
    alg.sigma_inv.push_back(en.generator_matrix(2 * i + 1));
  }
  Rational d = Rational(1) / (s0 - s0.inv());
  for (int i = 0; i + 1 < n; ++i)
    alg.e.push_back(Matrix<Rational>::identity(alg.dim) - d * alg.sigma[i] +
                    d * alg.sigma_inv[i]);
  alg.degenerate = mpz_class(alg.dim) != alg.expected_dim;

  // record the loop value e_i^2 = delta e_i
  const Matrix<Rational>& E = alg.e[0];
  Matrix<Rational> EE = E * E;
  alg.delta_ok = true;
  Rational delta;
  bool found = false;
  for (int i = 0; i < alg.dim && !found; ++i)
    for (int j = 0; j < alg.dim && !found; ++j)
      if (!E.at(i, j).is_zero()) {
        delta = EE.at(i, j) / E.at(i, j);
        found = true;
      }
  if (found) {
    alg.delta = delta;
    for (const auto& Ei : alg.e)
      if (!(Ei * Ei == delta * Ei)) alg.delta_ok = false;
  } else {
    alg.delta_ok = false;
  }
  return alg;
}

/// Iwahori-Hecke algebra H_n(s): quadratic relation in place of the cubic,
/// no sandwich relations. Dimension n! at good s.
inline EnumeratedAlgebra hecke_quotient(int n, const Rational& s0, long cap = 100000) {
  if (n < 2 || n > 5) throw std::invalid_argument("hecke_quotient: n must be in [2, 5]");
  if (s0.is_zero() || s0 == Rational(1) || s0 == Rational(-1))
    throw std::invalid_argument("hecke_quotient: s must avoid {0, 1, -1}");

  std::vector<WordPoly> rels;
  detail::add_braid_and_inverse_relations(n, &rels);
  // (x - s)(x + s^{-1}) = 0
  for (int i = 0; i + 1 < n; ++i) {
    WordPoly x = WordPoly::gen(2 * i);
    rels.push_back(x * x - (s0 - s0.inv()) * x - WordPoly::unit());
  }

  RegularEnumerator en(2 * (n - 1), std::move(rels), cap);
  bool closed = en.run();

  EnumeratedAlgebra alg;
  alg.n = n;
  alg.s = s0;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  alg.expected_dim = fact;
  if (!closed) {
    alg.degenerate = true;
    return alg;
  }
  alg.dim = en.alive_dim();
  for (size_t b = 0; b < en.words().size(); ++b)
    if (!en.dead()[b]) {
      alg.words.push_back(en.words()[b]);
      alg.basis_words.push_back(word_str(en.words()[b]));
    }
  for (int i = 0; i + 1 < n; ++i) {
    alg.sigma.push_back(en.generator_matrix(2 * i));
    alg.sigma_inv.push_back(en.generator_matrix(2 * i + 1));
  }
  alg.degenerate = mpz_class(alg.dim) != alg.expected_dim;
  return alg;
}

/// Specializations tried by default; degenerate ones are meant to be skipped.
inline std::vector<std::pair<Rational, Rational>> bmw_default_samples() {
  return {{Rational(2), Rational(7)},
          {Rational(3), Rational(1, 7)},
          {Rational(5, 2), Rational(11, 3)}};
}

inline bool associativity_ok(const EnumeratedAlgebra& alg, int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, alg.dim - 1);
  for (int it = 0; it < samples; ++it) {
    auto a = alg.basis_vector(pick(rng));
    auto b = alg.basis_vector(pick(rng));
    auto c = alg.basis_vector(pick(rng));
    if (!(alg.mult(alg.mult(a, b), c) == alg.mult(a, alg.mult(b, c)))) return false;
  }
  return true;
}

/// Image of a BMW element under the canonical map to the Hecke quotient,
/// evaluating each basis word on the Hecke side.
inline Matrix<Rational> hecke_image(const EnumeratedAlgebra& bmw, const EnumeratedAlgebra& hk,
                                    const Matrix<Rational>& x) {
  Matrix<Rational> acc(hk.dim, 1);
  for (int b = 0; b < bmw.dim; ++b) {
    if (x.at(b, 0).is_zero()) continue;
    acc += x.at(b, 0) * hk.apply_word(bmw.words[b], hk.basis_vector(0));
  }
  return acc;
}

inline bool quotient_respects_products(const EnumeratedAlgebra& bmw, const EnumeratedAlgebra& hk,
                                       int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, bmw.dim - 1);
  for (int it = 0; it < samples; ++it) {
    auto a = bmw.basis_vector(pick(rng));
    auto b = bmw.basis_vector(pick(rng));
    auto lhs = hecke_image(bmw, hk, bmw.mult(a, b));
    auto rhs = hk.mult(hecke_image(bmw, hk, a), hecke_image(bmw, hk, b));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// ---- truncated-series monodromy ----

inline Matrix<TruncatedSeries<Rational>> lift_series(const Matrix<Rational>& a, int K) {
  SeriesOrderGuard guard(K);
  Matrix<TruncatedSeries<Rational>> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = TruncatedSeries<Rational>(a.at(i, j), K);
  return r;
}

/// exp(h a) as a matrix over Q[h]/(h^K); the sum terminates at k = K - 1.
inline Matrix<TruncatedSeries<Rational>> series_exp_h(const Matrix<Rational>& a, int K) {
  SeriesOrderGuard guard(K);
  Matrix<TruncatedSeries<Rational>> r = lift_series(Matrix<Rational>::identity(a.rows()), K);
  Matrix<Rational> pw = Matrix<Rational>::identity(a.rows());
  Rational fact(1);
  for (int k = 1; k < K; ++k) {
    pw = pw * a;
    fact *= Rational(k);
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) r.at(i, j).coeff(k) = pw.at(i, j) / fact;
  }
  return r;
}

struct MonodromyReport {
  int n = 0;
  std::string lambda;
  bool commuting = false;
  bool hecke_factor = false;  // cell label with |lambda| = n, no third eigenvalue
  bool quadratic = false;
  std::vector<std::string> vanishing;  // third roots whose cubic annihilates M
  std::string convention;              // the unique third root when there is one
  bool ok = false;
};

/// Tests which cubic with roots {e^h, -e^{-h}, x} annihilates
/// M = rho(s12) exp(h rho(t12)) mod h^K, over the candidate third roots
/// x = +-e^{+-(1-m)h}. The winning sign is reported, not assumed.
inline MonodromyReport verify_cubic_monodromy(int n, const Partition& lam, const Rational& m0,
                                              int K = 8) {
  if (K < 6) throw std::invalid_argument("verify_cubic_monodromy: K must be >= 6");
  SeriesOrderGuard guard(K);
  using TS = TruncatedSeries<Rational>;

  MonodromyReport rpt;
  rpt.n = n;
  rpt.lambda = lam.str();
  rpt.hecke_factor = lam.size() == n;

  CellRep<Rational> rep(n, lam, m0);
  auto S = rep.diagram_matrix(BrauerDiagram::s(n, 1, 2));
  auto T = rep.t_matrix(1, 2);
  rpt.commuting = S * T == T * S;

  auto M = lift_series(S, K) * series_exp_h(T, K);
  auto I = lift_series(Matrix<Rational>::identity(rep.dim()), K);
  auto fac = [&](const TS& root) { return M - root * I; };

  TS eh = exp_ch(Rational(1), K);
  TS emh = exp_ch(Rational(-1), K);
  auto quad = fac(eh) * fac(-emh);
  rpt.quadratic = quad.is_zero();

  Rational c = Rational(1) - m0;
  std::vector<std::pair<TS, std::string>> cands = {
      {exp_ch(c, K), "exp((1-m)h)"},
      {-exp_ch(-c, K), "-exp(-(1-m)h)"},
      {-exp_ch(c, K), "-exp((1-m)h)"},
      {exp_ch(-c, K), "exp(-(1-m)h)"},
  };
  for (const auto& [root, name] : cands)
    if ((quad * fac(root)).is_zero()) rpt.vanishing.push_back(name);

  if (rpt.hecke_factor) {
    rpt.ok = rpt.commuting && rpt.quadratic;
  } else {
    rpt.ok = rpt.commuting && rpt.vanishing.size() == 1;
    if (rpt.vanishing.size() == 1) rpt.convention = rpt.vanishing[0];
  }
  return rpt;
}

struct UnitarityReport {
  int n = 0;
  std::string lambda;
  bool positive_definite = false;
  bool t_selfadjoint = false;
  bool perms_orthogonal = false;
  bool exp_check = true;  // only substantive in dimension 1
  std::string witness;
  bool ok = false;
};

/// Gram-form transcription of the unitarity hypotheses: every t_ij is
/// G-selfadjoint and every permutation image is G-orthogonal. In dimension 1
/// the formal-unitarity identity eps(exp(h d)) exp(h d) = 1 is checked
/// directly; in general it follows in any G-orthonormal basis.
inline UnitarityReport formal_unitarity_report(int n, const Partition& lam, const Rational& m0,
                                               int K = 8) {
  UnitarityReport rpt;
  rpt.n = n;
  rpt.lambda = lam.str();

  CellRep<Rational> rep(n, lam, m0);
  auto G = gram_cell_form(rep);
  rpt.positive_definite = ldlt_positive_definite(G).positive_definite;

  rpt.t_selfadjoint = true;
  for (int i = 1; i <= n && rpt.t_selfadjoint; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto t = rep.t_matrix(i, j);
      if (!(t.transpose() * G == G * t)) {
        rpt.t_selfadjoint = false;
        rpt.witness = "t_" + std::to_string(i) + std::to_string(j);
        break;
      }
    }

  rpt.perms_orthogonal = true;
  for (int i = 1; i < n; ++i) {
    auto w = rep.s(i);
    if (!(w.transpose() * G * w == G)) {
      rpt.perms_orthogonal = false;
      if (rpt.witness.empty()) rpt.witness = "s_" + std::to_string(i);
      break;
    }
  }

  if (rep.dim() == 1 && n >= 2) {
    SeriesOrderGuard guard(K);
    using TS = TruncatedSeries<Rational>;
    Rational d = rep.t_matrix(1, 2).at(0, 0);
    TS u = exp_ch(d, K);
    rpt.exp_check = epsilon(u) * u == TS::constant(Rational(1), K);
  }

  rpt.ok = rpt.positive_definite && rpt.t_selfadjoint && rpt.perms_orthogonal && rpt.exp_check;
  return rpt;
}

}  // namespace brlie
