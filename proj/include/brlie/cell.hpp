#pragma once

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "brlie/algebra.hpp"
#include "brlie/diagram.hpp"
#include "brlie/matrix.hpp"
#include "brlie/partition.hpp"
#include "brlie/specht.hpp"

namespace brlie {

/// Partial matching on {1..n}: k disjoint arcs, the remaining r = n-2k
/// points dangle free. Free points are always taken in increasing order.
class Dangle {
public:
  Dangle(int n, std::vector<int> partner) : partner_(std::move(partner)) {
    if (static_cast<int>(partner_.size()) != n)
      throw std::invalid_argument("Dangle: wrong partner size");
  }

  static Dangle free_all(int n) { return Dangle(n, std::vector<int>(n, -1)); }

  int n() const { return static_cast<int>(partner_.size()); }
  int partner(int i) const { return partner_[i]; }
  bool is_free(int i) const { return partner_[i] < 0; }

  int arcs() const {
    int k = 0;
    for (int i = 0; i < n(); ++i)
      if (partner_[i] > i) ++k;
    return k;
  }

  std::vector<int> free_points() const {
    std::vector<int> f;
    for (int i = 0; i < n(); ++i)
      if (partner_[i] < 0) f.push_back(i);
    return f;
  }

  friend auto operator<=>(const Dangle& a, const Dangle& b) = default;

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i)
      if (partner_[i] > i) os << "(" << i + 1 << "," << partner_[i] + 1 << ")";
    bool first = true;
    os << "|";
    for (int i : free_points()) {
      if (!first) os << ",";
      os << i + 1;
      first = false;
    }
    return os.str();
  }

private:
  std::vector<int> partner_;
};

/// All dangles on n points with exactly k arcs, lexicographically.
inline std::vector<Dangle> enumerate_dangles(int n, int k) {
  std::vector<Dangle> out;
  std::vector<int> partner(n, -1);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left == 0) out.push_back(Dangle(n, partner));
      return;
    }
    if (partner[i] >= 0) {
      rec(i + 1, left);
      return;
    }
    rec(i + 1, left);  // i stays free
    if (left > 0) {
      for (int j = i + 1; j < n; ++j) {
        if (partner[j] >= 0) continue;
        partner[i] = j;
        partner[j] = i;
        rec(i + 1, left - 1);
        partner[i] = -1;
        partner[j] = -1;
      }
    }
  };
  rec(0, k);
  return out;
}

/// Result of pushing a diagram onto a dangle: the new dangle, the number of
/// closed middle loops, and the induced permutation of the free slots
/// (image form: slot j of the old dangle connects to free position perm[j]
/// of the new one).
struct DangleAction {
  Dangle out;
  int loops = 0;
  std::vector<int> perm;
};

/// Stacks dangle v below diagram a. Returns nullopt when the number of
/// through strands drops, i.e. the product falls into a lower cell.
inline std::optional<DangleAction> act(const BrauerDiagram& a, const Dangle& v) {
  int n = a.strands();
  if (v.n() != n) throw std::invalid_argument("act: size mismatch");
  auto vfree = v.free_points();
  int r = static_cast<int>(vfree.size());
  std::vector<int> slot_of(n, -1);
  for (int j = 0; j < r; ++j) slot_of[vfree[j]] = j;

  std::vector<bool> top_done(n, false), mid_seen(n, false);
  std::vector<int> new_partner(n, -1);
  std::vector<int> slot_top(r, -1);  // slot j -> top endpoint
  int through = 0;

  for (int i = 0; i < n; ++i) {
    if (top_done[i]) continue;
    top_done[i] = true;
    int w = a.partner(i);
    while (true) {
      if (w < n) {
        top_done[w] = true;
        new_partner[i] = w;
        new_partner[w] = i;
        break;
      }
      int u = w - n;
      mid_seen[u] = true;
      if (v.is_free(u)) {
        slot_top[slot_of[u]] = i;
        ++through;
        break;
      }
      int u2 = v.partner(u);
      mid_seen[u2] = true;
      w = a.partner(n + u2);
    }
  }
  if (through < r) return std::nullopt;

  int loops = 0;
  for (int u0 = 0; u0 < n; ++u0) {
    if (mid_seen[u0]) continue;
    ++loops;
    int u = u0;
    do {
      mid_seen[u] = true;
      int u2 = v.partner(u);
      mid_seen[u2] = true;
      u = a.partner(n + u2) - n;
    } while (u != u0);
  }

  Dangle out(n, new_partner);
  auto nfree = out.free_points();
  std::vector<int> pos_of(n, -1);
  for (int i = 0; i < static_cast<int>(nfree.size()); ++i) pos_of[nfree[i]] = i;
  std::vector<int> perm(r);
  for (int j = 0; j < r; ++j) perm[j] = pos_of[slot_top[j]];
  return DangleAction{std::move(out), loops, std::move(perm)};
}

/// Cell module of Br_n(m) for a partition lambda of r = n - 2k: basis
/// dangle x standard tableau, diagrams act by stacking with an m-power per
/// closed loop and the Specht action on the tableau part.
template <typename T>
class CellRep {
public:
  CellRep(int n, const Partition& lambda, T m)
      : n_(n), lambda_(lambda), m_(std::move(m)), specht_(lambda) {
    int r = lambda.size();
    if (r > n || (n - r) % 2 != 0)
      throw std::invalid_argument("CellRep: need |lambda| <= n with n-|lambda| even");
    dangles_ = enumerate_dangles(n, (n - r) / 2);
    for (size_t i = 0; i < dangles_.size(); ++i) dangle_index_[dangles_[i]] = static_cast<int>(i);
    if (mpz_class(dim()) != cell_dimension(n, lambda))
      throw std::logic_error("CellRep: dimension mismatch");
    for (int i = 1; i < n; ++i) {
      smat_.push_back(diagram_matrix(BrauerDiagram::s(n, i, i + 1)));
      pmat_.push_back(diagram_matrix(BrauerDiagram::p(n, i, i + 1)));
    }
    if (!check_relations()) throw std::logic_error("CellRep: defining relations failed");
  }

  int n() const { return n_; }
  const Partition& shape() const { return lambda_; }
  const T& m() const { return m_; }
  int dim() const { return static_cast<int>(dangles_.size()) * specht_.dim(); }
  const std::vector<Dangle>& dangles() const { return dangles_; }
  const SpechtRep& specht() const { return specht_; }

  /// Generators s_i = s_{i,i+1}, p_i = p_{i,i+1}, 1 <= i < n.
  const Matrix<T>& s(int i) const { return smat_.at(i - 1); }
  const Matrix<T>& p(int i) const { return pmat_.at(i - 1); }

  Matrix<T> diagram_matrix(const BrauerDiagram& d) const {
    int f = specht_.dim();
    Matrix<T> mat(dim(), dim());
    for (size_t vi = 0; vi < dangles_.size(); ++vi) {
      auto res = act(d, dangles_[vi]);
      if (!res) continue;
      int wi = dangle_index_.at(res->out);
      T c = m_.pow(res->loops);
      Matrix<Rational> rho = specht_.permutation(res->perm);
      for (int t = 0; t < f; ++t)
        for (int t2 = 0; t2 < f; ++t2) {
          const Rational& x = rho.at(t2, t);
          if (!x.is_zero()) mat.at(wi * f + t2, static_cast<int>(vi) * f + t) = c * T(x);
        }
    }
    return mat;
  }

  Matrix<T> element_matrix(const AlgebraElement<T>& e) const {
    Matrix<T> mat(dim(), dim());
    for (const auto& [d, c] : e.terms()) mat += c * diagram_matrix(d);
    return mat;
  }

  /// rho(t_ij) = rho(s_ij) - rho(p_ij).
  Matrix<T> t_matrix(int i, int j) const {
    return diagram_matrix(BrauerDiagram::s(n_, i, j)) - diagram_matrix(BrauerDiagram::p(n_, i, j));
  }

  bool check_relations() const {
    auto id = Matrix<T>::identity(dim());
    for (int i = 1; i < n_; ++i) {
      const auto& si = s(i);
      const auto& pi = p(i);
      if (!(si * si == id)) return false;
      if (!(pi * pi == m_ * pi)) return false;
      if (!(si * pi == pi) || !(pi * si == pi)) return false;
      for (int j = i + 1; j < n_; ++j) {
        const auto& sj = s(j);
        const auto& pj = p(j);
        if (j == i + 1) {
          if (!(si * sj * si == sj * si * sj)) return false;
          if (!(pi * sj * pi == pi) || !(pj * si * pj == pj)) return false;
          if (!(pi * pj * pi == pi) || !(pj * pi * pj == pj)) return false;
        } else {
          if (!(si * sj == sj * si)) return false;
          if (!(pi * pj == pj * pi)) return false;
          if (!(si * pj == pj * si) || !(sj * pi == pi * sj)) return false;
        }
      }
    }
    return true;
  }

private:
  int n_;
  Partition lambda_;
  T m_;
  SpechtRep specht_;
  std::vector<Dangle> dangles_;
  std::map<Dangle, int> dangle_index_;
  std::vector<Matrix<T>> smat_, pmat_;
};

/// Eigenvalue set of rho(t_12), certified against the annihilating
/// polynomial (X^2-1)(X+(m-1)).
template <typename T>
std::vector<T> spectrum_t(const CellRep<T>& rep) {
  if (rep.n() < 2) throw std::invalid_argument("spectrum_t: need n >= 2");
  auto t = rep.t_matrix(1, 2);
  auto id = Matrix<T>::identity(rep.dim());
  auto ann = (t * t - id) * (t + (rep.m() - T(1)) * id);
  if (!ann.is_zero()) throw std::logic_error("spectrum_t: annihilator polynomial failed");
  std::vector<T> candidates = {T(1), T(-1), T(1) - rep.m()};
  std::vector<T> out;
  for (const auto& c : candidates) {
    bool have = false;
    for (const auto& o : out) have = have || o == c;
    if (have) continue;
    if (rank(t - Matrix<T>::scalar(rep.dim(), c)) < rep.dim()) out.push_back(c);
  }
  return out;
}

/// S_r-invariant bilinear form on the Specht module, normalized positive.
/// In seminormal coordinates the solution line is diagonal.
inline Matrix<Rational> specht_invariant_form(const SpechtRep& rep) {
  int f = rep.dim();
  int nn = rep.group_size();
  if (nn < 2) return Matrix<Rational>::identity(f);
  Matrix<Rational> sys((nn - 1) * f * f, f * f);
  int row = 0;
  for (int k = 1; k < nn; ++k) {
    const auto& s = rep.adjacent(k);
    for (int a = 0; a < f; ++a)
      for (int b = 0; b < f; ++b) {
        for (int i = 0; i < f; ++i)
          for (int j = 0; j < f; ++j) {
            Rational c = s.at(i, a) * s.at(j, b);
            if (i == a && j == b) c -= Rational(1);
            if (!c.is_zero()) sys.at(row, i * f + j) += c;
          }
        ++row;
      }
  }
  auto ker = kernel_basis(sys);
  if (ker.size() != 1) throw std::logic_error("specht_invariant_form: solution not a line");
  Matrix<Rational> b(f, f);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) b.at(i, j) = ker[0][i * f + j];
  if (b.at(0, 0).sign() < 0) b = -b;
  return b;
}

namespace detail {

/// Glues two dangles along their n boundary points. nullopt encodes a zero
/// pairing (a slot-to-slot arc on one side).
struct DangleGlue {
  int loops = 0;
  std::vector<int> perm;  // v-free position -> w-free position
};

inline std::optional<DangleGlue> glue(const Dangle& v, const Dangle& w) {
  int n = v.n();
  auto vfree = v.free_points(), wfree = w.free_points();
  int r = static_cast<int>(vfree.size());
  std::vector<int> vpos(n, -1), wpos(n, -1);
  for (int j = 0; j < r; ++j) vpos[vfree[j]] = j;
  for (int j = 0; j < static_cast<int>(wfree.size()); ++j) wpos[wfree[j]] = j;

  std::vector<bool> seen(n, false);
  std::vector<int> perm(r, -1);
  for (int j = 0; j < r; ++j) {
    int cur = vfree[j];
    seen[cur] = true;
    while (true) {
      if (w.is_free(cur)) {
        perm[j] = wpos[cur];
        break;
      }
      cur = w.partner(cur);
      seen[cur] = true;
      if (v.is_free(cur)) return std::nullopt;  // v-slot to v-slot
      cur = v.partner(cur);
      seen[cur] = true;
    }
  }
  for (int x : perm)
    if (x < 0) return std::nullopt;  // w-slot to w-slot
  int loops = 0;
  for (int q0 = 0; q0 < n; ++q0) {
    if (seen[q0]) continue;
    ++loops;
    int q = q0;
    do {
      seen[q] = true;
      int q2 = w.partner(q);
      seen[q2] = true;
      q = v.partner(q2);
    } while (q != q0);
  }
  return DangleGlue{loops, std::move(perm)};
}

}  // namespace detail

/// Contravariant cellular form on the cell module: <av, w> = <v, tau(a)w>.
template <typename T>
Matrix<T> gram_cell_form(const CellRep<T>& rep) {
  const auto& dangles = rep.dangles();
  const auto& sp = rep.specht();
  int f = sp.dim();
  Matrix<Rational> bs = specht_invariant_form(sp);
  Matrix<T> g(rep.dim(), rep.dim());
  for (size_t vi = 0; vi < dangles.size(); ++vi)
    for (size_t wi = 0; wi < dangles.size(); ++wi) {
      auto res = detail::glue(dangles[vi], dangles[wi]);
      if (!res) continue;
      T c = rep.m().pow(res->loops);
      // glue returns v-slot -> w-slot; the pairing composes the w-side
      // tableau through the inverse walk, so apply perm^-1
      std::vector<int> inv(res->perm.size());
      for (size_t j = 0; j < res->perm.size(); ++j) inv[res->perm[j]] = static_cast<int>(j);
      Matrix<Rational> block = bs * sp.permutation(inv);
      for (int t = 0; t < f; ++t)
        for (int u = 0; u < f; ++u) {
          const Rational& x = block.at(t, u);
          if (!x.is_zero())
            g.at(static_cast<int>(vi) * f + t, static_cast<int>(wi) * f + u) = c * T(x);
        }
    }
  // contravariance re-check on the generators
  for (int i = 1; i < rep.n(); ++i) {
    if (!(rep.s(i).transpose() * g == g * rep.s(i)))
      throw std::logic_error("gram_cell_form: s-contravariance failed");
    if (!(rep.p(i).transpose() * g == g * rep.p(i)))
      throw std::logic_error("gram_cell_form: p-contravariance failed");
  }
  return g;
}

/// Branching check for the restriction to Br_{n-1}: candidate summands are
/// lambda +- box; verified by dimension count and by splitting into
/// eigenspaces of the central element T of Br_{n-1}.
inline bool verify_branching(int n, const Partition& lambda, const Rational& m0) {
  if (n < 2) throw std::invalid_argument("verify_branching: need n >= 2");
  std::vector<Partition> candidates;
  for (auto& mu : lambda.remove_box()) candidates.push_back(std::move(mu));
  for (auto& mu : lambda.add_box())
    if (mu.size() <= n - 1) candidates.push_back(std::move(mu));

  mpz_class total(0);
  for (const auto& mu : candidates) total += cell_dimension(n - 1, mu);
  if (total != cell_dimension(n, lambda)) return false;

  // Central element of Br_{n-1}, acting on Br_n by the inclusion.
  AlgebraElement<Rational> bigt(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bigt += AlgebraElement<Rational>::t(n, i, j);

  std::vector<Rational> scalars;
  for (const auto& mu : candidates) {
    CellRep<Rational> sub(n - 1, mu, m0);
    AlgebraElement<Rational> tsub(n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) tsub += AlgebraElement<Rational>::t(n - 1, i, j);
    auto mat = sub.element_matrix(tsub);
    Rational c = mat.at(0, 0);
    if (!(mat == Matrix<Rational>::scalar(sub.dim(), c))) return false;
    scalars.push_back(c);
  }
  for (size_t a = 0; a < scalars.size(); ++a)
    for (size_t b = a + 1; b < scalars.size(); ++b)
      if (scalars[a] == scalars[b]) return false;  // projection split inconclusive

  CellRep<Rational> rep(n, lambda, m0);
  auto big = rep.element_matrix(bigt);
  int seen = 0;
  for (size_t c = 0; c < candidates.size(); ++c) {
    auto shifted = big - Matrix<Rational>::scalar(rep.dim(), scalars[c]);
    int mult_dim = rep.dim() - rank(shifted);
    if (mpz_class(mult_dim) != cell_dimension(n - 1, candidates[c])) return false;
    seen += mult_dim;
  }
  return seen == rep.dim();
}

/// Bratteli diagram of the tower (Br_k), layers k = 0..n_max.
struct BratteliGraph {
  std::vector<std::vector<Partition>> layers;
  // (layer k, node index in layer k, node index in layer k+1)
  std::vector<std::tuple<int, int, int>> edges;
};

inline BratteliGraph bratteli(int n_max) {
  if (n_max > 8) throw std::invalid_argument("bratteli: n_max <= 8");
  BratteliGraph g;
  for (int k = 0; k <= n_max; ++k) g.layers.push_back(brauer_labels(k));
  for (int k = 0; k + 1 <= n_max; ++k) {
    for (size_t i = 0; i < g.layers[k].size(); ++i) {
      const Partition& lam = g.layers[k][i];
      for (size_t j = 0; j < g.layers[k + 1].size(); ++j) {
        const Partition& mu = g.layers[k + 1][j];
        bool adj = false;
        for (const auto& x : lam.add_box()) adj = adj || x == mu;
        for (const auto& x : lam.remove_box()) adj = adj || x == mu;
        if (adj) g.edges.emplace_back(k, static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

inline std::string bratteli_dot(const BratteliGraph& g) {
  std::ostringstream os;
  os << "graph bratteli {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t k = 0; k < g.layers.size(); ++k) {
    os << "  { rank=same;";
    for (size_t i = 0; i < g.layers[k].size(); ++i)
      os << " n" << k << "_" << i << " [label=\"" << g.layers[k][i].str() << "\"];";
    os << " }\n";
  }
  for (const auto& [k, i, j] : g.edges)
    os << "  n" << k << "_" << i << " -- n" << k + 1 << "_" << j << ";\n";
  os << "}\n";
  return os.str();
}

/// Weights w_lambda with tr_M(d) = sum_lambda w_lambda tr rho_lambda(d)
/// for every diagram d, solved over the full diagram basis.
inline std::map<Partition, Rational> trace_weights(int n, const Rational& m0) {
  auto labels = brauer_labels(n);
  auto diagrams = enumerate_diagrams(n);
  std::vector<CellRep<Rational>> reps;
  for (const auto& lam : labels) reps.emplace_back(n, lam, m0);
  Matrix<Rational> sys(static_cast<int>(diagrams.size()), static_cast<int>(labels.size()));
  std::vector<Rational> rhs;
  for (size_t di = 0; di < diagrams.size(); ++di) {
    for (size_t li = 0; li < labels.size(); ++li)
      sys.at(static_cast<int>(di), static_cast<int>(li)) =
          reps[li].diagram_matrix(diagrams[di]).trace();
    rhs.push_back(m0.pow(closure_loops(diagrams[di]) - n));
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw std::logic_error("trace_weights: inconsistent system");
  std::map<Partition, Rational> out;
  for (size_t li = 0; li < labels.size(); ++li) out[labels[li]] = (*sol)[li];
  return out;
}

}  // namespace brlie
