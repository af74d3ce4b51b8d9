#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brlie {

/// Perfect matching on 2n endpoints: top 1..n and bottom 1..n. Endpoint k
/// is encoded as k-1 (top) or n+k-1 (bottom); the partner array is the
/// canonical representation, so equality is representation equality.
class BrauerDiagram {
public:
  static constexpr int kMaxStrands = 16;

  explicit BrauerDiagram(int n) : n_(n), partner_(2 * n) {
    check_n(n);
    // identity: top i -- bottom i
    for (int i = 0; i < n; ++i) {
      partner_[i] = n + i;
      partner_[n + i] = i;
    }
  }

  static BrauerDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    check_n(n);
    BrauerDiagram d(n);
    std::fill(d.partner_.begin(), d.partner_.end(), -1);
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= 2 * n || b < 0 || b >= 2 * n || a == b)
        throw std::invalid_argument("BrauerDiagram: bad endpoint pair");
      if (d.partner_[a] != -1 || d.partner_[b] != -1)
        throw std::invalid_argument("BrauerDiagram: endpoint used twice");
      d.partner_[a] = b;
      d.partner_[b] = a;
    }
    for (int v : d.partner_)
      if (v == -1) throw std::invalid_argument("BrauerDiagram: matching not perfect");
    return d;
  }

  static BrauerDiagram identity(int n) { return BrauerDiagram(n); }

  /// Diagram of a permutation (w given as images, 0-based). Chosen so that
  /// from_permutation is a monoid homomorphism for compose().
  static BrauerDiagram from_permutation(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    BrauerDiagram d(n);
    std::vector<int> winv(n, -1);
    for (int i = 0; i < n; ++i) {
      if (w[i] < 0 || w[i] >= n || winv[w[i]] != -1)
        throw std::invalid_argument("BrauerDiagram: not a permutation");
      winv[w[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
      d.partner_[i] = n + winv[i];
      d.partner_[n + winv[i]] = i;
    }
    return d;
  }

  /// Transposition diagram s_ij (1-based indices).
  static BrauerDiagram s(int n, int i, int j) {
    check_ij(n, i, j);
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k;
    std::swap(w[i - 1], w[j - 1]);
    return from_permutation(w);
  }

  /// Horizontal-arc diagram p_ij: arcs {i,j} on top and on bottom.
  static BrauerDiagram p(int n, int i, int j) {
    check_ij(n, i, j);
    BrauerDiagram d(n);
    int a = i - 1, b = j - 1;
    d.partner_[a] = b;
    d.partner_[b] = a;
    d.partner_[n + a] = n + b;
    d.partner_[n + b] = n + a;
    return d;
  }

  int strands() const { return n_; }
  int partner(int v) const { return partner_[v]; }
  const std::vector<int>& partners() const { return partner_; }

  bool is_permutation() const {
    for (int i = 0; i < n_; ++i)
      if (partner_[i] < n_) return false;
    return true;
  }

  /// Permutation images (0-based) when the diagram has only through
  /// strands; inverse convention of from_permutation.
  std::vector<int> to_permutation() const {
    if (!is_permutation()) throw std::domain_error("BrauerDiagram: has horizontal arcs");
    std::vector<int> w(n_);
    for (int i = 0; i < n_; ++i) w[partner_[i] - n_] = i;
    return w;
  }

  /// Upside-down reflection: top and bottom roles swapped.
  BrauerDiagram tau() const {
    BrauerDiagram d(n_);
    auto flip = [&](int v) { return v < n_ ? v + n_ : v - n_; };
    for (int v = 0; v < 2 * n_; ++v) d.partner_[flip(v)] = flip(partner_[v]);
    return d;
  }

  int through_strands() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
      if (partner_[i] >= n_) ++c;
    return c;
  }

  friend auto operator<=>(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.partner_ <=> b.partner_;
  }
  friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.partner_ == b.partner_;
  }

  /// Text form "(1,2')(2,1')(3,3')", primes marking bottom endpoints.
  std::string str() const {
    std::ostringstream os;
    for (int v = 0; v < 2 * n_; ++v) {
      int w = partner_[v];
      if (w < v) continue;
      auto emit = [&](int x) {
        if (x < n_) os << (x + 1);
        else os << (x - n_ + 1) << "'";
      };
      os << "(";
      emit(v);
      os << ",";
      emit(w);
      os << ")";
    }
    return os.str();
  }

  static BrauerDiagram parse(int n, std::string_view s) {
    std::vector<std::pair<int, int>> pairs;
    size_t i = 0;
    auto read_endpoint = [&]() {
      int val = 0;
      bool digits = false;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        val = val * 10 + (s[i++] - '0');
        digits = true;
      }
      if (!digits || val < 1 || val > n)
        throw std::invalid_argument("BrauerDiagram::parse: bad endpoint");
      int v = val - 1;
      if (i < s.size() && s[i] == '\'') {
        v += n;
        ++i;
      }
      return v;
    };
    while (i < s.size()) {
      if (s[i] == ' ') { ++i; continue; }
      if (s[i] != '(') throw std::invalid_argument("BrauerDiagram::parse: expected '('");
      ++i;
      int a = read_endpoint();
      if (i >= s.size() || s[i] != ',') throw std::invalid_argument("BrauerDiagram::parse: expected ','");
      ++i;
      int b = read_endpoint();
      if (i >= s.size() || s[i] != ')') throw std::invalid_argument("BrauerDiagram::parse: expected ')'");
      ++i;
      pairs.emplace_back(a, b);
    }
    return from_pairs(n, pairs);
  }

  friend std::ostream& operator<<(std::ostream& os, const BrauerDiagram& d) {
    return os << d.str();
  }

private:
  static void check_n(int n) {
    if (n < 1 || n > kMaxStrands) throw std::invalid_argument("BrauerDiagram: bad strand count");
  }
  static void check_ij(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::out_of_range("BrauerDiagram: generator index out of range");
  }

  int n_;
  std::vector<int> partner_;
};

namespace detail {
struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
  std::vector<int> parent;
};
}  // namespace detail

struct ComposeResult {
  BrauerDiagram diagram;
  int loops;  // closed loops removed; algebra product carries m^loops
};

/// Product ab: diagram b stacked below diagram a; middle points traced out
/// and closed loops counted.
inline ComposeResult compose(const BrauerDiagram& a, const BrauerDiagram& b) {
  int n = a.strands();
  if (b.strands() != n) throw std::invalid_argument("compose: strand-count mismatch");
  // Nodes: result top = a's top (0..n-1), result bottom = b's bottom
  // (n..2n-1); middle layer = a's bottom glued to b's top.
  BrauerDiagram out = BrauerDiagram::identity(n);
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> mid_seen(n, false);
  // External endpoints: walk through the middle layer.
  auto trace_from = [&](int start_ext) {
    // start_ext: 0..n-1 = a top i, n..2n-1 = b bottom i
    bool in_a = start_ext < n;
    int v = in_a ? a.partner(start_ext) : b.partner(start_ext);
    // v is within a (resp. b) endpoint numbering
    while (true) {
      if (in_a) {
        if (v < n) return v;  // a's top: external
        int mid = v - n;      // a's bottom = b's top
        mid_seen[mid] = true;
        in_a = false;
        v = b.partner(mid);
      } else {
        if (v >= n) return v;  // b's bottom: external
        int mid = v;           // b's top = a's bottom
        mid_seen[mid] = true;
        in_a = true;
        v = a.partner(n + mid);
      }
    }
  };
  std::vector<bool> ext_done(2 * n, false);
  for (int e = 0; e < 2 * n; ++e) {
    if (ext_done[e]) continue;
    int f = trace_from(e);
    ext_done[e] = ext_done[f] = true;
    pairs.emplace_back(e, f);
  }
  // Leftover middle components are closed loops. A middle point not seen by
  // any external trace has both its a-edge and b-edge ending at middle
  // points; union-find over those edges counts the cycles.
  detail::UnionFind uf(n);
  for (int u = 0; u < n; ++u) {
    if (mid_seen[u]) continue;
    uf.unite(u, a.partner(n + u) - n);  // arc in a's bottom row
    uf.unite(u, b.partner(u));          // arc in b's top row
  }
  int loops = 0;
  for (int u = 0; u < n; ++u)
    if (!mid_seen[u] && uf.find(u) == u) ++loops;
  return {BrauerDiagram::from_pairs(n, pairs), loops};
}

/// Cycle count of the trace closure: join top i to bottom i for all i.
inline int closure_loops(const BrauerDiagram& d) {
  int n = d.strands();
  detail::UnionFind uf(2 * n);
  for (int v = 0; v < 2 * n; ++v) uf.unite(v, d.partner(v));
  for (int i = 0; i < n; ++i) uf.unite(i, n + i);
  int cycles = 0;
  for (int v = 0; v < 2 * n; ++v)
    if (uf.find(v) == v) ++cycles;
  return cycles;
}

/// All perfect matchings on 2n points; count (2n-1)!!.
inline std::vector<BrauerDiagram> enumerate_diagrams(int n, int bound = 6) {
  if (n > bound) throw std::invalid_argument("enumerate_diagrams: bound exceeded");
  std::vector<BrauerDiagram> out;
  std::vector<int> partner(2 * n, -1);
  std::function<void()> rec = [&]() {
    int a = -1;
    for (int v = 0; v < 2 * n; ++v)
      if (partner[v] == -1) { a = v; break; }
    if (a == -1) {
      std::vector<std::pair<int, int>> pairs;
      for (int v = 0; v < 2 * n; ++v)
        if (partner[v] > v) pairs.emplace_back(v, partner[v]);
      out.push_back(BrauerDiagram::from_pairs(n, pairs));
      return;
    }
    for (int b = a + 1; b < 2 * n; ++b) {
      if (partner[b] != -1) continue;
      partner[a] = b;
      partner[b] = a;
      rec();
      partner[a] = -1;
      partner[b] = -1;
    }
  };
  rec();
  return out;
}

}  // namespace brlie

template <>
struct std::hash<brlie::BrauerDiagram> {
  size_t operator()(const brlie::BrauerDiagram& d) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int v : d.partners()) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};
