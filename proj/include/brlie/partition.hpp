#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brlie/rational.hpp"

namespace brlie {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is allowed and denotes the unique partition of 0.
class Partition {
public:
  Partition() {}
  Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

  /// Parses "3,1" or "[]" / "" for the empty partition.
  static Partition parse(std::string_view s) {
    if (s.empty() || s == "[]" || s == "0") return Partition();
    std::vector<int> parts;
    int val = 0;
    bool digits = false;
    for (size_t i = 0; i <= s.size(); ++i) {
      if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        val = val * 10 + (s[i] - '0');
        digits = true;
      } else if (i == s.size() || s[i] == ',') {
        if (!digits) throw std::invalid_argument("Partition::parse: bad syntax");
        parts.push_back(val);
        val = 0;
        digits = false;
      } else {
        throw std::invalid_argument("Partition::parse: bad character");
      }
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < rows() ? parts_[i] : 0; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  Partition conjugate() const {
    std::vector<int> t;
    for (int c = 0; parts_.size() > 0 && c < parts_[0]; ++c) {
      int cnt = 0;
      for (int p : parts_)
        if (p > c) ++cnt;
      t.push_back(cnt);
    }
    return Partition(std::move(t));
  }

  bool is_self_conjugate() const { return *this == conjugate(); }

  bool is_hook() const {
    return rows() >= 1 && (rows() == 1 || part(1) <= 1);
  }

  /// Partitions obtained by adding one box.
  std::vector<Partition> add_box() const {
    std::vector<Partition> out;
    for (int i = 0; i <= rows(); ++i) {
      if (i == 0 || part(i) < part(i - 1)) {
        std::vector<int> p = parts_;
        if (i == rows()) p.push_back(1);
        else ++p[i];
        out.push_back(Partition(std::move(p)));
      }
    }
    return out;
  }

  /// Partitions obtained by removing one box.
  std::vector<Partition> remove_box() const {
    std::vector<Partition> out;
    for (int i = 0; i < rows(); ++i) {
      if (i == rows() - 1 || part(i) > part(i + 1)) {
        std::vector<int> p = parts_;
        if (--p[i] == 0) p.pop_back();
        out.push_back(Partition(std::move(p)));
      }
    }
    return out;
  }

  /// Number of standard Young tableaux, by the hook length formula.
  mpz_class syt_count() const {
    int n = size();
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), n);
    Partition conj = conjugate();
    mpz_class hooks(1);
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < parts_[i]; ++j)
        hooks *= (parts_[i] - j) + (conj.part(j) - i) - 1;
    return num / hooks;
  }

  friend auto operator<=>(const Partition& a, const Partition& b) = default;

  std::string str() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ",";
      os << parts_[i];
    }
    os << "]";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
  void validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
  std::vector<int> parts_;
};

inline std::vector<Partition> partitions_of(int r) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(r, r);
  return out;
}

/// Labels of Irr_n for the Brauer algebra: partitions of r <= n with n - r
/// even.
inline std::vector<Partition> brauer_labels(int n) {
  std::vector<Partition> out;
  for (int r = n; r >= 0; r -= 2)
    for (auto& p : partitions_of(r)) out.push_back(std::move(p));
  return out;
}

/// A standard tableau of shape lambda, stored as the row/column position of
/// each entry 1..n.
struct StandardTableau {
  std::vector<int> row, col;  // 0-based, indexed by entry-1

  int entries() const { return static_cast<int>(row.size()); }
  int content(int entry) const { return col[entry - 1] - row[entry - 1]; }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.row == b.row && a.col == b.col;
  }
};

inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  int n = lambda.size();
  std::vector<StandardTableau> out;
  StandardTableau cur;
  cur.row.assign(n, -1);
  cur.col.assign(n, -1);
  std::vector<int> filled(lambda.rows(), 0);  // boxes filled per row
  std::function<void(int)> rec = [&](int entry) {
    if (entry > n) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < lambda.rows(); ++r) {
      int c = filled[r];
      if (c >= lambda.part(r)) continue;
      if (r > 0 && filled[r - 1] <= c) continue;  // column constraint
      cur.row[entry - 1] = r;
      cur.col[entry - 1] = c;
      ++filled[r];
      rec(entry + 1);
      --filled[r];
    }
  };
  rec(1);
  return out;
}

/// Cell-module dimension C(n,2k)(2k-1)!! f^lambda with 2k = n - |lambda|.
inline mpz_class cell_dimension(int n, const Partition& lambda) {
  int r = lambda.size();
  if (r > n || (n - r) % 2 != 0)
    throw std::invalid_argument("cell_dimension: need |lambda| <= n with n-|lambda| even");
  int twok = n - r;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, twok);
  mpz_class dblfac;
  mpz_2fac_ui(dblfac.get_mpz_t(), twok > 0 ? twok - 1 : 1);  // (2k-1)!!, empty product for k=0
  if (twok == 0) dblfac = 1;
  return binom * dblfac * lambda.syt_count();
}

}  // namespace brlie
