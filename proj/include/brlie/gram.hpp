#pragma once

#include <vector>

#include "brlie/algebra.hpp"
#include "brlie/diagram.hpp"
#include "brlie/matrix.hpp"

namespace brlie {

/// Gram matrix of <a,b> = tr_M(a tau(b)) on the full diagram basis of
/// Br_n at a rational specialization. Entries are m^(loops + gamma - n).
inline Matrix<Rational> gram_matrix(int n, const Rational& m0) {
  auto basis = enumerate_diagrams(n);
  int dim = static_cast<int>(basis.size());
  std::vector<BrauerDiagram> taus;
  taus.reserve(dim);
  for (const auto& d : basis) taus.push_back(d.tau());
  Matrix<Rational> g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      auto [d, loops] = compose(basis[i], taus[j]);
      Rational v = m0.pow(loops + closure_loops(d) - n);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return g;
}

inline bool is_positive_definite(const Matrix<Rational>& g) {
  return ldlt_positive_definite(g).positive_definite;
}

}  // namespace brlie
