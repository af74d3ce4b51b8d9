#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "brlie/partition.hpp"
#include "brlie/specht.hpp"
#include "brlie/witt.hpp"

using namespace brlie;

TEST_CASE("partition basics") {
  CHECK(Partition::parse("3,1").parts() == std::vector<int>{3, 1});
  CHECK(Partition::parse("[]").rows() == 0);
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 1, 1}).is_self_conjugate());
  CHECK_FALSE(Partition({3, 2}).is_self_conjugate());
  CHECK(Partition({2, 1}).is_self_conjugate());
  CHECK(Partition({4, 1, 1}).is_hook());
  CHECK_FALSE(Partition({3, 2}).is_hook());
  CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("partition counts and SYT counts") {
  // p(r) for r = 0..8
  int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int r = 0; r <= 8; ++r)
    CHECK(static_cast<int>(partitions_of(r).size()) == expected[r]);
  CHECK(Partition({2, 1}).syt_count() == 2);
  CHECK(Partition({3, 2}).syt_count() == 5);
  CHECK(Partition({2, 2, 1}).syt_count() == 5);
  // hook length formula vs explicit tableau enumeration
  for (int r = 1; r <= 7; ++r)
    for (const auto& lam : partitions_of(r))
      CHECK(mpz_class(standard_tableaux(lam).size()) == lam.syt_count());
}

TEST_CASE("sum of squares of dimensions is n!") {
  for (int n = 1; n <= 7; ++n) {
    mpz_class acc(0), fact;
    for (const auto& lam : partitions_of(n)) acc += lam.syt_count() * lam.syt_count();
    mpz_fac_ui(fact.get_mpz_t(), n);
    CHECK(acc == fact);
  }
}

TEST_CASE("brauer labels and cell dimensions") {
  auto labels = brauer_labels(4);
  CHECK(labels.size() == 8);  // partitions of 4, 2, 0
  // sum of squares of cell dims is (2n-1)!!
  for (int n = 1; n <= 6; ++n) {
    mpz_class acc(0), dfac;
    for (const auto& lam : brauer_labels(n)) {
      mpz_class d = cell_dimension(n, lam);
      acc += d * d;
    }
    mpz_2fac_ui(dfac.get_mpz_t(), 2 * n - 1);
    CHECK(acc == dfac);
  }
  CHECK(cell_dimension(4, Partition()) == 3);
  CHECK(cell_dimension(4, Partition({2})) == 6);
  CHECK(cell_dimension(4, Partition({1, 1})) == 6);
}

TEST_CASE("seminormal generators satisfy the Coxeter relations") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      SpechtRep rep(lam);
      int d = rep.dim();
      CHECK(mpz_class(d) == lam.syt_count());
      auto id = Matrix<Rational>::identity(d);
      for (int k = 1; k < n; ++k) {
        const auto& s = rep.adjacent(k);
        CHECK(s * s == id);
        if (k + 1 < n) {
          const auto& t = rep.adjacent(k + 1);
          CHECK(s * t * s == t * s * t);
        }
        for (int l = k + 2; l < n; ++l)
          CHECK(s * rep.adjacent(l) == rep.adjacent(l) * s);
      }
    }
  }
}

TEST_CASE("permutation matrices multiply as permutations") {
  std::mt19937 rng(7);
  Partition lam({3, 2});
  SpechtRep rep(lam);
  std::vector<int> u{0, 1, 2, 3, 4}, v = u;
  for (int it = 0; it < 40; ++it) {
    std::shuffle(u.begin(), u.end(), rng);
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<int> uv(5);
    for (int i = 0; i < 5; ++i) uv[i] = u[v[i]];
    CHECK(rep.permutation(u) * rep.permutation(v) == rep.permutation(uv));
  }
}

TEST_CASE("known small representations") {
  // trivial: all generators +1
  SpechtRep triv(Partition({4}));
  CHECK(triv.dim() == 1);
  for (int k = 1; k < 4; ++k) CHECK(triv.adjacent(k).at(0, 0) == Rational(1));
  // sign: all generators -1
  SpechtRep sgn(Partition({1, 1, 1, 1}));
  CHECK(sgn.dim() == 1);
  for (int k = 1; k < 4; ++k) CHECK(sgn.adjacent(k).at(0, 0) == Rational(-1));
  // standard rep of S_n has dim n-1
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> parts{n - 1, 1};
    if (n == 2) parts = {1, 1};
    CHECK(SpechtRep(Partition(parts)).dim() == n - 1);
  }
  CHECK(SpechtRep(Partition({2, 1})).dim() == 2);
}

TEST_CASE("characters against the S_4 character table") {
  // rows: cycle types [1,1,1,1],[2,1,1],[2,2],[3,1],[4]
  struct Row { Partition lam; int vals[5]; };
  std::vector<Row> table = {
      {Partition({4}), {1, 1, 1, 1, 1}},
      {Partition({3, 1}), {3, 1, -1, 0, -1}},
      {Partition({2, 2}), {2, 0, 2, -1, 0}},
      {Partition({2, 1, 1}), {3, -1, -1, 0, 1}},
      {Partition({1, 1, 1, 1}), {1, -1, 1, 1, -1}},
  };
  std::vector<Partition> classes = {Partition({1, 1, 1, 1}), Partition({2, 1, 1}),
                                    Partition({2, 2}), Partition({3, 1}), Partition({4})};
  for (const auto& row : table) {
    SpechtRep rep(row.lam);
    for (size_t c = 0; c < classes.size(); ++c)
      CHECK(specht_character(rep, classes[c]) == Rational(row.vals[c]));
  }
}

TEST_CASE("character orthogonality for n up to 5") {
  for (int n = 2; n <= 5; ++n) {
    auto lams = partitions_of(n);
    std::vector<std::map<Partition, Rational>> chars;
    for (const auto& lam : lams) {
      SpechtRep rep(lam);
      std::map<Partition, Rational> chi;
      for (const auto& mu : lams) chi[mu] = specht_character(rep, mu);
      chars.push_back(std::move(chi));
    }
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), n);
    for (size_t a = 0; a < lams.size(); ++a)
      for (size_t b = a; b < lams.size(); ++b) {
        Rational acc(0);
        for (const auto& mu : lams)
          acc += Rational(brlie::detail::cycle_type_class_size(n, mu)) * chars[a].at(mu) *
                 chars[b].at(mu);
        CHECK(acc == (a == b ? Rational(mpz_class(order)) : Rational(0)));
      }
  }
}

TEST_CASE("sign in the square detects self-conjugacy") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      bool in_sym = sym_square_contains_sign(lam);
      bool in_alt = alt_square_contains_sign(lam);
      // sign appears in lam tensor lam exactly once, iff lam = lam'
      if (lam.is_self_conjugate()) {
        CHECK((in_sym ^ in_alt));
        CHECK(sign_multiplicity_in_square(lam, in_sym) == 1);
      } else {
        CHECK_FALSE(in_sym);
        CHECK_FALSE(in_alt);
      }
    }
  }
}

TEST_CASE("sign-twisted invariant form exists iff lam is self-conjugate") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      SpechtRep rep(lam);
      auto forms = sign_twisted_invariant_forms(rep);
      if (lam.is_self_conjugate()) {
        REQUIRE(forms.size() == 1);
        const auto& b = forms[0];
        bool sym = b == b.transpose();
        bool alt = b == -b.transpose();
        CHECK((sym || alt));
        // symmetric twisted form <-> sign in the symmetric square
        CHECK(sym == sym_square_contains_sign(lam));
        CHECK(alt == alt_square_contains_sign(lam));
        // invariance under arbitrary group elements, spot check
        std::mt19937 rng(11);
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 0);
        for (int it = 0; it < 5; ++it) {
          std::shuffle(w.begin(), w.end(), rng);
          auto g = rep.permutation(w);
          auto lhs = g.transpose() * b * g;
          int sg = 1;
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
              if (w[i] > w[j]) sg = -sg;
          CHECK(lhs == Rational(sg) * b);
        }
      } else {
        CHECK(forms.empty());
      }
    }
  }
}

TEST_CASE("diagonalization and witt index on explicit forms") {
  SECTION("diag(1,-1) is a hyperbolic plane") {
    Matrix<Rational> g(2, 2);
    g.at(0, 0) = Rational(1);
    g.at(1, 1) = Rational(-1);
    auto res = witt_index(g);
    CHECK(res.witt_index == 1);
    CHECK(res.certain);
    CHECK(is_hyperbolic(g));
  }
  SECTION("diag(1,1) is anisotropic") {
    Matrix<Rational> g = Matrix<Rational>::identity(2);
    auto res = witt_index(g);
    CHECK(res.witt_index == 0);
    CHECK_FALSE(is_hyperbolic(g));
  }
  SECTION("antidiagonal pairing") {
    Matrix<Rational> g(2, 2);
    g.at(0, 1) = Rational(1);
    g.at(1, 0) = Rational(1);
    CHECK(witt_index(g).witt_index == 1);
  }
  SECTION("diag(1,-2): isotropic vector needs the square test") {
    Matrix<Rational> g(2, 2);
    g.at(0, 0) = Rational(1);
    g.at(1, 1) = Rational(-2);
    // x^2 = 2 y^2 has no rational solution
    CHECK(witt_index(g).witt_index == 0);
  }
  SECTION("diag(1,1,-1,-1) splits two planes") {
    Matrix<Rational> g = Matrix<Rational>::identity(4);
    g.at(2, 2) = Rational(-1);
    g.at(3, 3) = Rational(-1);
    CHECK(witt_index(g).witt_index == 2);
    CHECK(is_hyperbolic(g));
  }
  SECTION("diag(1,2,-3): isotropic via search, 1+2-3=0") {
    Matrix<Rational> g(3, 3);
    g.at(0, 0) = Rational(1);
    g.at(1, 1) = Rational(2);
    g.at(2, 2) = Rational(-3);
    auto res = witt_index(g);
    CHECK(res.witt_index == 1);
    CHECK(res.certain);
  }
  SECTION("congruence diagonalization preserves rank and signature") {
    Matrix<Rational> g(3, 3);
    // a random-ish symmetric integer matrix with det != 0
    int vals[3][3] = {{2, 1, 0}, {1, 3, -2}, {0, -2, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.at(i, j) = Rational(vals[i][j]);
    auto d = diagonalize_form(g);
    REQUIRE(d.size() == 3);
    int pos = 0, neg = 0, zero = 0;
    for (auto& x : d) (x.is_zero() ? zero : (x.sign() > 0 ? pos : neg))++;
    CHECK(zero == 0);
    CHECK(pos == 2);  // det = -9 < 0, leading minors 2, 5 > 0
    CHECK(neg == 1);
  }
}

TEST_CASE("twisted form for [2,1] is alternating and hyperbolic-compatible") {
  SpechtRep rep(Partition({2, 1}));
  auto forms = sign_twisted_invariant_forms(rep);
  REQUIRE(forms.size() == 1);
  // [2,1] has sign in the alternating square, so the twisted form is
  // antisymmetric and the self-dual pairing data is symplectic type.
  CHECK(forms[0] == -forms[0].transpose());
  CHECK(alt_square_contains_sign(Partition({2, 1})));
}

TEST_CASE("twisted form for [3,1,1] is symmetric with hyperbolic shape") {
  Partition lam({3, 1, 1});
  SpechtRep rep(lam);
  auto forms = sign_twisted_invariant_forms(rep);
  REQUIRE(forms.size() == 1);
  const auto& b = forms[0];
  CHECK(b == b.transpose());
  CHECK(rep.dim() == 6);
  CHECK(rank(b) == 6);
  CHECK(sym_square_contains_sign(lam));
}
