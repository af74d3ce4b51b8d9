#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brlie/lie.hpp"
#include "brlie/ratfunc.hpp"

using namespace brlie;

namespace {
const Rational kM(13, 2);

std::vector<Matrix<Rational>> sl_basis(int n) {
  std::vector<Matrix<Rational>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix<Rational> e(n, n);
      e.at(i, j) = Rational(1);
      out.push_back(std::move(e));
    }
  for (int i = 0; i + 1 < n; ++i) {
    Matrix<Rational> h(n, n);
    h.at(i, i) = Rational(1);
    h.at(i + 1, i + 1) = Rational(-1);
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

TEST_CASE("t_prime identities") {
  RationalFunction m = RationalFunction::variable();
  for (int n = 2; n <= 4; ++n) {
    // telescoping sum of all t'_ij is zero
    AlgebraElement<RationalFunction> acc(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) acc += AlgebraElement<RationalFunction>::t_prime(n, i, j);
    CHECK(acc.is_zero());
  }
  // t'_ij images are traceless in every cell rep, n <= 4
  for (int n = 2; n <= 4; ++n)
    for (const auto& lam : brauer_labels(n)) {
      CellRep<Rational> rep(n, lam, kM);
      for (const auto& g : t_generators(rep, true)) CHECK(g.trace().is_zero());
    }
}

TEST_CASE("lie closure basics") {
  SECTION("identity generator gives a 1-dim abelian algebra") {
    auto sub = lie_closure(std::vector<Matrix<Rational>>{Matrix<Rational>::identity(3)});
    CHECK(sub.dim() == 1);
  }
  SECTION("sl2 from e and f") {
    Matrix<Rational> e(2, 2), f(2, 2);
    e.at(0, 1) = Rational(1);
    f.at(1, 0) = Rational(1);
    auto sub = lie_closure(std::vector<Matrix<Rational>>{e, f});
    CHECK(sub.dim() == 3);
    CHECK(sub.all_traceless());
  }
  SECTION("closure is bracket-closed and generator-order independent") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Matrix<Rational>> gens;
    for (int g = 0; g < 3; ++g) {
      Matrix<Rational> x(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) x.at(i, j) = Rational(coeff(rng));
      gens.push_back(std::move(x));
    }
    auto sub = lie_closure(gens);
    for (const auto& a : sub.basis())
      for (const auto& b : sub.basis()) CHECK(sub.contains(bracket(a, b)));
    auto rev = lie_closure(std::vector<Matrix<Rational>>(gens.rbegin(), gens.rend()));
    CHECK(rev.dim() == sub.dim());
    for (const auto& b : rev.basis()) CHECK(sub.contains(b));
  }
}

TEST_CASE("closure of t images in (3,[1]) is sl3 + scalars") {
  CellRep<Rational> rep(3, Partition({1}), kM);
  auto sub = lie_closure(t_generators(rep, false));
  CHECK(sub.dim() == 9);
  CHECK(sub.contains(Matrix<Rational>::identity(3)));
  // T image is central in the closure
  auto bigt = rep.element_matrix(AlgebraElement<Rational>::big_t(3));
  auto z = center(sub);
  CHECK(z.dim() == 1);
  CHECK(z.contains(bigt));
  // primed generators close onto sl3 proper
  auto subp = lie_closure(t_generators(rep, true));
  CHECK(subp.dim() == 8);
  CHECK(subp.all_traceless());
  // t' lands in the derived algebra of the unprimed closure
  for (const auto& g : t_generators(rep, true)) CHECK(sub.contains(g));
}

TEST_CASE("center of sl3 is trivial, scalar rho(T) identity") {
  auto sub = lie_closure(sl_basis(3));
  REQUIRE(sub.dim() == 8);
  CHECK(center(sub).dim() == 0);
  // (dim lambda) rho(T) = (n(n-1)/2) tr rho(t12) on each cell rep
  for (int n = 2; n <= 4; ++n)
    for (const auto& lam : brauer_labels(n)) {
      CellRep<Rational> rep(n, lam, kM);
      auto t12 = rep.t_matrix(1, 2);
      auto bigt = rep.element_matrix(AlgebraElement<Rational>::big_t(n));
      Rational c = bigt.at(0, 0);
      CHECK(bigt == Matrix<Rational>::scalar(rep.dim(), c));
      CHECK(Rational(rep.dim()) * c == Rational(n * (n - 1) / 2) * t12.trace());
    }
}

TEST_CASE("classify on model algebras") {
  SECTION("full sl basis") {
    auto sub = lie_closure(sl_basis(3));
    auto cls = classify(sub);
    CHECK(cls.type == LieType::sl);
    CHECK(cls.dim_consistent);
  }
  SECTION("so3: antisymmetric matrices") {
    std::vector<Matrix<Rational>> gens;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Matrix<Rational> x(3, 3);
        x.at(i, j) = Rational(1);
        x.at(j, i) = Rational(-1);
        gens.push_back(std::move(x));
      }
    auto sub = lie_closure(gens);
    REQUIRE(sub.dim() == 3);
    auto cls = classify(sub);
    CHECK(cls.type == LieType::so);
    CHECK(cls.form_symmetric);
    CHECK(cls.dim_consistent);
  }
  SECTION("sp2 = sl2 preserves the symplectic form") {
    auto sub = lie_closure(sl_basis(2));
    auto cls = classify(sub);
    CHECK(cls.type == LieType::sp);
    CHECK(cls.form_antisymmetric);
    CHECK(cls.dim_consistent);
  }
}

TEST_CASE("theorem theobrauer at n = 3 and 4") {
  for (int n = 3; n <= 4; ++n) {
    auto rep = verify_theorem_brauer(n, kM, true);
    CHECK(rep.ok);
    CHECK(rep.center_dim == 1);
    for (const auto& e : rep.entries) {
      CHECK(e.ok);
      if (e.in_irr_prime && e.dim_v > 1) {
        CHECK(e.type == LieType::sl);
        CHECK(e.closure_dim == e.dim_v * e.dim_v - 1);
      }
    }
  }
}

TEST_CASE("hecke factor classification at n = 4") {
  // [3,1] -> sl_3; [2,2] self-conjugate 2-dim -> sp; [2,1,1] dual of [3,1] -> sl_3
  auto get = [&](const Partition& lam) {
    CellRep<Rational> rep(4, lam, kM);
    return classify(lie_closure(t_generators(rep, true)));
  };
  auto a = get(Partition({3, 1}));
  CHECK(a.type == LieType::sl);
  auto b = get(Partition({2, 2}));
  CHECK((b.type == LieType::sp || b.type == LieType::so));
  CHECK(b.type == (alt_square_contains_sign(Partition({2, 2})) ? LieType::sp : LieType::so));
  auto c = get(Partition({2, 1, 1}));
  CHECK(c.type == LieType::sl);
}

TEST_CASE("exceptional sets match the printed S and S*") {
  AffineForm one{Rational(1), Rational(0)};
  AffineForm minus{Rational(-1), Rational(0)};
  AffineForm mm1{Rational(-1), Rational(1)};   // m - 1
  AffineForm onem{Rational(1), Rational(-1)};  // 1 - m
  auto sets = exceptional_sets({one, minus, mm1});
  std::vector<Rational> s{Rational(-2), Rational(0), Rational(1), Rational(2), Rational(4)};
  CHECK(sets.S == s);
  // (m-1)+(m-1) = 2m-2 only collides at m in {0,1,2}, all already present,
  // so the sum table degenerates on exactly the same set
  CHECK(sets.Sstar == s);
  // with the third eigenvalue taken as 1-m instead: same sets
  auto alt = exceptional_sets({one, minus, onem});
  CHECK(alt.S == s);
  CHECK(alt.Sstar == s);
}

TEST_CASE("nonisomorphism of t' restrictions at n = 3, 4") {
  for (int n = 3; n <= 4; ++n) {
    auto rep = verify_nonisomorphism(n, kM);
    for (const auto& f : rep.failures) UNSCOPED_INFO(f);
    CHECK(rep.ok);
    CHECK(rep.dual_pairs_found >= 1);  // the Specht conjugate pairs
  }
}

TEST_CASE("dimension arithmetic of the induction step") {
  auto rep = verify_dimension_arithmetic(5, 12);
  for (const auto& f : rep.failures) UNSCOPED_INFO(f);
  CHECK(rep.ok);
  CHECK(rep.checks > 0);
  CHECK(cnk(5, 3) == 20);
  // dim C for (n,k) = (6,3) is 5
  CHECK(Partition({3, 2}).syt_count() == 5);
}
