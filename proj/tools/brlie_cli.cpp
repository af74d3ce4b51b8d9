#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brlie/algebra.hpp"
#include "brlie/bmw.hpp"
#include "brlie/cell.hpp"
#include "brlie/diagram.hpp"
#include "brlie/gram.hpp"
#include "brlie/lie.hpp"
#include "brlie/matrix.hpp"
#include "brlie/ratfunc.hpp"
#include "brlie/specht.hpp"
#include "brlie/witt.hpp"

using json = nlohmann::ordered_json;
using namespace brlie;

namespace {

constexpr const char* kVersion = "brlie 0.1.0";
constexpr int kSchemaVersion = 1;

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "[]" || s == "0") return Partition();
  return Partition::parse(s);
}

json matrix_json(const Matrix<Rational>& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < a.cols(); ++j) r.push_back(a.at(i, j).str());
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << j.dump(2) << "\n";
  std::cout << "wrote " << out_path << "\n";
}

std::string ratfunc_str(const RationalFunction& f) {
  if (f.den() == Polynomial(1)) return f.num().str();
  std::string n = f.num().str(), d = f.den().str();
  auto simple = [](const std::string& s) {
    return s.find_first_of("+-", 1) == std::string::npos && s.find('-', 0) != 0;
  };
  if (simple(n) && simple(d)) return n + "/" + d;
  return "(" + n + ")/(" + d + ")";
}

// Elements: products of s<ij>, p<ij>, t<ij>, "id", or diagram literals
// "(1,2')(2,1')...", separated by '*'.
template <typename T>
AlgebraElement<T> parse_element(int n, const std::string& expr, const T& m) {
  AlgebraElement<T> acc = AlgebraElement<T>::unit(n);
  std::stringstream ss(expr);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, '*')) {
    size_t a = tok.find_first_not_of(' ');
    size_t b = tok.find_last_not_of(' ');
    if (a == std::string::npos) continue;
    tok = tok.substr(a, b - a + 1);
    AlgebraElement<T> factor(n);
    if (tok == "id" || tok == "1") {
      factor = AlgebraElement<T>::unit(n);
    } else if (tok[0] == '(') {
      factor = AlgebraElement<T>::from_diagram(BrauerDiagram::parse(n, tok));
    } else if (tok.size() == 3 && (tok[0] == 's' || tok[0] == 'p' || tok[0] == 't')) {
      int i = tok[1] - '0', j = tok[2] - '0';
      if (tok[0] == 's') factor = AlgebraElement<T>::s(n, i, j);
      else if (tok[0] == 'p') factor = AlgebraElement<T>::p(n, i, j);
      else factor = AlgebraElement<T>::t(n, i, j);
    } else if (tok == "T") {
      factor = AlgebraElement<T>::big_t(n);
    } else {
      throw std::invalid_argument("cannot parse element token '" + tok + "'");
    }
    acc = any ? multiply(acc, factor, m) : factor;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty element expression");
  return acc;
}

std::vector<std::string> specialization_warnings(int n, const Rational& m0) {
  std::vector<std::string> w;
  for (long v : {-2L, 0L, 1L, 2L, 4L})
    if (m0 == Rational(v))
      w.push_back("m = " + m0.str() + " lies in the exceptional set {-2,0,1,2,4}");
  if (m0.value().get_den() == 1 && m0 <= Rational(n) && m0.sign() > 0)
    w.push_back("integer m = " + m0.str() + " <= n = " + std::to_string(n) +
                "; the Gram form may be degenerate or indefinite");
  return w;
}

// ---- verification suites ----

struct Check {
  std::string id;
  std::string params;
  std::string verdict;  // pass | fail | skipped(reason)
  std::string witness;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;

  void add(const std::string& id, const std::string& params, bool ok,
           const std::string& witness = "") {
    checks.push_back({id, params, ok ? "pass" : "fail", witness});
  }
  void skip(const std::string& id, const std::string& reason) {
    checks.push_back({id, "", "skipped(" + reason + ")", ""});
  }
};

struct RunConfig {
  int n = 4;
  Rational m0 = Rational(13, 2);
  bool big = false;
  unsigned seed = 20260824;
};

void suite_diagram_counts(const RunConfig& cfg, Suite* s) {
  for (int n = 2; n <= std::min(cfg.n, 5); ++n) {
    auto ds = enumerate_diagrams(n);
    s->add("diagram-count", "n=" + std::to_string(n),
           mpz_class(ds.size()) == double_factorial_odd(n),
           "got " + std::to_string(ds.size()));
  }
}

void suite_br2(const RunConfig&, Suite* s) {
  using F = RationalFunction;
  F m = F::variable();
  auto t = AlgebraElement<F>::t(2, 1, 2);
  auto p = AlgebraElement<F>::p(2, 1, 2);
  auto one = AlgebraElement<F>::unit(2);
  auto t2 = multiply(t, t, m);
  s->add("t^2-1=(m-2)p", "generic m", (t2 - one - (m - F(2)) * p).is_zero());
  auto ann = multiply(t2 - one, t + (m - F(1)) * one, m);
  s->add("(t^2-1)(t+(m-1))=0", "generic m", ann.is_zero());
}

void suite_trace_axioms(const RunConfig& cfg, Suite* s) {
  std::mt19937 rng(cfg.seed);
  for (int n = 2; n <= std::min(cfg.n, 4); ++n) {
    auto ds = enumerate_diagrams(n);
    std::uniform_int_distribution<size_t> pick(0, ds.size() - 1);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> node(1, n);
    auto rand_el = [&]() {
      AlgebraElement<Rational> e(n);
      for (int k = 0; k < 3; ++k) e.add_term(ds[pick(rng)], Rational(coeff(rng)));
      return e;
    };
    bool sym = true, tau_inv = true, form_sym = true, w_inv = true, p_adj = true;
    int pairs = n == 2 ? 100 : 200;
    for (int it = 0; it < pairs; ++it) {
      auto a = rand_el();
      auto b = rand_el();
      sym = sym && markov_trace(multiply(a, b, cfg.m0), cfg.m0) ==
                       markov_trace(multiply(b, a, cfg.m0), cfg.m0);
      tau_inv = tau_inv && markov_trace(a.tau(), cfg.m0) == markov_trace(a, cfg.m0);
      form_sym = form_sym && form(a, b, cfg.m0) == form(b, a, cfg.m0);
      int i = node(rng), j = node(rng);
      if (i == j) j = (j % n) + 1;
      auto w = AlgebraElement<Rational>::s(n, i, j);
      w_inv = w_inv && form(multiply(w, a, cfg.m0), multiply(w, b, cfg.m0), cfg.m0) ==
                           form(a, b, cfg.m0);
      auto p = AlgebraElement<Rational>::p(n, i, j);
      p_adj = p_adj && form(multiply(p, a, cfg.m0), b, cfg.m0) ==
                           form(a, multiply(p, b, cfg.m0), cfg.m0);
    }
    std::string par = "n=" + std::to_string(n) + " pairs=" + std::to_string(pairs);
    s->add("trace-symmetry", par, sym);
    s->add("trace-tau-invariance", par, tau_inv);
    s->add("form-symmetry", par, form_sym);
    s->add("form-w-invariance", par, w_inv);
    s->add("form-p-selfadjoint", par, p_adj);
  }
}

void suite_positivity(const RunConfig& cfg, Suite* s) {
  int top = std::min(cfg.n, cfg.big ? 5 : 4);
  for (int n = 2; n <= top; ++n) {
    auto g = gram_matrix(n, cfg.m0);
    auto r = ldlt_positive_definite(g);
    s->add("gram-positive-definite", "n=" + std::to_string(n), r.positive_definite,
           r.failing_pivot_index ? "pivot " + std::to_string(*r.failing_pivot_index) : "");
  }
  if (cfg.n >= 5 && !cfg.big) s->skip("gram-positive-definite n=5", "needs --big");
  if (cfg.n >= 4) {
    auto w = trace_weights(4, cfg.m0);
    bool pos = true;
    Rational acc(0);
    for (const auto& [lam, wl] : w) {
      pos = pos && wl.sign() > 0;
      acc += wl * Rational(cell_dimension(4, lam));
    }
    s->add("trace-weights-positive", "n=4", pos);
    s->add("trace-weights-sum", "n=4", acc == Rational(1));
  }
}

void suite_dimensions(const RunConfig&, Suite* s) {
  s->add("cell-dim [1] n=5", "", cell_dimension(5, Partition({1})) == 15);
  s->add("cell-dim [1] n=7", "", cell_dimension(7, Partition({1})) == 105);
  s->add("cell-dim [1] n=9", "", cell_dimension(9, Partition({1})) == 945);
  s->add("cell-dim [2,1] n=5", "", cell_dimension(5, Partition({2, 1})) == 20);
  for (int n = 1; n <= 6; ++n) {
    mpz_class acc(0);
    for (const auto& lam : brauer_labels(n)) {
      mpz_class d = cell_dimension(n, lam);
      acc += d * d;
    }
    s->add("sum-dim-squares", "n=" + std::to_string(n), acc == double_factorial_odd(n));
  }
}

void suite_spectra(const RunConfig& cfg, Suite* s) {
  for (int n = 2; n <= std::min(cfg.n, 5); ++n)
    for (const auto& lam : brauer_labels(n)) {
      CellRep<Rational> rep(n, lam, cfg.m0);
      auto sp = spectrum_t(rep);
      bool ok;
      if (lam.size() == n) {
        ok = true;
        for (const auto& c : sp) ok = ok && (c == Rational(1) || c == Rational(-1));
        if (rep.dim() > 1) ok = ok && sp.size() == 2;
      } else {
        bool has = false;
        for (const auto& c : sp) has = has || c == Rational(1) - cfg.m0;
        ok = has && (n < 3 || sp.size() == 3);
      }
      s->add("spectrum-t", "n=" + std::to_string(n) + " lambda=" + lam.str(), ok);
    }
}

void suite_branching(const RunConfig& cfg, Suite* s) {
  for (int n = 2; n <= std::min(cfg.n, 4); ++n)
    for (const auto& lam : brauer_labels(n))
      s->add("branching", "n=" + std::to_string(n) + " lambda=" + lam.str(),
             verify_branching(n, lam, cfg.m0));
  if (cfg.n >= 5)
    s->add("branching", "n=5 lambda=2,1", verify_branching(5, Partition({2, 1}), cfg.m0));
}

void suite_lie_closures(const RunConfig& cfg, Suite* s) {
  for (int n = 2; n <= std::min(cfg.n, cfg.big ? 6 : 5); ++n) {
    for (const auto& lam : brauer_labels(n)) {
      if (lam.size() >= n) continue;
      CellRep<Rational> rep(n, lam, cfg.m0);
      int d = rep.dim();
      auto sub = lie_closure(t_generators(rep, true));
      bool ok = d == 1 ? sub.dim() == 0 : (sub.dim() == d * d - 1 && sub.all_traceless());
      s->add("closure-sl", "n=" + std::to_string(n) + " lambda=" + lam.str() + " d=" +
             std::to_string(d), ok, "closure dim " + std::to_string(sub.dim()));
    }
  }
  int nc = std::min(cfg.n, 4);
  auto rep = verify_theorem_brauer(nc, cfg.m0, true);
  s->add("theorem-brauer", "n=" + std::to_string(nc), rep.ok);
  s->add("faithful-sum-center", "n=" + std::to_string(nc), rep.center_dim == 1,
         "dim " + std::to_string(rep.center_dim));
}

void suite_hecke_classify(const RunConfig& cfg, Suite* s) {
  for (int n = 4; n <= std::min(cfg.n, 5); ++n)
    for (const auto& lam : brauer_labels(n)) {
      if (lam.size() != n) continue;
      CellRep<Rational> rep(n, lam, cfg.m0);
      if (rep.dim() == 1) continue;
      auto cls = classify(lie_closure(t_generators(rep, true)));
      auto [etype, edim] = expected_hecke_ideal(n, lam);
      std::string par = "n=" + std::to_string(n) + " lambda=" + lam.str();
      s->add("hecke-ideal-type", par, cls.type == etype,
             "got " + lie_type_name(cls.type) + " expected " + lie_type_name(etype));
      if (lam.is_self_conjugate()) {
        bool in_sym = sym_square_contains_sign(lam);
        bool in_alt = alt_square_contains_sign(lam);
        s->add("sign-dichotomy", par, in_sym != in_alt,
               in_sym ? "sign in S^2" : "sign in L^2");
      }
    }
}

void suite_exceptional(const RunConfig&, Suite* s) {
  AffineForm one{Rational(1), Rational(0)};
  AffineForm minus{Rational(-1), Rational(0)};
  AffineForm mm1{Rational(-1), Rational(1)};
  auto sets = exceptional_sets({one, minus, mm1});
  std::vector<Rational> expect{Rational(-2), Rational(0), Rational(1), Rational(2), Rational(4)};
  s->add("exceptional-S", "X={1,-1,m-1}", sets.S == expect);
  s->add("exceptional-Sstar", "X={1,-1,m-1}", sets.Sstar == expect,
         "computed from the corner sum 2m-2; a published variant with corner 2(m-2) "
         "additionally contains 3");
  AffineForm onem{Rational(1), Rational(-1)};
  auto alt = exceptional_sets({one, minus, onem});
  s->add("exceptional-other-convention", "X={1,-1,1-m}", alt.S == expect && alt.Sstar == expect);
}

void suite_dimension_arithmetic(const RunConfig&, Suite* s) {
  auto rep = verify_dimension_arithmetic(5, 12);
  s->add("cnk-recursion-and-bounds", "5<=n<=12", rep.ok,
         rep.failures.empty() ? std::to_string(rep.checks) + " checks" : rep.failures[0]);
  s->add("cnk(5,3)=20", "", cnk(5, 3) == 20);
  bool ge = true;
  for (int n = 5; n <= 9; ++n)
    for (const auto& lam : brauer_labels(n)) {
      if (lam.size() >= n) continue;
      ge = ge && cell_dimension(n, lam) >= mpz_class(n) * (n - 1) / 2;
    }
  s->add("dim>=n(n-1)/2", "irr' 5<=n<=9", ge);
}

void suite_bmw(const RunConfig& cfg, Suite* s) {
  for (auto [s0, a0] : bmw_default_samples()) {
    std::string par = "s=" + s0.str() + " alpha=" + a0.str();
    for (int n = 2; n <= std::min(cfg.n, 4); ++n) {
      auto alg = build_bmw(n, s0, a0);
      s->add("bmw-dim", "n=" + std::to_string(n) + " " + par,
             !alg.degenerate && mpz_class(alg.dim) == double_factorial_odd(n),
             "dim " + std::to_string(alg.dim));
      if (!alg.degenerate && alg.has_e)
        s->add("bmw-ee=delta-e", "n=" + std::to_string(n) + " " + par, alg.delta_ok,
               "delta " + alg.delta.str());
    }
  }
  auto b3 = build_bmw(3, Rational(2), Rational(7));
  s->add("bmw-associativity", "n=3, 100 triples", associativity_ok(b3, 100, cfg.seed));
  for (int n = 3; n <= std::min(cfg.n, 4); ++n) {
    auto h = hecke_quotient(n, Rational(2));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    s->add("hecke-dim", "n=" + std::to_string(n), !h.degenerate && mpz_class(h.dim) == fact,
           "dim " + std::to_string(h.dim));
  }
  auto h3 = hecke_quotient(3, Rational(2));
  s->add("bmw-to-hecke-products", "n=3, 60 pairs",
         quotient_respects_products(b3, h3, 60, cfg.seed));
}

void suite_monodromy(const RunConfig& cfg, Suite* s) {
  std::string convention;
  bool consistent = true;
  for (int n = 2; n <= std::min(cfg.n, 4); ++n)
    for (const auto& lam : brauer_labels(n)) {
      auto r = verify_cubic_monodromy(n, lam, cfg.m0, 8);
      std::string par = "n=" + std::to_string(n) + " lambda=" + lam.str();
      s->add(r.hecke_factor ? "monodromy-quadratic" : "monodromy-cubic", par, r.ok,
             r.convention);
      if (!r.hecke_factor && r.ok) {
        if (convention.empty()) convention = r.convention;
        consistent = consistent && convention == r.convention;
      }
    }
  s->add("monodromy-convention", "", consistent && !convention.empty(), convention);
}

void suite_unitarity(const RunConfig& cfg, Suite* s) {
  for (int n = 2; n <= std::min(cfg.n, 5); ++n)
    for (const auto& lam : brauer_labels(n)) {
      auto r = formal_unitarity_report(n, lam, cfg.m0);
      s->add("unitarity-hypotheses", "n=" + std::to_string(n) + " lambda=" + lam.str(), r.ok,
             r.witness);
    }
}

void suite_hyperbolicity(const RunConfig& cfg, Suite* s) {
  int top = std::min(cfg.n, cfg.big ? 6 : 5);
  bool found = false;
  for (int n = 3; n <= top; ++n)
    for (const auto& lam : brauer_labels(n)) {
      if (lam.size() != n || !lam.is_self_conjugate()) continue;
      if (!sym_square_contains_sign(lam)) continue;
      found = true;
      SpechtRep rep(lam);
      auto forms = sign_twisted_invariant_forms(rep);
      std::string par = "n=" + std::to_string(n) + " lambda=" + lam.str();
      if (forms.size() != 1 || !forms[0].is_symmetric()) {
        s->add("beta-hyperbolic", par, false, "form not a symmetric line");
        continue;
      }
      auto w = witt_index(forms[0]);
      s->add("beta-hyperbolic", par,
             w.certain && 2 * w.witt_index == forms[0].rows(),
             "witt index " + std::to_string(w.witt_index) + "/" +
                 std::to_string(forms[0].rows() / 2));
    }
  if (!found) s->skip("beta-hyperbolic", "no self-conjugate label with sign in S^2 at this n");
}

void suite_nonisomorphism(const RunConfig& cfg, Suite* s) {
  for (int n = 3; n <= std::min(cfg.n, 4); ++n) {
    auto rep = verify_nonisomorphism(n, cfg.m0);
    s->add("pairwise-noniso", "n=" + std::to_string(n), rep.ok,
           rep.failures.empty() ? "dual pairs " + std::to_string(rep.dual_pairs_found)
                                : rep.failures[0]);
  }
}

json report_json(const std::string& suite_name, const RunConfig& cfg,
                 const std::vector<Suite>& suites, double ms, bool ok) {
  json checks = json::array();
  for (const auto& su : suites)
    for (const auto& c : su.checks) {
      json jc{{"suite", su.name}, {"id", c.id}, {"params", c.params}, {"verdict", c.verdict}};
      if (!c.witness.empty()) jc["witness"] = c.witness;
      checks.push_back(std::move(jc));
    }
  return json{{"schema_version", kSchemaVersion}, {"tool", kVersion},
              {"suite", suite_name},  {"n", cfg.n},
              {"m", cfg.m0.str()},    {"seed", cfg.seed},
              {"big", cfg.big},       {"timing_ms", ms},
              {"checks", checks},     {"ok", ok}};
}

int run_suites(const std::string& name, const RunConfig& cfg,
               const std::vector<std::pair<std::string, void (*)(const RunConfig&, Suite*)>>& fns,
               const std::string& out_path) {
  for (const auto& w : specialization_warnings(cfg.n, cfg.m0))
    std::cerr << "warning: " << w << "\n";
  auto start = std::chrono::steady_clock::now();
  std::vector<Suite> suites;
  for (const auto& [sname, fn] : fns) {
    Suite su;
    su.name = sname;
    fn(cfg, &su);
    suites.push_back(std::move(su));
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  bool ok = true;
  for (const auto& su : suites) {
    for (const auto& c : su.checks) {
      if (c.verdict == "fail") ok = false;
      std::cout << su.name << " | " << c.id << (c.params.empty() ? "" : " [" + c.params + "]")
                << " | " << c.verdict << (c.witness.empty() ? "" : " | " + c.witness) << "\n";
    }
  }
  std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << " (" << ms << " ms)\n";
  if (!out_path.empty()) emit(report_json(name, cfg, suites, ms, ok), out_path);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for Brauer / BMW algebras and their Lie closures"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // shared option storage
  int n = 3;
  std::string m_str = "13/2", lambda_str, out_path, elem_str, a_str, b_str;
  std::string s_str = "2", alpha_str = "7", dot_path, csv_path, group, algebra = "brauer";
  int K = 8;
  bool big = false, generic = false, unprimed = false, hecke = false;
  unsigned seed = 20260824;

  auto* c_enum = app.add_subcommand("enumerate", "list the diagram basis of Br_n");
  c_enum->add_option("--n", n, "strand count")->required();
  c_enum->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* c_comp = app.add_subcommand("compose", "compose two diagrams, reporting closed loops");
  c_comp->add_option("--n", n)->required();
  c_comp->add_option("--a", a_str, "first diagram, e.g. \"(1,2')(2,1')(3,3')\"")->required();
  c_comp->add_option("--b", b_str, "second diagram")->required();

  auto* c_trace = app.add_subcommand("trace", "Markov trace of an element of Br_n");
  c_trace->add_option("--n", n)->required();
  c_trace->add_option("--element", elem_str, "e.g. \"p12\" or \"s12*t13\"")->required();
  c_trace->add_option("--m", m_str, "rational specialization; omit with --generic");
  c_trace->add_flag("--generic", generic, "work over Q(m)");

  auto* c_gram = app.add_subcommand("gram", "Gram matrix of the trace form on Br_n");
  c_gram->add_option("--n", n)->required();
  c_gram->add_option("--m", m_str);
  c_gram->add_option("--out", out_path);

  auto* c_rep = app.add_subcommand("rep", "generator matrices of a representation");
  c_rep->add_option("--group", group, "sym: Specht module of S_n");
  c_rep->add_option("--algebra", algebra, "brauer: cell module (default)");
  c_rep->add_option("--n", n);
  c_rep->add_option("--lambda", lambda_str, "partition, e.g. 2,1")->required();
  c_rep->add_option("--m", m_str);
  c_rep->add_option("--out", out_path);

  auto* c_lie = app.add_subcommand("lie-closure", "Lie closure of the t' images in a cell rep");
  c_lie->add_option("--n", n)->required();
  c_lie->add_option("--lambda", lambda_str)->required();
  c_lie->add_option("--m", m_str);
  c_lie->add_flag("--unprimed", unprimed, "use t_ij instead of t'_ij");
  c_lie->add_option("--out", out_path);

  auto* c_brat = app.add_subcommand("bratteli", "branching graph of the Brauer tower");
  c_brat->add_option("--n", n)->required();
  c_brat->add_option("--dot", dot_path, "write DOT here");
  c_brat->add_option("--csv", csv_path, "write a dimension table (CSV) here");

  auto* c_bmw = app.add_subcommand("bmw", "enumerate BMW_n at a rational specialization");
  c_bmw->add_option("--n", n)->required();
  c_bmw->add_option("--s", s_str);
  c_bmw->add_option("--alpha", alpha_str);
  c_bmw->add_flag("--hecke", hecke, "enumerate the Hecke quotient H_n(s) instead");
  c_bmw->add_option("--out", out_path);

  auto* c_ver = app.add_subcommand("verify", "run verification suites");
  c_ver->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--n", n);
    c->add_option("--m", m_str);
    c->add_option("--seed", seed, "seed for randomized property checks");
    c->add_flag("--big", big, "enable the n=5 Gram / n=6 closure workloads");
    c->add_option("--out", out_path, "write the JSON report here");
  };
  auto* v_all = c_ver->add_subcommand("all", "every suite applicable at rank <= n");
  add_common(v_all);
  auto* v_thm = c_ver->add_subcommand("theorem-brauer", "closure types for all cell labels");
  add_common(v_thm);
  auto* v_cub = c_ver->add_subcommand("cubic", "monodromy cubic in one cell rep");
  v_cub->add_option("--n", n)->required();
  v_cub->add_option("--lambda", lambda_str)->required();
  v_cub->add_option("--m", m_str);
  v_cub->add_option("--K", K, "series truncation order");

  CLI11_PARSE(app, argc, argv);

  try {
    Rational m0 = Rational::parse(m_str);

    if (*c_enum) {
      auto ds = enumerate_diagrams(n);
      json j{{"n", n}, {"count", ds.size()}};
      json arr = json::array();
      for (const auto& d : ds) {
        if (out_path.empty()) std::cout << d.str() << "\n";
        arr.push_back(d.str());
      }
      j["diagrams"] = std::move(arr);
      if (!out_path.empty()) emit(j, out_path);
      else std::cout << ds.size() << " diagrams\n";
      return 0;
    }

    if (*c_comp) {
      auto a = BrauerDiagram::parse(n, a_str);
      auto b = BrauerDiagram::parse(n, b_str);
      auto [d, loops] = compose(a, b);
      std::cout << d.str() << "\n" << "loops: " << loops << "\n";
      return 0;
    }

    if (*c_trace) {
      if (generic || !c_trace->count("--m")) {
        RationalFunction m = RationalFunction::variable();
        auto e = parse_element<RationalFunction>(n, elem_str, m);
        std::cout << ratfunc_str(markov_trace(e, m)) << "\n";
      } else {
        auto e = parse_element<Rational>(n, elem_str, m0);
        std::cout << markov_trace(e, m0) << "\n";
      }
      return 0;
    }

    if (*c_gram) {
      for (const auto& w : specialization_warnings(n, m0)) std::cerr << "warning: " << w << "\n";
      auto g = gram_matrix(n, m0);
      auto r = ldlt_positive_definite(g);
      json j{{"n", n}, {"m", m0.str()}, {"dim", g.rows()},
             {"positive_definite", r.positive_definite}};
      if (r.failing_pivot_index) j["failing_pivot_index"] = *r.failing_pivot_index;
      emit(j, out_path);
      return r.positive_definite ? 0 : 1;
    }

    if (*c_rep) {
      Partition lam = parse_partition(lambda_str);
      json j;
      if (group == "sym") {
        SpechtRep rep(lam);
        j = {{"group", "sym"}, {"lambda", lam.str()}, {"dim", rep.dim()}};
        json gens = json::array();
        for (int i = 1; i < lam.size(); ++i)
          gens.push_back({{"name", "s" + std::to_string(i)}, {"matrix", matrix_json(rep.adjacent(i))}});
        j["generators"] = std::move(gens);
      } else if (algebra == "brauer") {
        CellRep<Rational> rep(n, lam, m0);
        j = {{"algebra", "brauer"}, {"n", n}, {"lambda", lam.str()}, {"m", m0.str()},
             {"dim", rep.dim()}};
        json gens = json::array();
        for (int i = 1; i < n; ++i) {
          gens.push_back({{"name", "s" + std::to_string(i)}, {"matrix", matrix_json(rep.s(i))}});
          gens.push_back({{"name", "p" + std::to_string(i)}, {"matrix", matrix_json(rep.p(i))}});
        }
        j["generators"] = std::move(gens);
      } else {
        throw std::invalid_argument("rep: pass --group sym or --algebra brauer");
      }
      emit(j, out_path);
      return 0;
    }

    if (*c_lie) {
      for (const auto& w : specialization_warnings(n, m0)) std::cerr << "warning: " << w << "\n";
      Partition lam = parse_partition(lambda_str);
      CellRep<Rational> rep(n, lam, m0);
      auto gens = t_generators(rep, !unprimed);
      auto sub = lie_closure(gens);
      auto z = center(sub, gens);
      auto cls = classify(sub);
      json j{{"n", n},
             {"lambda", lam.str()},
             {"m", m0.str()},
             {"ambient_dim", rep.dim() * rep.dim()},
             {"closure_dim", sub.dim()},
             {"type", lie_type_name(cls.type)},
             {"center_dim", z.dim()}};
      emit(j, out_path);
      return 0;
    }

    if (*c_brat) {
      auto g = bratteli(n);
      std::cout << "layer sizes:";
      for (const auto& layer : g.layers) std::cout << " " << layer.size();
      std::cout << "\n";
      if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        f << bratteli_dot(g);
        std::cout << "wrote " << dot_path << "\n";
      }
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << "layer,lambda,cell_dim\n";
        for (size_t k = 0; k < g.layers.size(); ++k)
          for (const auto& lam : g.layers[k])
            f << k << ",\"" << lam.str() << "\"," << cell_dimension(static_cast<int>(k), lam)
              << "\n";
        std::cout << "wrote " << csv_path << "\n";
      }
      return 0;
    }

    if (*c_bmw) {
      Rational s0 = Rational::parse(s_str);
      EnumeratedAlgebra alg =
          hecke ? hecke_quotient(n, s0) : build_bmw(n, s0, Rational::parse(alpha_str));
      json j{{"n", n}, {"s", s0.str()}};
      if (!hecke) j["alpha"] = alg.alpha.str();
      j["dim"] = alg.dim;
      j["expected_dim"] = alg.expected_dim.get_str();
      j["degenerate"] = alg.degenerate;
      if (alg.degenerate) {
        std::cerr << "warning: degenerate specialization (dim " << alg.dim << " != "
                  << alg.expected_dim.get_str() << "); resample s, alpha\n";
      } else {
        j["basis_words"] = alg.basis_words;
        json gens = json::array();
        for (size_t i = 0; i < alg.sigma.size(); ++i) {
          gens.push_back({{"name", "sigma" + std::to_string(i + 1)},
                          {"matrix", matrix_json(alg.sigma[i])}});
          if (alg.has_e)
            gens.push_back(
                {{"name", "e" + std::to_string(i + 1)}, {"matrix", matrix_json(alg.e[i])}});
        }
        j["generator_matrices"] = std::move(gens);
        if (alg.has_e) j["delta"] = alg.delta.str();
      }
      emit(j, out_path);
      return alg.degenerate ? 1 : 0;
    }

    if (*v_all) {
      if (n > 6) throw std::invalid_argument("verify all: n <= 6");
      if (n == 6 && !big) throw std::invalid_argument("verify all: n = 6 needs --big");
      RunConfig cfg{n, m0, big, seed};
      return run_suites(
          "all", cfg,
          {{"diagrams", suite_diagram_counts},
           {"br2", suite_br2},
           {"trace", suite_trace_axioms},
           {"positivity", suite_positivity},
           {"dimensions", suite_dimensions},
           {"spectra", suite_spectra},
           {"branching", suite_branching},
           {"lie", suite_lie_closures},
           {"hecke", suite_hecke_classify},
           {"exceptional", suite_exceptional},
           {"arith", suite_dimension_arithmetic},
           {"bmw", suite_bmw},
           {"monodromy", suite_monodromy},
           {"unitarity", suite_unitarity},
           {"hyperbolicity", suite_hyperbolicity},
           {"noniso", suite_nonisomorphism}},
          out_path);
    }

    if (*v_thm) {
      RunConfig cfg{n, m0, big, seed};
      auto rep = verify_theorem_brauer(std::min(n, 5), m0, n <= 4);
      json entries = json::array();
      for (const auto& e : rep.entries) {
        std::cout << "lambda=" << e.lambda.str() << " dim=" << e.dim_v
                  << " closure=" << e.closure_dim << " expected=" << e.expected_dim
                  << " type=" << lie_type_name(e.type) << " " << (e.ok ? "ok" : "FAIL") << "\n";
        entries.push_back({{"lambda", e.lambda.str()},
                           {"dim", e.dim_v},
                           {"closure_dim", e.closure_dim},
                           {"expected_dim", e.expected_dim},
                           {"type", lie_type_name(e.type)},
                           {"ok", e.ok}});
      }
      std::cout << "center_dim=" << rep.center_dim << " overall " << (rep.ok ? "ok" : "FAIL")
                << "\n";
      if (!out_path.empty())
        emit(json{{"schema_version", kSchemaVersion}, {"suite", "theorem-brauer"},
                  {"n", std::min(n, 5)}, {"m", m0.str()},
                  {"center_dim", rep.center_dim}, {"entries", entries}, {"ok", rep.ok}},
             out_path);
      return rep.ok ? 0 : 1;
    }

    if (*v_cub) {
      Partition lam = parse_partition(lambda_str);
      auto r = verify_cubic_monodromy(n, lam, m0, K);
      json j{{"n", n},
             {"lambda", lam.str()},
             {"m", m0.str()},
             {"K", K},
             {"commuting", r.commuting},
             {"hecke_factor", r.hecke_factor},
             {"quadratic", r.quadratic},
             {"vanishing_cubics", r.vanishing},
             {"convention", r.convention},
             {"ok", r.ok}};
      emit(j, out_path);
      return r.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
