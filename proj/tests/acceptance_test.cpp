// Acceptance gate: one timed pass/fail line per criterion, exact comparisons.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sectionring/explorer.hpp"
#include "sectionring/field.hpp"
#include "sectionring/function.hpp"
#include "sectionring/monoid.hpp"
#include "sectionring/sweep.hpp"

using namespace sectionring;
using R = Rational;
using P = CurvePoint<R>;
using F = CurveFunction<R>;

namespace {

std::string g_bindir;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

R rat(const char* s) {
  auto v = R::parse(s);
  require(v.has_value(), std::string("bad rational literal ") + s);
  return *v;
}

WeierstrassCurve<R> default_curve() {
  return WeierstrassCurve<R>(R(0), R(0), R(1), R(-1), R(0));
}

P pinf() { return P::at_infinity(); }
P porigin() { return P::affine(R(0), R(0)); }

int run_cli(const std::string& args, std::string* out) {
  std::string cmd = "\"" + g_bindir + "/sectionring_cli\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "popen failed");
  std::string text;
  char buf[4096];
  while (fgets(buf, sizeof buf, pipe)) text += buf;
  int st = pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

using TypedGen = std::tuple<std::int64_t, std::int64_t, char>;

std::multiset<TypedGen> typed_set(const std::vector<LabeledGenerator>& gens) {
  std::multiset<TypedGen> out;
  for (const auto& g : gens) out.insert({g.lattice.d, g.lattice.c, to_char(g.label)});
  return out;
}

std::vector<LatticePoint> lattice_points(const std::vector<LabeledGenerator>& gens) {
  std::vector<LatticePoint> pts;
  for (const auto& g : gens) pts.push_back(g.lattice);
  return pts;
}

// 1. verify --alpha 1 --max-degree 12: generators in degrees 1, 2, 3 and a
//    single minimal relation whose leading monomial f_c^2 sits in degree 6.
void criterion_1(std::string& detail) {
  std::string out;
  int rc = run_cli("verify --alpha 1 --max-degree 12", &out);
  require(rc == 0, "cli exited with " + std::to_string(rc) + ": " + out);
  require(out.find("MATCH") != std::string::npos, "cli output lacks MATCH: " + out);

  auto rep = verify_one_point(default_curve(), pinf(), rat("1"), 12);
  require(rep.ok, "oracle disagrees with the closed form: " + rep.str());

  auto pres = one_point_presentation(rat("1"));
  std::multiset<std::int64_t> degs;
  for (const auto& g : pres.gens) degs.insert(g.degree());
  require(degs == std::multiset<std::int64_t>{1, 2, 3}, "generator degrees are not {1,2,3}");
  require(pres.rels.size() == 1, "expected exactly one relation leader");
  require(pres.rels[0].minimal && !pres.rels[0].boxed, "relation flags off");
  require(monomial_string(pres.gens, pres.rels[0].monomial) == "f_c^2",
          "leading monomial is not f_c^2");
  require(pres.monomial_degree(pres.rels[0].monomial) == 6, "relation degree is not 6");
  detail = "gens in degrees {1,2,3}, one minimal relation, leader f_c^2 in degree 6";
}

// 2. Labeled generator sets for the six figure panels.
void criterion_2(std::string& detail) {
  auto typed = [](const char* a) { return typed_set(one_point_presentation(rat(a)).gens); };
  std::map<std::string, std::multiset<TypedGen>> want = {
      {"7/5", {{1, 0, 'a'}, {2, 2, 'b'}, {3, 3, 'c'}, {3, 4, 'a'}, {4, 5, 'd'}, {5, 7, 'a'}}},
      {"8/5", {{1, 0, 'a'}, {2, 2, 'b'}, {2, 3, 'a'}, {3, 4, 'd'}, {5, 8, 'a'}}},
      {"9/5",
       {{1, 0, 'a'}, {2, 2, 'b'}, {2, 3, 'a'}, {3, 4, 'd'}, {3, 5, 'a'}, {4, 7, 'a'}, {5, 9, 'a'}}},
      {"9/4", {{1, 0, 'a'}, {1, 2, 'a'}, {2, 3, 'c'}, {4, 9, 'a'}}},
      {"11/4", {{1, 0, 'a'}, {1, 2, 'a'}, {2, 3, 'c'}, {2, 5, 'a'}, {3, 8, 'a'}, {4, 11, 'a'}}},
      {"4", {{1, 0, 'a'}, {1, 2, 'a'}, {1, 3, 'a'}, {1, 4, 'a'}}},
  };
  for (const auto& [a, gens] : want)
    require(typed(a.c_str()) == gens, "generator set off at alpha = " + a);
  detail = "labeled generator sets match for alpha in {7/5, 8/5, 9/5, 9/4, 11/4, 4}";
}

// 3. Full sweep q <= 10, alpha <= 6 against the lattice monoid, including the
//    minimality flags of the quartic u^2 f_2^2 and cubic u f_3^2 leaders.
void criterion_3(std::string& detail) {
  auto alphas = sweep_alphas(10, 6);
  require(alphas.size() == 192, "expected 192 slopes, got " + std::to_string(alphas.size()));
  auto entries = one_point_sweep(alphas, true);
  for (const auto& en : entries)
    require(en.ok(), "monoid oracle mismatch at alpha = " + en.alpha.str() + ": " + en.diff);

  int quartics = 0, cubics = 0;
  for (const auto& a : alphas) {
    auto pres = one_point_presentation(a);
    int pu = pres.pos_u;
    int p2 = pres.pos_bla.size() > 2 ? pres.pos_bla[2] : -1;
    int p3 = pres.pos_bla.size() > 3 ? pres.pos_bla[3] : -1;
    for (const auto& r : pres.rels) {
      std::int64_t total = std::accumulate(r.monomial.begin(), r.monomial.end(), std::int64_t{0});
      if (total == 4 && pu >= 0 && p2 >= 0 && r.monomial[pu] == 2 && r.monomial[p2] == 2) {
        require(!r.minimal, "u^2 f_2^2 flagged minimal at alpha = " + a.str());
        ++quartics;
      }
      if (total == 3 && pu >= 0 && p3 >= 0 && r.monomial[pu] == 1 && r.monomial[p3] == 2) {
        bool want = pres.bucket == FracBucket::kTwoThirdsThreeQuarters;
        require(r.minimal == want, "u f_3^2 minimality off at alpha = " + a.str());
        ++cubics;
      }
    }
  }
  require(quartics > 0 && cubics > 0, "flag spot-checks never fired");
  detail = "192 slopes: gens == irreducibles, leaders and flags == brute force (" +
           std::to_string(quartics) + " quartic, " + std::to_string(cubics) + " cubic leaders)";
}

// 4. Fixed decomposition formulas against the brute force up to degree 20,
//    with the printed-table discrepancies confined to the known errata rows.
void criterion_4(std::string& detail) {
  struct Row {
    const char* alpha;
    bool diff_p1;
    bool diff_p2;
  };
  const Row rows[] = {
      {"1", false, false}, {"7/5", false, false}, {"3/2", false, false}, {"2", true, true},
      {"5/2", true, true}, {"3", true, false},    {"4", true, false},
  };
  for (const Row& row : rows) {
    auto pres = one_point_presentation(rat(row.alpha));
    LatticeMonoid M(rat(row.alpha));
    const std::int64_t dmax = 20;
    MonoidDecomposer dec(lattice_points(pres.gens), dmax, M.max_pole(dmax));
    bool saw_p1 = false, saw_p2 = false;
    for (std::int64_t d = 1; d <= dmax; ++d) {
      for (std::int64_t c = 0; c <= M.max_pole(d); ++c) {
        LatticePoint p{d, c};
        if (!M.contains(p)) continue;
        std::vector<std::int64_t> fixed;
        try {
          fixed = closed_form_min_decomposition(pres, p);
        } catch (const std::domain_error&) {
          continue;
        }
        require(fixed == dec.minimal_decomposition(p),
                "fixed form disagrees with brute force at alpha = " + std::string(row.alpha));
        if (closed_form_min_decomposition_printed(pres, p) != fixed)
          (p.d - pres.bla[1].d * p.c >= 0 ? saw_p1 : saw_p2) = true;
      }
    }
    require(saw_p1 == row.diff_p1 && saw_p2 == row.diff_p2,
            "printed-vs-fixed diff pattern off at alpha = " + std::string(row.alpha));
  }
  require(known_table_errata().size() == 3, "expected 3 recorded table errata");
  detail = "fixed forms == brute force to degree 20; 3 printed-table errata confirmed";
}

// 5. Two-point verification for the six worked divisors at d_max = 16.
void criterion_5(std::string& detail) {
  auto e = default_curve();
  const std::pair<const char*, const char*> pairs[] = {
      {"1", "1"}, {"1", "1/2"}, {"2", "1/2"}, {"3/2", "3/2"}, {"5/2", "1/3"}, {"2", "2/3"},
  };
  for (auto [a1, a2] : pairs) {
    auto rep = verify_two_point(e, pinf(), porigin(), rat(a1), rat(a2), 16);
    require(rep.ok, std::string("mismatch at (") + a1 + ", " + a2 + "): " + rep.str());
  }
  detail = "6 divisors verified against the function-field oracle at d <= 16";
}

// 6. |graded_piece| == hilbert_dim in every run above, and the degree-1 piece
//    of 50 random effective divisors follows the echelon pole pattern. The
//    full two-point window d <= 16 runs in the prime field, where the same
//    Riemann-Roch engine is cheap; rational arithmetic rechecks d <= 8.
void criterion_6(std::string& detail) {
  auto e = default_curve();
  const std::pair<const char*, const char*> effective[] = {
      {"1", "1"}, {"1", "1/2"}, {"2", "1/2"}, {"3/2", "3/2"}, {"5/2", "1/3"}, {"2", "2/3"},
  };
  auto check_dims_q = [&](const char* a1, const char* a2, std::int64_t d_max) {
    QDivisor<R> qd;
    qd.add(pinf(), rat(a1));
    if (a2) qd.add(porigin(), rat(a2));
    for (std::int64_t d = 1; d <= d_max; ++d)
      require(static_cast<std::int64_t>(graded_piece(e, qd, pinf(), d).size()) ==
                  hilbert_dim(e, qd, d),
              "basis size disagrees with hilbert_dim at d = " + std::to_string(d));
  };
  check_dims_q("1", nullptr, 12);
  check_dims_q("7/5", nullptr, 10);
  check_dims_q("5/2", nullptr, 10);
  for (auto [a1, a2] : effective) check_dims_q(a1, a2, 8);
  check_dims_q("4", "-1", 8);
  check_dims_q("13/5", "-1/7", 7);
  check_dims_q("1/2", "-1/3", 11);

  Fp::set_modulus(1000003);
  WeierstrassCurve<Fp> ef(Fp(0), Fp(0), Fp(1), Fp(-1), Fp(0));
  auto of = CurvePoint<Fp>::at_infinity();
  auto zf = CurvePoint<Fp>::affine(Fp(0), Fp(0));
  for (auto [a1, a2] : effective) {
    QDivisor<Fp> qd;
    qd.add(of, rat(a1));
    qd.add(zf, rat(a2));
    for (std::int64_t d = 1; d <= 16; ++d)
      require(static_cast<std::int64_t>(graded_piece(ef, qd, of, d).size()) ==
                  hilbert_dim(ef, qd, d),
              "prime-field basis size off at d = " + std::to_string(d));
  }

  std::mt19937 rng(20260815);
  std::uniform_int_distribution<std::int64_t> pick(0, 12);
  int done = 0;
  while (done < 50) {
    std::int64_t a1 = pick(rng), a2 = pick(rng);
    if (a1 + a2 < 1 || a1 + a2 > 12) continue;
    QDivisor<R> qd;
    qd.add(pinf(), R(a1));
    qd.add(porigin(), R(a2));
    std::string at = " for " + std::to_string(a1) + " P1 + " + std::to_string(a2) + " P2";
    require(hilbert_dim(e, qd, 1) == a1 + a2, "dim is not a1 + a2" + at);
    auto basis = graded_piece(e, qd, pinf(), 1);
    require(static_cast<std::int64_t>(basis.size()) == a1 + a2, "basis size off" + at);
    std::multiset<std::int64_t> ords, want{0};
    for (const auto& f : basis) ords.insert(order_at(e, f, pinf()));
    for (std::int64_t c = 2; c <= a1; ++c) want.insert(-c);
    for (std::int64_t c = 2; c <= a2; ++c) want.insert(c - 1);
    if (a1 >= 1 && a2 >= 1) want.insert(-1);
    require(ords == want, "echelon pole pattern off" + at);
    ++done;
  }
  detail = "basis sizes equal hilbert_dim in all runs; 50 random divisors follow the pole pattern";
}

// 7. Ineffective explorer at D = 2/3 P1 - 3/5 P2 out to degree 40.
void criterion_7(std::string& detail) {
  auto chk = conjecture_check(default_curve(), pinf(), porigin(), rat("2/3"), rat("3/5"), 40);
  require(chk.match(), "scan and oracle disagree: " + chk.str());
  std::vector<std::int64_t> want = {15, 18, 20, 21, 23, 24, 25, 26, 27,
                                    28, 29, 30, 31, 32, 33, 34, 35, 37};
  require(chk.oracle_degrees() == want, "oracle generator degrees off");
  detail = "conjecture matches the oracle; 18 generator degrees pinned";
}

// 8. Frobenius dimension pattern on pq <= d < 2pq for five (p, q) pairs.
void criterion_8(std::string& detail) {
  auto e = default_curve();
  const std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t> cases[] = {
      {2, 3, 1, 1}, {3, 5, 2, 3}, {2, 5, 1, 2}, {3, 4, 1, 1}, {4, 5, 1, 1},
  };
  for (auto [p, q, wa, wb] : cases) {
    auto inst = FrobeniusInstance::from_pq(p, q);
    std::string at = " at (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + ")";
    require(inst.a == wa && inst.b == wb, "witness off" + at);
    QDivisor<R> qd;
    qd.add(pinf(), inst.alpha1());
    qd.add(porigin(), -inst.alpha2());
    for (std::int64_t d = p * q; d < 2 * p * q; ++d) {
      auto fd = frobenius_dimension(inst, d);
      std::string where = at + ", d = " + std::to_string(d);
      require(fd.count == fd.formula_a && fd.a_matches, "formula_a off" + where);
      require(fd.count == hilbert_dim(e, qd, d), "count disagrees with hilbert_dim" + where);
      require(fd.b_matches == (fd.count == 0), "formula_b flag off" + where);
      if (d == p * q) require(!fd.b_matches, "formula_b not flagged at d = pq" + at);
    }
  }
  detail = "count == formula_a == hilbert_dim on [pq, 2pq); formula_b flagged at d = pq";
}

// 9. No basis element ever hits the excluded pole order.
void criterion_9(std::string& detail) {
  auto e = default_curve();
  for (const char* a : {"1", "3/2", "7/5", "5/2"}) {
    QDivisor<R> qd;
    qd.add(pinf(), rat(a));
    auto bad = excluded_pole_violations(e, qd, pinf(), std::nullopt, 10);
    require(bad.empty(), std::string("pole order 1 appears for alpha = ") + a);
  }
  const std::tuple<const char*, const char*, std::int64_t> strips[] = {
      {"4", "1", 8}, {"13/5", "1/7", 7},
  };
  for (auto [a1, a2, dmax] : strips) {
    QDivisor<R> qd;
    qd.add(pinf(), rat(a1));
    qd.add(porigin(), -rat(a2));
    auto bad = excluded_pole_violations(e, qd, pinf(), rat(a2), dmax);
    require(bad.empty(), std::string("ceiling pole appears for (") + a1 + ", -" + a2 + ")");
  }
  detail = "zero violations across one-point and ineffective runs";
}

// 10. Function-field laws: order additivity, principal divisors summing to O,
//     and the t-function symmetry.
void criterion_10(std::string& detail) {
  auto e = default_curve();
  std::vector<P> pts = {pinf(), porigin(), P::affine(R(1), R(0)), P::affine(R(-1), R(-1))};

  // factors whose zeros and poles are all rational, so divisor_of resolves
  // every place; random nonzero scalings leave the divisors unchanged
  std::vector<F> pool = {
      F::x(),
      F::y(),
      fadd(F::y(), F::constant(R(1))),
      fsub(F::x(), F::constant(R(1))),
      fadd(F::x(), F::constant(R(1))),
      fdiv(e, fadd(F::y(), F::constant(R(1))), F::x()),
      fdiv(e, F::x(), fsub(F::x(), F::constant(R(1)))),
      fmul(e, F::y(), F::x()),
      t_function(e, pinf(), porigin(), 2),
      t_function(e, pinf(), porigin(), 3),
      t_function(e, porigin(), pinf(), 4),
      w_function(e, pinf(), porigin()),
  };
  std::vector<CurveDivisor<R>> pool_div;
  for (const F& f : pool) {
    pool_div.push_back(divisor_of(e, f));
    require(pool_div.back().degree() == 0 && is_principal(e, pool_div.back()),
            "pool factor is not principal");
  }

  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> sign(0, 1);
  auto scalar = [&] { return R(sign(rng) ? num(rng) : -num(rng), num(rng)); };
  for (int t = 0; t < 200; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    F f = fscale(scalar(), pool[i]);
    F g = fscale(scalar(), pool[j]);
    F fg = fmul(e, f, g);
    for (const P& p : pts)
      require(order_at(e, fg, p) == order_at(e, f, p) + order_at(e, g, p),
              "order additivity fails at product " + std::to_string(t));
    auto div = divisor_of(e, fg);
    require(div.degree() == 0, "principal divisor of nonzero degree");
    require(is_principal(e, div), "group-law sum of div(fg) is not O");
    require(div == pool_div[i] + pool_div[j], "div(fg) != div f + div g");
  }

  // additivity also holds for unconstrained random functions
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> degree(0, 2);
  auto poly = [&](bool allow_zero) {
    std::vector<R> c(static_cast<std::size_t>(degree(rng)) + 1, R(0));
    for (auto& k : c) k = R(coef(rng));
    Poly<R> p(std::move(c));
    if (!allow_zero && p.is_zero()) p = Poly<R>::one();
    return p;
  };
  int done = 0;
  while (done < 30) {
    F f(poly(true), poly(true), poly(false));
    F g(poly(true), poly(true), poly(false));
    if (f.is_zero() || g.is_zero()) continue;
    F fg = fmul(e, f, g);
    for (const P& p : pts)
      require(order_at(e, fg, p) == order_at(e, f, p) + order_at(e, g, p),
              "order additivity fails for a random pair");
    ++done;
  }
  for (std::int64_t c = -6; c <= 6; ++c) {
    F a = t_function(e, pinf(), porigin(), c);
    F b = t_function(e, porigin(), pinf(), 1 - c);
    require(is_constant(fdiv(e, a, b)),
            "t_" + std::to_string(c) + "(P1, P2) is not proportional to t_" +
                std::to_string(1 - c) + "(P2, P1)");
  }
  detail =
      "200 products: order additivity, deg div = 0, sum div = O, div(fg) = div f + div g; "
      "t-symmetry for |c| <= 6";
}

}  // namespace

int main(int, char** argv) {
  std::string self = argv[0];
  auto slash = self.find_last_of('/');
  g_bindir = slash == std::string::npos ? std::string(".") : self.substr(0, slash);

  struct Criterion {
    int number;
    const char* headline;
    double budget_s;
    std::function<void(std::string&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "baseline verify (alpha = 1, d <= 12)", 1.0, criterion_1},
      {2, "figure-panel generator sets", 1.0, criterion_2},
      {3, "closed form vs monoid, all q <= 10, alpha <= 6", 60.0, criterion_3},
      {4, "decomposition table vs brute force, errata", 10.0, criterion_4},
      {5, "two-point verification, six divisors, d <= 16", 120.0, criterion_5},
      {6, "dimension bookkeeping and pole patterns", 30.0, criterion_6},
      {7, "ineffective explorer at 2/3, 3/5, d <= 40", 300.0, criterion_7},
      {8, "frobenius dimension pattern, five (p, q)", 10.0, criterion_8},
      {9, "excluded pole orders never appear", 30.0, criterion_9},
      {10, "function-field laws, 200 products", 30.0, criterion_10},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.fn(detail);
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.budget_s) {
      ok = false;
      detail = "over time budget: " + std::to_string(secs) + "s > " +
               std::to_string(c.budget_s) + "s";
    }
    std::printf("%2d %s %7.2fs  %s: %s\n", c.number, ok ? "PASS" : "FAIL", secs, c.headline,
                detail.c_str());
    std::fflush(stdout);
    if (ok) ++passed;
  }
  std::printf("acceptance: %d/10 criteria passed\n", passed);
  return passed == 10 ? 0 : 1;
}
