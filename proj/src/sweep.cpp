#include "sectionring/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sectionring/monoid.hpp"

namespace sectionring {

SweepEntry compare_one_point_with_monoid(const Rational& alpha) {
  SweepEntry out;
  out.alpha = alpha;
  OnePointPresentation pres = one_point_presentation(alpha);
  LatticeMonoid M(alpha);
  out.gen_count = static_cast<std::int64_t>(pres.gens.size());

  std::int64_t window = 2 * alpha.den_i64() * alpha.ceil_i64() + 4;
  std::vector<LatticePoint> expected = M.irreducibles_up_to(window);
  std::vector<LatticePoint> got;
  for (const auto& g : pres.gens)
    if (g.degree() <= window) got.push_back(g.lattice);
  std::sort(got.begin(), got.end());
  out.gens_match = got == expected;
  if (!out.gens_match) {
    for (const auto& p : expected)
      if (!std::count(got.begin(), got.end(), p)) out.diff += " closed form misses " + to_string(p);
    for (const auto& p : got)
      if (!std::count(expected.begin(), expected.end(), p))
        out.diff += " closed form invents " + to_string(p);
  }

  std::vector<LatticePoint> pts;
  for (const auto& g : pres.gens) pts.push_back(g.lattice);
  auto leaders = relation_leaders_oracle(M, pts, default_leader_degree_bound(pts));
  out.leader_count = static_cast<std::int64_t>(leaders.size());
  std::set<std::pair<std::vector<std::int64_t>, bool>> oracle_set, closed_set;
  for (const auto& l : leaders) oracle_set.insert({l.exps, l.minimal});
  for (const auto& r : pres.rels) closed_set.insert({r.monomial, r.minimal});
  out.leaders_match = oracle_set == closed_set;
  if (!out.leaders_match) {
    for (const auto& [m, minimal] : oracle_set)
      if (!closed_set.count({m, minimal}))
        out.diff += " leader " + monomial_string(pres.gens, m) +
                    (minimal ? " (minimal)" : " (non-minimal)") + " only in oracle";
    for (const auto& [m, minimal] : closed_set)
      if (!oracle_set.count({m, minimal}))
        out.diff += " leader " + monomial_string(pres.gens, m) +
                    (minimal ? " (minimal)" : " (non-minimal)") + " only in closed form";
  }
  return out;
}

std::vector<Rational> sweep_alphas(std::int64_t q_max, std::int64_t alpha_max) {
  std::vector<Rational> out;
  for (std::int64_t q = 1; q <= q_max; ++q)
    for (std::int64_t p = 1; p <= alpha_max * q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(Rational(p, q));
  return out;
}

std::vector<SweepEntry> one_point_sweep(const std::vector<Rational>& alphas, bool parallel) {
  std::vector<SweepEntry> out(alphas.size());
  if (parallel) {
#ifdef SECTIONRING_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(alphas.size()); ++i)
      out[i] = compare_one_point_with_monoid(alphas[i]);
  } else {
    for (std::size_t i = 0; i < alphas.size(); ++i)
      out[i] = compare_one_point_with_monoid(alphas[i]);
  }
  return out;
}

std::string sweep_table(const std::vector<SweepEntry>& entries) {
  std::string s = "alpha  gens  leaders  status\n";
  for (const auto& e : entries) {
    s += e.alpha.str() + "  " + std::to_string(e.gen_count) + "  " +
         std::to_string(e.leader_count) + "  " + (e.ok() ? "MATCH" : "MISMATCH" + e.diff) + "\n";
  }
  return s;
}

}  // namespace sectionring
