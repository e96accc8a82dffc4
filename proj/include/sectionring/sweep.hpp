#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sectionring/presentation.hpp"

namespace sectionring {

/// Closed form vs brute-force monoid answers for one slope.
struct SweepEntry {
  Rational alpha;
  bool gens_match = false;
  bool leaders_match = false;
  std::int64_t gen_count = 0;
  std::int64_t leader_count = 0;
  std::string diff;

  bool ok() const { return gens_match && leaders_match; }
};

/// Compares one_point_presentation(alpha) with the lattice monoid: generator
/// lattice points against irreducibles (both windowed to degree
/// 2*den(alpha)*ceil(alpha) + 4) and relation leaders with minimality flags
/// against the brute-force search.
SweepEntry compare_one_point_with_monoid(const Rational& alpha);

/// All reduced p/q with 1 <= q <= q_max and 0 < p/q <= alpha_max.
std::vector<Rational> sweep_alphas(std::int64_t q_max, std::int64_t alpha_max);

/// compare_one_point_with_monoid over the list, results in input order.
std::vector<SweepEntry> one_point_sweep(const std::vector<Rational>& alphas, bool parallel);

std::string sweep_table(const std::vector<SweepEntry>& entries);

}  // namespace sectionring
