#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sectionring/rational.hpp"

namespace sectionring {

/// Point of the degree/pole-order lattice: d = grading degree, c = pole order.
struct LatticePoint {
  std::int64_t d = 0;
  std::int64_t c = 0;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.d == b.d && a.c == b.c;
  }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
  // ordered by degree, then pole order
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.d != b.d ? a.d < b.d : a.c < b.c;
  }
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.d + b.d, a.c + b.c}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.d - b.d, a.c - b.c}; }
};

std::string to_string(const LatticePoint& p);

/// The additive monoid {(d, c) : d >= 1, 0 <= c <= alpha*d, c != 1} of
/// achievable (degree, pole order) pairs for a single point of weight alpha.
class LatticeMonoid {
 public:
  explicit LatticeMonoid(const Rational& alpha);

  const Rational& alpha() const { return alpha_; }
  bool contains(LatticePoint p) const;
  std::int64_t max_pole(std::int64_t d) const;  // floor(alpha*d)

  std::vector<LatticePoint> elements_up_to(std::int64_t dmax) const;
  /// Elements admitting no two-term split inside the monoid.
  std::vector<LatticePoint> irreducibles_up_to(std::int64_t dmax) const;

 private:
  Rational alpha_;
};

/// Decomposes monoid elements over a fixed generator list (sorted by (d, c)
/// ascending, which matches the term order's generator ranking). Memoizes
/// representability over prefixes of the list, so minimal decompositions are
/// found greedily: from the largest generator down, take the least exponent
/// that keeps the remainder representable over the smaller generators.
class MonoidDecomposer {
 public:
  MonoidDecomposer(std::vector<LatticePoint> gens, std::int64_t dmax, std::int64_t cmax);

  const std::vector<LatticePoint>& gens() const { return gens_; }
  bool representable(LatticePoint p);

  /// Exponents (aligned with gens()) of the term-order least decomposition.
  /// Throws if p is not representable.
  std::vector<std::int64_t> minimal_decomposition(LatticePoint p);

  /// Every decomposition of p over the generators.
  std::vector<std::vector<std::int64_t>> all_decompositions(LatticePoint p);

  LatticePoint image(const std::vector<std::int64_t>& exps) const;

 private:
  bool rep(std::size_t i, LatticePoint p);  // representable over gens[0..i)
  void gather(std::size_t i, LatticePoint p, std::vector<std::int64_t>& cur,
              std::vector<std::vector<std::int64_t>>& out);

  std::vector<LatticePoint> gens_;
  std::int64_t dmax_, cmax_;
  std::vector<std::vector<signed char>> memo_;  // memo_[i][d*(cmax+1)+c], -1 unknown
};

/// Leading exponent vector of one relation found by the brute-force search.
struct LeaderVector {
  std::vector<std::int64_t> exps;  // aligned with the generator list
  LatticePoint image;
  bool minimal = false;

  friend bool operator==(const LeaderVector& a, const LeaderVector& b) {
    return a.exps == b.exps && a.image == b.image && a.minimal == b.minimal;
  }
};

/// Brute-force relation leaders of the monoid algebra over the given
/// generators, up to total degree deg_max.
///
/// A vector v is a leader when v is not the minimal decomposition of its
/// image but v - e_g is one for every generator g in its support. The
/// minimality flag records whether the corresponding relation is needed in a
/// minimal generating set of the relation ideal: v is non-minimal exactly
/// when v connects to the minimal decomposition of its image inside the
/// fiber graph whose moves swap lower-degree leaders with their minimal
/// decompositions.
std::vector<LeaderVector> relation_leaders_oracle(const LatticeMonoid& M,
                                                  const std::vector<LatticePoint>& gens,
                                                  std::int64_t deg_max);

/// 4x the largest generator degree: the default search bound for leaders.
std::int64_t default_leader_degree_bound(const std::vector<LatticePoint>& gens);

}  // namespace sectionring
