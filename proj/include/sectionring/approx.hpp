#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sectionring/rational.hpp"

namespace sectionring {

/// Reduced fraction c/d with d >= 1. Entries of approximation sequences.
struct Frac {
  std::int64_t c = 0;
  std::int64_t d = 1;

  Rational value() const { return Rational(c, d); }
  friend bool operator==(const Frac& a, const Frac& b) { return a.c == b.c && a.d == b.d; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
};

std::string to_string(const Frac& f);

/// Best lower approximations of alpha > 0, sorted increasing.
///
/// A reduced c/d with 0 <= c/d <= alpha qualifies when floor(alpha*d')/d' <=
/// c/d for every 1 <= d' < d. The sequence starts at 0/1 and ends at alpha
/// itself; all denominators divide into [1, den(alpha)].
std::vector<Frac> best_lower_approximations(const Rational& alpha);

/// Best upper approximations of alpha > 0, sorted decreasing. Mirror image of
/// the lower sequence: reduced c/d >= alpha qualifies when ceil(alpha*d')/d'
/// >= c/d for every d' < d. Starts at ceil(alpha)/1 and ends at alpha.
std::vector<Frac> best_upper_approximations(const Rational& alpha);

/// Subinterval of [0,1) that {-1/alpha} falls in. The first boundary of the
/// last bucket is 3/4 so that [2/3,1) splits into the two cases that behave
/// differently for quartic relation minimality.
enum class FracBucket {
  kZero,        // {-1/alpha} == 0
  kUpToThird,   // (0, 1/3)
  kThirdHalf,   // [1/3, 1/2)
  kHalfTwoThirds,   // [1/2, 2/3)
  kTwoThirdsThreeQuarters,  // [2/3, 3/4)
  kThreeQuartersOne,        // [3/4, 1)
};

/// {-1/alpha} in [0, 1).
Rational neg_inv_frac(const Rational& alpha);

FracBucket classify_neg_inv_frac(const Rational& alpha);

std::string to_string(FracBucket b);

// Frequently consulted unions of buckets.
inline bool bucket_in_0_half(FracBucket b) {
  return b == FracBucket::kZero || b == FracBucket::kUpToThird ||
         b == FracBucket::kThirdHalf;
}
inline bool bucket_in_open0_half(FracBucket b) {
  return b == FracBucket::kUpToThird || b == FracBucket::kThirdHalf;
}
inline bool bucket_in_0_third_or_half_two_thirds(FracBucket b) {
  return b == FracBucket::kZero || b == FracBucket::kUpToThird ||
         b == FracBucket::kHalfTwoThirds;
}
inline bool bucket_in_two_thirds_one(FracBucket b) {
  return b == FracBucket::kTwoThirdsThreeQuarters ||
         b == FracBucket::kThreeQuartersOne;
}

}  // namespace sectionring
