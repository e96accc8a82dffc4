#include "sectionring/approx.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sectionring {

std::string to_string(const Frac& f) {
  return std::to_string(f.c) + "/" + std::to_string(f.d);
}

std::vector<Frac> best_lower_approximations(const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("best_lower_approximations: alpha must be positive");
  std::int64_t dmax = alpha.den_i64();
  std::vector<Frac> out;
  Rational lowbound(0);  // max over d' < d of floor(alpha*d')/d'; c >= 0 handles d == 1
  for (std::int64_t d = 1; d <= dmax; ++d) {
    std::int64_t chi = (alpha * Rational(d)).floor_i64();
    std::int64_t clo = d == 1 ? 0 : (lowbound * Rational(d)).ceil_i64();
    for (std::int64_t c = std::max<std::int64_t>(clo, 0); c <= chi; ++c)
      if (std::gcd(c, d) == 1) out.push_back({c, d});
    Rational here(chi, d);
    if (d == 1 || here > lowbound) lowbound = here;
  }
  std::sort(out.begin(), out.end(),
            [](const Frac& a, const Frac& b) { return a.value() < b.value(); });
  return out;
}

std::vector<Frac> best_upper_approximations(const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("best_upper_approximations: alpha must be positive");
  std::int64_t dmax = alpha.den_i64();
  std::vector<Frac> out;
  Rational upbound = rational_ceil(alpha);  // min over d' < d of ceil(alpha*d')/d'
  for (std::int64_t d = 1; d <= dmax; ++d) {
    std::int64_t clo = (alpha * Rational(d)).ceil_i64();
    std::int64_t chi = (upbound * Rational(d)).floor_i64();
    for (std::int64_t c = clo; c <= chi; ++c)
      if (std::gcd(c, d) == 1) out.push_back({c, d});
    Rational here(clo, d);
    if (here < upbound) upbound = here;
  }
  std::sort(out.begin(), out.end(),
            [](const Frac& a, const Frac& b) { return a.value() > b.value(); });
  return out;
}

Rational neg_inv_frac(const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::invalid_argument("neg_inv_frac: alpha must be positive");
  return (Rational(-1) / alpha).frac();
}

FracBucket classify_neg_inv_frac(const Rational& alpha) {
  Rational f = neg_inv_frac(alpha);
  if (f.is_zero()) return FracBucket::kZero;
  if (f < Rational(1, 3)) return FracBucket::kUpToThird;
  if (f < Rational(1, 2)) return FracBucket::kThirdHalf;
  if (f < Rational(2, 3)) return FracBucket::kHalfTwoThirds;
  if (f < Rational(3, 4)) return FracBucket::kTwoThirdsThreeQuarters;
  return FracBucket::kThreeQuartersOne;
}

std::string to_string(FracBucket b) {
  switch (b) {
    case FracBucket::kZero: return "{0}";
    case FracBucket::kUpToThird: return "(0,1/3)";
    case FracBucket::kThirdHalf: return "[1/3,1/2)";
    case FracBucket::kHalfTwoThirds: return "[1/2,2/3)";
    case FracBucket::kTwoThirdsThreeQuarters: return "[2/3,3/4)";
    case FracBucket::kThreeQuartersOne: return "[3/4,1)";
  }
  return "?";
}

}  // namespace sectionring
