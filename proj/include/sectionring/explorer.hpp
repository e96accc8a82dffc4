#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sectionring/approx.hpp"
#include "sectionring/divisor.hpp"
#include "sectionring/rational.hpp"
#include "sectionring/riemann_roch.hpp"
#include "sectionring/section_oracle.hpp"

namespace sectionring {

/// Data of the degree-1/(pq) divisor (a/p)P1 - (b/q)P2 with aq - bp = 1.
struct FrobeniusInstance {
  std::int64_t p = 2;
  std::int64_t q = 3;
  std::int64_t a = 1;
  std::int64_t b = 1;

  /// Smallest positive witnesses a = q^{-1} mod p, b = (aq - 1)/p.
  static FrobeniusInstance from_pq(std::int64_t p, std::int64_t q);

  Rational alpha1() const { return Rational(a, p); }
  Rational alpha2() const { return Rational(b, q); }
};

struct FrobeniusDimensions {
  std::int64_t count = 0;      // representations of d - pq as xp + yq with x, y >= 0
  std::int64_t formula_a = 0;  // max(0, floor(ad/p) - ceil(bd/q))
  std::int64_t formula_b = 0;  // same with an extra -1 inside the max
  bool a_matches = false;
  bool b_matches = false;
};

FrobeniusDimensions frobenius_dimension(const FrobeniusInstance& inst, std::int64_t d);

/// Admissible pole strip for D = alpha1 P1 - alpha2 P2: per degree d the pole
/// orders c at P1 that a section can have. The floor variant keeps the row
/// c = ceil(d*alpha2) that no section ever reaches.
enum class StripVariant {
  kAboveCeil,   // c >= ceil(d*alpha2) + 1
  kAboveFloor,  // c >= floor(d*alpha2) + 1
};

struct IneffectiveStrip {
  Rational alpha1;
  Rational alpha2;
  StripVariant variant = StripVariant::kAboveCeil;

  std::int64_t lo(std::int64_t d) const {
    Rational s = alpha2 * Rational(d);
    return (variant == StripVariant::kAboveCeil ? s.ceil_i64() : s.floor_i64()) + 1;
  }
  std::int64_t hi(std::int64_t d) const { return (alpha1 * Rational(d)).floor_i64(); }
  std::int64_t excluded(std::int64_t d) const { return (alpha2 * Rational(d)).ceil_i64(); }
  bool contains(std::int64_t d, std::int64_t c) const {
    return d >= 1 && c >= lo(d) && c <= hi(d);
  }
};

enum class CandidateType { kA, kB, kC };

std::string to_string(CandidateType t);

/// Conjectured generator t_c u^d together with the rule that emitted it.
struct ConjectureCandidate {
  std::int64_t d = 0;
  std::int64_t c = 0;
  CandidateType type = CandidateType::kA;
  // For type c only: whether the column index j also satisfies the narrow
  // range j >= 3. Every emitted type c satisfies j >= 2.
  bool in_strict_c_indexing = false;
  std::string note;
};

/// Candidate generator scan of the strip up to d_max. covered lists the strip
/// points reached by products of earlier candidates, unlabeled the unreached
/// points that none of the three rules names.
struct ConjectureScan {
  Rational alpha1;
  Rational alpha2;
  StripVariant variant = StripVariant::kAboveCeil;
  std::int64_t d_max = 0;
  std::vector<ConjectureCandidate> candidates;
  std::vector<std::pair<std::int64_t, std::int64_t>> covered;
  std::vector<std::pair<std::int64_t, std::int64_t>> unlabeled;

  std::vector<std::int64_t> degrees() const;
  std::string str() const;
};

ConjectureScan conjecture_generators(const Rational& alpha1, const Rational& alpha2,
                                     std::int64_t d_max,
                                     StripVariant variant = StripVariant::kAboveCeil);

/// Throws HypothesisViolation naming the torsion order when k(P2 - P1) = O
/// for some k in [1, bound].
template <class K>
void certify_non_torsion(const WeierstrassCurve<K>& e, const CurvePoint<K>& p1,
                         const CurvePoint<K>& p2, std::int64_t bound) {
  if (p1 == p2) throw std::invalid_argument("certify_non_torsion: points must differ");
  auto ord = torsion_order_up_to(e, e.add(p2, e.neg(p1)), bound);
  if (ord)
    throw HypothesisViolation("P2 - P1 is torsion of order " + std::to_string(*ord));
}

/// Basis of H^0(alpha1 P1 - alpha2 P2) for integers alpha1 > alpha2 >= 0:
/// the constant plus t_2..t_{alpha1} when alpha2 = 0, else t_{alpha2+1}..t_{alpha1}.
template <class K>
std::vector<CurveFunction<K>> ineffective_basis(const WeierstrassCurve<K>& e,
                                                std::int64_t alpha1, std::int64_t alpha2,
                                                const CurvePoint<K>& p1,
                                                const CurvePoint<K>& p2) {
  if (alpha2 < 0 || alpha1 <= alpha2)
    throw std::invalid_argument("ineffective_basis: need alpha1 > alpha2 >= 0");
  std::vector<CurveFunction<K>> out;
  std::int64_t first = alpha2 == 0 ? 1 : alpha2 + 1;
  for (std::int64_t c = first; c <= alpha1; ++c)
    out.push_back(t_function(e, p1, p2, c));
  return out;
}

/// Conjecture candidates vs the brute-force generator profile, compared as
/// multisets of (degree, pole order at P1).
struct ConjectureCheck {
  ConjectureScan scan;
  std::vector<GenProfileEntry> oracle;
  std::map<std::int64_t, std::int64_t> dims;
  std::vector<std::pair<std::int64_t, std::int64_t>> matched;
  std::vector<std::pair<std::int64_t, std::int64_t>> missing;  // oracle only
  std::vector<std::pair<std::int64_t, std::int64_t>> extra;    // candidate only
  std::vector<std::string> notes;

  bool match() const { return missing.empty() && extra.empty(); }
  std::vector<std::int64_t> oracle_degrees() const;
  std::string str() const;
};

void finish_conjecture_check(ConjectureCheck& out);

template <class K>
ConjectureCheck conjecture_check(const WeierstrassCurve<K>& e, const CurvePoint<K>& p1,
                                 const CurvePoint<K>& p2, const Rational& alpha1,
                                 const Rational& alpha2, std::int64_t d_max,
                                 StripVariant variant = StripVariant::kAboveCeil) {
  if (!(alpha2 > Rational(0) && alpha1 > alpha2))
    throw std::invalid_argument("conjecture_check: need alpha1 > alpha2 > 0");
  certify_non_torsion(e, p1, p2, (alpha1 * Rational(d_max)).ceil_i64() + 2);

  ConjectureCheck out;
  out.scan = conjecture_generators(alpha1, alpha2, d_max, variant);
  QDivisor<K> qd;
  qd.add(p1, alpha1);
  qd.add(p2, -alpha2);
  RingProfile prof =
      profile_section_ring(e, qd, p1, std::optional<CurvePoint<K>>(p2), d_max);
  out.oracle = prof.generators;
  out.dims = prof.dims;
  finish_conjecture_check(out);
  return out;
}

/// Strip points (d, pole at P1) of basis elements that hit a forbidden pole
/// order: 1 for a one-point divisor, ceil(d*alpha2) when a pole point with
/// weight alpha2 is present. Empty result = invariant holds.
template <class K>
std::vector<std::pair<std::int64_t, std::int64_t>> excluded_pole_violations(
    const WeierstrassCurve<K>& e, const QDivisor<K>& qd, const CurvePoint<K>& p1,
    const std::optional<Rational>& alpha2, std::int64_t d_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d = 1; d <= d_max; ++d) {
    std::int64_t forbidden = alpha2 ? (*alpha2 * Rational(d)).ceil_i64() : 1;
    for (const auto& f : graded_piece(e, qd, p1, d)) {
      std::int64_t pole = -order_at(e, f, p1);
      if (pole == forbidden) out.push_back({d, pole});
    }
  }
  return out;
}

}  // namespace sectionring
