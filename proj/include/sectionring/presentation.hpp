#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sectionring/approx.hpp"
#include "sectionring/monoid.hpp"
#include "sectionring/rational.hpp"

namespace sectionring {

/// Generator species of the section-ring presentations. Label a covers u
/// (the degree raise, best-approximation index 0) and the higher
/// best-approximation functions; b, c, d are the extra low-pole functions
/// that exist for some fractional parts of -1/alpha; e is the two-point
/// function w u^d with a simple pole at each point.
enum class GenLabel { kA, kB, kC, kD, kE };

char to_char(GenLabel label);

struct LabeledGenerator {
  int point_index = 1;    // point carrying the pole (w is listed under 2)
  LatticePoint lattice;   // (degree, pole order at the generator's own point)
  GenLabel label = GenLabel::kA;
  int bla_index = -1;     // index into the best-approximation list, labels a only
  std::string fname;          // "u", "f_b", "f_2^(1)", "f_w"
  std::string function_kind;  // "u", "t_3 u^2", "t_2^(1) u^2", "w u^3"

  std::int64_t degree() const { return lattice.d; }
  std::int64_t pole1 = 0;  // pole order at P1, clamped at 0
  std::int64_t pole2 = 0;  // pole order at P2, clamped at 0
};

/// Leading monomial of one Groebner relation, with flags.
struct RelationLeader {
  std::vector<std::int64_t> monomial;  // exponents over the presentation's generators
  bool minimal = true;
  bool boxed = false;               // leader of generator-degree >= 3
  bool minimality_asserted = true;  // false: the minimal flag must be confirmed numerically

  friend bool operator==(const RelationLeader& a, const RelationLeader& b) {
    return a.monomial == b.monomial && a.minimal == b.minimal && a.boxed == b.boxed;
  }
};

std::string to_string(const LabeledGenerator& g);
std::string monomial_string(const std::vector<LabeledGenerator>& gens,
                            const std::vector<std::int64_t>& exps);

/// Generators and relation leading terms of S_D for D = alpha * P, with the
/// generators in the canonical term-order listing.
struct OnePointPresentation {
  Rational alpha;
  FracBucket bucket = FracBucket::kZero;
  std::vector<Frac> bla;
  std::vector<LabeledGenerator> gens;
  std::vector<RelationLeader> rels;

  // positions in gens; -1 when the species is absent
  int pos_u = -1, pos_b = -1, pos_c = -1, pos_d = -1;
  std::vector<int> pos_bla;  // pos_bla[i] for best-approximation index i

  std::int64_t monomial_degree(const std::vector<std::int64_t>& exps) const;
};

OnePointPresentation one_point_presentation(const Rational& alpha);

/// Strict total order on exponent vectors: degree, then pole order, then at
/// the highest generator with differing exponent the smaller exponent loses
/// ties downward (returns -1, 0, or 1).
int compare_monomials(const OnePointPresentation& pres, const std::vector<std::int64_t>& m1,
                      const std::vector<std::int64_t>& m2);

enum class TwoPointRegime { kUnequalCeilings, kEqualCeilings };

/// Generators and relation leaders of S_D for D = alpha1 * P1 + alpha2 * P2,
/// alpha1 >= alpha2 > 0 after normalization. The regime splits on whether
/// ceil(1/alpha2) exceeds ceil(1/alpha1); the generator list is in the
/// canonical order of the regime's term order.
struct TwoPointPresentation {
  Rational alpha1, alpha2;
  bool swapped = false;  // inputs arrived with alpha1 < alpha2
  TwoPointRegime regime = TwoPointRegime::kUnequalCeilings;
  FracBucket bucket1 = FracBucket::kZero;  // bucket of {-1/alpha1}
  std::vector<Frac> bla1, bla2;
  std::vector<LabeledGenerator> gens;
  std::vector<RelationLeader> rels;

  int pos_u = -1, pos_b = -1, pos_c = -1, pos_d = -1, pos_w = -1;
  std::vector<int> pos_bla1, pos_bla2;

  std::int64_t monomial_degree(const std::vector<std::int64_t>& exps) const;
};

TwoPointPresentation two_point_presentation(const Rational& alpha1, const Rational& alpha2);

/// Unequal regime: pole order at P2, degree, pole order at P1, then highest
/// differing exponent. Equal regime: plain lex, largest generator first.
int compare_monomials(const TwoPointPresentation& pres, const std::vector<std::int64_t>& m1,
                      const std::vector<std::int64_t>& m2);

/// Spec-shaped wrapper; throws if the regime disagrees with the ceilings test.
int compare_two_point(const Rational& alpha1, const Rational& alpha2, TwoPointRegime regime,
                      const std::vector<std::int64_t>& m1, const std::vector<std::int64_t>& m2);

/// Closed-form minimal decomposition of p over the generators, valid in the
/// cone between v0 = (1,0) and v2 (the whole monoid when the best
/// approximation list stops at index 1). Exponents align with pres.gens.
/// Throws std::domain_error outside the covered cone or off the monoid.
std::vector<std::int64_t> closed_form_min_decomposition(const OnePointPresentation& pres,
                                                        LatticePoint p);

/// Same table evaluated with the coefficients exactly as tabulated in the
/// reference text, including its three erroneous v0 coefficients.
std::vector<std::int64_t> closed_form_min_decomposition_printed(const OnePointPresentation& pres,
                                                                LatticePoint p);

/// Corrections applied on top of the tabulated closed forms.
struct TableErratum {
  std::string row;      // bucket row of the table
  int pattern;          // 1: p = a1 v1 + a0 v0 inputs, 2: p = a2 v2 + a1 v1 inputs
  std::string printed;  // coefficient as tabulated
  std::string corrected;
};

const std::vector<TableErratum>& known_table_errata();

inline std::vector<LabeledGenerator> generators_one_point(const Rational& alpha) {
  return one_point_presentation(alpha).gens;
}
inline std::vector<RelationLeader> relations_one_point(const Rational& alpha) {
  return one_point_presentation(alpha).rels;
}
inline std::vector<LabeledGenerator> generators_two_point(const Rational& a1, const Rational& a2) {
  return two_point_presentation(a1, a2).gens;
}
inline std::vector<RelationLeader> relations_two_point(const Rational& a1, const Rational& a2) {
  return two_point_presentation(a1, a2).rels;
}

}  // namespace sectionring
