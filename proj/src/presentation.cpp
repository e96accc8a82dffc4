#include "sectionring/presentation.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace sectionring {

namespace {

std::string power(const std::string& base, std::int64_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string kind_string(GenLabel label, int point, LatticePoint lat, bool two_point) {
  if (label == GenLabel::kA && lat.c == 0) return "u";
  if (label == GenLabel::kE) return "w " + power("u", lat.d);
  std::string t = "t_" + std::to_string(lat.c);
  if (two_point) t += "^(" + std::to_string(point) + ")";
  return t + " " + power("u", lat.d);
}

LabeledGenerator make_u() {
  LabeledGenerator g;
  g.point_index = 1;
  g.lattice = {1, 0};
  g.label = GenLabel::kA;
  g.bla_index = 0;
  g.fname = "u";
  g.function_kind = "u";
  return g;
}

LabeledGenerator make_a(const std::vector<Frac>& bla, int i, int point, bool two_point) {
  LabeledGenerator g;
  g.point_index = point;
  g.lattice = {bla[static_cast<std::size_t>(i)].d, bla[static_cast<std::size_t>(i)].c};
  g.label = GenLabel::kA;
  g.bla_index = i;
  (point == 1 ? g.pole1 : g.pole2) = g.lattice.c;
  g.fname = "f_" + std::to_string(i);
  if (two_point) g.fname += "^(" + std::to_string(point) + ")";
  g.function_kind = kind_string(g.label, point, g.lattice, two_point);
  return g;
}

LabeledGenerator make_extra(GenLabel label, LatticePoint lat, bool two_point) {
  LabeledGenerator g;
  g.point_index = 1;
  g.lattice = lat;
  g.label = label;
  g.pole1 = lat.c;
  g.fname = label == GenLabel::kB ? "f_b" : label == GenLabel::kC ? "f_c" : "f_d";
  g.function_kind = kind_string(label, 1, lat, two_point);
  return g;
}

LabeledGenerator make_w(std::int64_t deg) {
  LabeledGenerator g;
  g.point_index = 2;
  g.lattice = {deg, 1};
  g.label = GenLabel::kE;
  g.pole1 = 1;
  g.pole2 = 1;
  g.fname = "f_w";
  g.function_kind = kind_string(g.label, 2, g.lattice, true);
  return g;
}

LatticePoint extra_lattice(GenLabel label, const Rational& alpha, const std::vector<Frac>& bla) {
  switch (label) {
    case GenLabel::kB:
      return {(Rational(2) / alpha).ceil_i64(), 2};
    case GenLabel::kC:
      return {(Rational(3) / alpha).ceil_i64(), 3};
    default:
      return {bla[1].d + bla[2].d, 1 + bla[2].c};
  }
}

// Appends the point-1 generators in term order. has_c / has_d are passed in
// because the two-point unequal regime reuses this block.
template <typename Pres>
void build_point1_block(Pres& P, const std::vector<Frac>& bla, FracBucket bucket, bool has_c,
                        bool has_d, bool two_point, std::vector<int>& pos_bla) {
  const int r = static_cast<int>(bla.size()) - 1;
  pos_bla.assign(static_cast<std::size_t>(r) + 1, -1);
  auto push = [&P](LabeledGenerator g, int* slot) {
    if (slot) *slot = static_cast<int>(P.gens.size());
    P.gens.push_back(std::move(g));
  };

  const Rational alpha = bla.back().value();
  push(make_u(), &P.pos_u);
  if (bucket_in_0_half(bucket))
    push(make_extra(GenLabel::kB, extra_lattice(GenLabel::kB, alpha, bla), two_point), &P.pos_b);
  if (has_c && bucket != FracBucket::kHalfTwoThirds)
    push(make_extra(GenLabel::kC, extra_lattice(GenLabel::kC, alpha, bla), two_point), &P.pos_c);
  if (r >= 2) push(make_a(bla, 2, 1, two_point), &pos_bla[2]);
  if (has_c && bucket == FracBucket::kHalfTwoThirds)
    push(make_extra(GenLabel::kC, extra_lattice(GenLabel::kC, alpha, bla), two_point), &P.pos_c);
  if (has_d)
    push(make_extra(GenLabel::kD, extra_lattice(GenLabel::kD, alpha, bla), two_point), &P.pos_d);
  for (int i = 3; i <= r; ++i) push(make_a(bla, i, 1, two_point), &pos_bla[i]);
}

using Term = std::pair<int, std::int64_t>;  // generator position, exponent

void add_rel(std::vector<RelationLeader>& rels, std::size_t width,
             std::initializer_list<Term> terms, bool minimal = true, bool boxed = false,
             bool asserted = true) {
  RelationLeader rl;
  rl.monomial.assign(width, 0);
  for (const Term& t : terms) {
    if (t.first < 0) throw std::logic_error("relation uses an absent generator");
    rl.monomial[static_cast<std::size_t>(t.first)] += t.second;
  }
  rl.minimal = minimal;
  rl.boxed = boxed;
  rl.minimality_asserted = asserted;
  rels.push_back(std::move(rl));
}

std::int64_t degree_of(const std::vector<LabeledGenerator>& gens,
                       const std::vector<std::int64_t>& exps) {
  if (exps.size() != gens.size()) throw std::invalid_argument("exponent vector width mismatch");
  std::int64_t d = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) d += exps[k] * gens[k].degree();
  return d;
}

// Final tie-break shared by all three term orders: at the highest generator
// with differing exponent, the smaller exponent makes the smaller monomial.
int compare_top_exponent(const std::vector<std::int64_t>& m1, const std::vector<std::int64_t>& m2) {
  for (std::size_t k = m1.size(); k-- > 0;) {
    if (m1[k] != m2[k]) return m1[k] < m2[k] ? -1 : 1;
  }
  return 0;
}

int compare_i64(std::int64_t a, std::int64_t b) { return a < b ? -1 : a > b ? 1 : 0; }

}  // namespace

char to_char(GenLabel label) {
  switch (label) {
    case GenLabel::kA: return 'a';
    case GenLabel::kB: return 'b';
    case GenLabel::kC: return 'c';
    case GenLabel::kD: return 'd';
    default: return 'e';
  }
}

std::string to_string(const LabeledGenerator& g) {
  return g.fname + " = " + g.function_kind + ", " + to_string(g.lattice) + ", label " +
         std::string(1, to_char(g.label));
}

std::string monomial_string(const std::vector<LabeledGenerator>& gens,
                            const std::vector<std::int64_t>& exps) {
  std::string out;
  for (std::size_t k = 0; k < gens.size() && k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    if (!out.empty()) out += " ";
    out += power(gens[k].fname, exps[k]);
  }
  return out.empty() ? "1" : out;
}

std::int64_t OnePointPresentation::monomial_degree(const std::vector<std::int64_t>& exps) const {
  return degree_of(gens, exps);
}

std::int64_t TwoPointPresentation::monomial_degree(const std::vector<std::int64_t>& exps) const {
  return degree_of(gens, exps);
}

OnePointPresentation one_point_presentation(const Rational& alpha) {
  if (alpha.sign() <= 0) throw std::domain_error("one_point_presentation: alpha must be positive");
  OnePointPresentation P;
  P.alpha = alpha;
  P.bla = best_lower_approximations(alpha);
  P.bucket = classify_neg_inv_frac(alpha);
  const int r = static_cast<int>(P.bla.size()) - 1;

  build_point1_block(P, P.bla, P.bucket, bucket_in_0_third_or_half_two_thirds(P.bucket),
                     bucket_in_open0_half(P.bucket), false, P.pos_bla);

  const std::size_t w = P.gens.size();
  auto rel = [&](std::initializer_list<Term> terms, bool minimal = true, bool boxed = false,
                 bool asserted = true) { add_rel(P.rels, w, terms, minimal, boxed, asserted); };

  // products of two high best-approximation generators
  for (int i = 3; i <= r; ++i) {
    for (int j = 0; j <= i - 2; ++j) {
      if (j == 1) continue;
      if (j == 0 && i == 3 && bucket_in_two_thirds_one(P.bucket)) continue;
      rel({{P.pos_bla[i], 1}, {j == 0 ? P.pos_u : P.pos_bla[j], 1}});
    }
  }
  // high best-approximation generators against the extra species
  for (int i = 3; i <= r; ++i) {
    for (int pos : {P.pos_b, P.pos_c, P.pos_d}) {
      if (pos >= 0) rel({{P.pos_bla[i], 1}, {pos, 1}});
    }
  }
  // low-degree leaders specific to the bucket
  switch (P.bucket) {
    case FracBucket::kZero:
      rel({{P.pos_c, 2}});
      break;
    case FracBucket::kUpToThird:
      rel({{P.pos_c, 2}});
      rel({{P.pos_b, 1}, {P.pos_d, 1}});
      rel({{P.pos_c, 1}, {P.pos_d, 1}});
      rel({{P.pos_d, 2}});
      rel({{P.pos_u, 1}, {P.pos_d, 1}});
      rel({{P.pos_u, 1}, {P.pos_bla[2], 1}});
      break;
    case FracBucket::kThirdHalf:
      rel({{P.pos_u, 2}, {P.pos_bla[2], 2}}, false, true);
      rel({{P.pos_u, 1}, {P.pos_d, 1}});
      rel({{P.pos_b, 1}, {P.pos_d, 1}});
      rel({{P.pos_d, 2}});
      break;
    case FracBucket::kHalfTwoThirds:
      rel({{P.pos_c, 2}});
      break;
    default:
      rel({{P.pos_u, 1}, {P.pos_bla[3], 2}},
          P.bucket == FracBucket::kTwoThirdsThreeQuarters, true);
      break;
  }
  return P;
}

int compare_monomials(const OnePointPresentation& pres, const std::vector<std::int64_t>& m1,
                      const std::vector<std::int64_t>& m2) {
  if (int c = compare_i64(degree_of(pres.gens, m1), degree_of(pres.gens, m2))) return c;
  std::int64_t p1 = 0, p2 = 0;
  for (std::size_t k = 0; k < pres.gens.size(); ++k) {
    p1 += m1[k] * pres.gens[k].pole1;
    p2 += m2[k] * pres.gens[k].pole1;
  }
  if (int c = compare_i64(p1, p2)) return c;
  return compare_top_exponent(m1, m2);
}

TwoPointPresentation two_point_presentation(const Rational& alpha1, const Rational& alpha2) {
  if (alpha1.sign() <= 0 || alpha2.sign() <= 0)
    throw std::domain_error("two_point_presentation: weights must be positive");
  TwoPointPresentation P;
  P.swapped = alpha1 < alpha2;
  P.alpha1 = P.swapped ? alpha2 : alpha1;
  P.alpha2 = P.swapped ? alpha1 : alpha2;
  P.bla1 = best_lower_approximations(P.alpha1);
  P.bla2 = best_lower_approximations(P.alpha2);
  P.bucket1 = classify_neg_inv_frac(P.alpha1);
  const int r1 = static_cast<int>(P.bla1.size()) - 1;
  const int r2 = static_cast<int>(P.bla2.size()) - 1;
  const bool unequal = P.bla2[1].d > P.bla1[1].d;
  P.regime = unequal ? TwoPointRegime::kUnequalCeilings : TwoPointRegime::kEqualCeilings;

  const bool has_b = bucket_in_0_half(P.bucket1);
  const bool has_c = bucket_in_0_third_or_half_two_thirds(P.bucket1) && unequal;
  const bool has_d = bucket_in_open0_half(P.bucket1) && unequal;

  auto push = [&P](LabeledGenerator g, int* slot) {
    if (slot) *slot = static_cast<int>(P.gens.size());
    P.gens.push_back(std::move(g));
  };

  if (unequal) {
    build_point1_block(P, P.bla1, P.bucket1, has_c, has_d, true, P.pos_bla1);
    push(make_w(P.bla2[1].d), &P.pos_w);
  } else {
    P.pos_bla1.assign(static_cast<std::size_t>(r1) + 1, -1);
    push(make_u(), &P.pos_u);
    push(make_w(P.bla2[1].d), &P.pos_w);
    if (has_b)
      push(make_extra(GenLabel::kB, extra_lattice(GenLabel::kB, P.alpha1, P.bla1), true),
           &P.pos_b);
    for (int i = 2; i <= r1; ++i) push(make_a(P.bla1, i, 1, true), &P.pos_bla1[i]);
  }
  P.pos_bla2.assign(static_cast<std::size_t>(r2) + 1, -1);
  for (int j = 2; j <= r2; ++j) push(make_a(P.bla2, j, 2, true), &P.pos_bla2[j]);

  const std::size_t w = P.gens.size();
  auto rel = [&](std::initializer_list<Term> terms, bool minimal = true, bool boxed = false,
                 bool asserted = true) { add_rel(P.rels, w, terms, minimal, boxed, asserted); };

  if (unequal) {
    // relations of the alpha1 subring carry over with their flags
    OnePointPresentation sub = one_point_presentation(P.alpha1);
    for (RelationLeader rl : sub.rels) {
      rl.monomial.resize(w, 0);
      P.rels.push_back(std::move(rl));
    }
    for (int j = 2; j <= r2; ++j) rel({{P.pos_u, 1}, {P.pos_bla2[j], 1}});
    for (int j = 3; j <= r2; ++j) rel({{P.pos_w, 1}, {P.pos_bla2[j], 1}});
    for (int j = 2; j <= r2; ++j)
      for (int i = j + 2; i <= r2; ++i) rel({{P.pos_bla2[i], 1}, {P.pos_bla2[j], 1}});
    // every mixed product across the two points leads a relation
    std::vector<int> left, right;
    for (int i = 2; i <= r1; ++i) left.push_back(P.pos_bla1[i]);
    for (int pos : {P.pos_b, P.pos_c, P.pos_d})
      if (pos >= 0) left.push_back(pos);
    for (int j = 2; j <= r2; ++j) right.push_back(P.pos_bla2[j]);
    right.push_back(P.pos_w);
    for (int l : left)
      for (int rg : right) rel({{l, 1}, {rg, 1}});
  } else if (bucket_in_0_half(P.bucket1)) {
    rel({{P.pos_b, 2}});
    for (int i = 2; i <= r1; ++i) rel({{P.pos_u, 1}, {P.pos_bla1[i], 1}});
    for (int j = 2; j <= r2; ++j) rel({{P.pos_u, 1}, {P.pos_bla2[j], 1}});
    for (int i = 2; i <= r1; ++i) rel({{P.pos_b, 1}, {P.pos_bla1[i], 1}});
    for (int j = 2; j <= r2; ++j) rel({{P.pos_b, 1}, {P.pos_bla2[j], 1}});
    for (int i = 3; i <= r1; ++i) rel({{P.pos_w, 1}, {P.pos_bla1[i], 1}});
    for (int j = 3; j <= r2; ++j) rel({{P.pos_w, 1}, {P.pos_bla2[j], 1}});
    for (int j = 2; j <= r1; ++j)
      for (int i = j + 2; i <= r1; ++i) rel({{P.pos_bla1[i], 1}, {P.pos_bla1[j], 1}});
    for (int j = 2; j <= r2; ++j)
      for (int i = j + 2; i <= r2; ++i) rel({{P.pos_bla2[i], 1}, {P.pos_bla2[j], 1}});
    for (int i = 2; i <= r1; ++i)
      for (int j = 2; j <= r2; ++j) rel({{P.pos_bla1[i], 1}, {P.pos_bla2[j], 1}});
  } else {
    // cubic leader whose minimality has no closed form; confirmed numerically
    rel({{P.pos_u, 1}, {P.pos_bla1[2], 2}}, true, true, false);
    for (int i = 3; i <= r1; ++i) rel({{P.pos_u, 1}, {P.pos_bla1[i], 1}});
    for (int j = 2; j <= r2; ++j) rel({{P.pos_u, 1}, {P.pos_bla2[j], 1}});
    for (int i = 3; i <= r1; ++i) rel({{P.pos_w, 1}, {P.pos_bla1[i], 1}});
    for (int j = 3; j <= r2; ++j) rel({{P.pos_w, 1}, {P.pos_bla2[j], 1}});
    for (int j = 2; j <= r1; ++j)
      for (int i = j + 2; i <= r1; ++i) rel({{P.pos_bla1[i], 1}, {P.pos_bla1[j], 1}});
    for (int j = 2; j <= r2; ++j)
      for (int i = j + 2; i <= r2; ++i) rel({{P.pos_bla2[i], 1}, {P.pos_bla2[j], 1}});
    for (int i = 2; i <= r1; ++i)
      for (int j = 2; j <= r2; ++j) rel({{P.pos_bla1[i], 1}, {P.pos_bla2[j], 1}});
  }
  return P;
}

int compare_monomials(const TwoPointPresentation& pres, const std::vector<std::int64_t>& m1,
                      const std::vector<std::int64_t>& m2) {
  if (pres.regime == TwoPointRegime::kUnequalCeilings) {
    std::int64_t q1 = 0, q2 = 0;
    for (std::size_t k = 0; k < pres.gens.size(); ++k) {
      q1 += m1[k] * pres.gens[k].pole2;
      q2 += m2[k] * pres.gens[k].pole2;
    }
    if (int c = compare_i64(q1, q2)) return c;
    if (int c = compare_i64(degree_of(pres.gens, m1), degree_of(pres.gens, m2))) return c;
    // the third key weighs the subring part only; f_w stays weightless here
    std::int64_t p1 = 0, p2 = 0;
    for (std::size_t k = 0; k < pres.gens.size(); ++k) {
      if (static_cast<int>(k) == pres.pos_w) continue;
      p1 += m1[k] * pres.gens[k].pole1;
      p2 += m2[k] * pres.gens[k].pole1;
    }
    if (int c = compare_i64(p1, p2)) return c;
  }
  return compare_top_exponent(m1, m2);
}

int compare_two_point(const Rational& alpha1, const Rational& alpha2, TwoPointRegime regime,
                      const std::vector<std::int64_t>& m1, const std::vector<std::int64_t>& m2) {
  TwoPointPresentation P = two_point_presentation(alpha1, alpha2);
  if (P.regime != regime)
    throw std::invalid_argument("compare_two_point: regime disagrees with the ceilings test");
  if (m1 == m2) throw std::invalid_argument("compare_two_point: monomials must differ");
  return compare_monomials(P, m1, m2);
}

namespace {

std::vector<std::int64_t> closed_form_impl(const OnePointPresentation& P, LatticePoint p,
                                           bool corrected) {
  LatticeMonoid M(P.alpha);
  if (!M.contains(p)) throw std::domain_error("closed form: point not in the monoid");
  const int r = static_cast<int>(P.bla.size()) - 1;
  const std::int64_t d1 = P.bla[1].d;

  std::vector<std::int64_t> out(P.gens.size(), 0);
  auto put = [&out](int pos, std::int64_t e) {
    if (pos < 0 || e < 0) throw std::logic_error("closed form: malformed decomposition");
    out[static_cast<std::size_t>(pos)] += e;
  };

  const std::int64_t a1 = p.c;
  const std::int64_t a0 = p.d - d1 * p.c;
  if (a0 >= 0) {
    // p = a1 v1 + a0 v0
    if (a1 % 2 == 0) {
      if (bucket_in_0_half(P.bucket)) {
        put(P.pos_b, a1 / 2);
        put(P.pos_u, a0);
      } else {
        put(P.pos_bla[2], a1 / 2);
        put(P.pos_u, a1 / 2 + a0);
      }
    } else {
      switch (P.bucket) {
        case FracBucket::kZero:
        case FracBucket::kUpToThird:
          put(P.pos_c, 1);
          put(P.pos_b, (a1 - 3) / 2);
          put(P.pos_u, a0);
          break;
        case FracBucket::kThirdHalf:
          put(P.pos_bla[2], 1);
          put(P.pos_b, (a1 - 3) / 2);
          put(P.pos_u, a0 + 1);
          break;
        case FracBucket::kHalfTwoThirds:
          put(P.pos_c, 1);
          put(P.pos_bla[2], (a1 - 3) / 2);
          put(P.pos_u, (a1 - 3) / 2 + a0 + (corrected ? 1 : 0));
          break;
        default:
          put(P.pos_bla[3], 1);
          put(P.pos_bla[2], (a1 - 3) / 2);
          put(P.pos_u, (a1 - 3) / 2 + a0 + (corrected ? 2 : 0));
          break;
      }
    }
  } else {
    if (r < 2) throw std::domain_error("closed form: point outside the v0..v2 cone");
    // p = a2 v2 + a1 v1, by unimodularity of consecutive approximations
    const std::int64_t b1 = P.bla[2].c * p.d - P.bla[2].d * p.c;
    const std::int64_t b2 = d1 * p.c - p.d;
    if (b1 < 0 || b2 < 0) throw std::domain_error("closed form: point outside the v0..v2 cone");
    if (b1 % 2 == 0) {
      if (bucket_in_open0_half(P.bucket)) {
        put(P.pos_bla[2], b2);
        put(P.pos_b, b1 / 2);
      } else {
        put(P.pos_bla[2], b2 + b1 / 2);
        put(P.pos_u, b1 / 2);
      }
    } else if (b1 == 1 && bucket_in_open0_half(P.bucket)) {
      put(P.pos_d, 1);
      put(P.pos_bla[2], b2 - 1);
    } else {
      switch (P.bucket) {
        case FracBucket::kUpToThird:
          put(P.pos_bla[2], b2);
          put(P.pos_c, 1);
          put(P.pos_b, (b1 - 3) / 2);
          break;
        case FracBucket::kThirdHalf:
          put(P.pos_bla[2], b2 + 1);
          put(P.pos_b, (b1 - 3) / 2);
          put(P.pos_u, 1);
          break;
        case FracBucket::kHalfTwoThirds:
          put(P.pos_c, 1);
          put(P.pos_bla[2], b2 + (corrected ? (b1 - 3) / 2 : (b1 - 1) / 2));
          put(P.pos_u, (b1 - 1) / 2);
          break;
        default:
          put(P.pos_bla[3], 1);
          put(P.pos_bla[2], b2 + (b1 - 3) / 2);
          put(P.pos_u, (b1 + 1) / 2);
          break;
      }
    }
  }

  if (corrected) {
    LatticePoint sum{0, 0};
    for (std::size_t k = 0; k < out.size(); ++k)
      sum = sum + LatticePoint{out[k] * P.gens[k].lattice.d, out[k] * P.gens[k].lattice.c};
    if (sum != p) throw std::logic_error("closed form: degree/pole bookkeeping violated");
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> closed_form_min_decomposition(const OnePointPresentation& pres,
                                                        LatticePoint p) {
  return closed_form_impl(pres, p, true);
}

std::vector<std::int64_t> closed_form_min_decomposition_printed(const OnePointPresentation& pres,
                                                                LatticePoint p) {
  return closed_form_impl(pres, p, false);
}

const std::vector<TableErratum>& known_table_errata() {
  static const std::vector<TableErratum> errata = {
      {"[1/2,2/3)", 1, "v0 coefficient (a1-3)/2 + a0", "v0 coefficient (a1-3)/2 + a0 + 1"},
      {"[1/2,2/3)", 2, "v2 coefficient a2 + (a1-1)/2", "v2 coefficient a2 + (a1-3)/2"},
      {"[2/3,1)", 1, "v0 coefficient (a1-3)/2 + a0", "v0 coefficient (a1-3)/2 + a0 + 2"},
  };
  return errata;
}

}  // namespace sectionring
