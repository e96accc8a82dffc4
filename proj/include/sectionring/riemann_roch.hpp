#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sectionring/divisor.hpp"
#include "sectionring/linalg.hpp"
#include "sectionring/localexp.hpp"

namespace sectionring {

/// A stated precondition of the closed-form theory fails for the given
/// input (for example the divisor's point difference is torsion). The CLI
/// maps this to its dedicated exit code.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Basis of L(D) = {f : div(f) + D >= 0}, for divisors of positive degree
/// (where the dimension equals deg D, which is asserted).
///
/// Construction: with h = prod (x - x_Q)^{D(Q)} over the finite points of
/// positive multiplicity, f lies in L(D) iff g = f*h has divisor
/// >= -(D - div h). The shifted divisor D - div h allows poles only at
/// infinity and imposes vanishing conditions at finitely many affine
/// points, so g ranges over the span of the monomials x^i, x^i y of pole
/// order at most E'(O) at infinity, cut down by those conditions.
template <class K>
std::vector<CurveFunction<K>> riemann_roch_space(const WeierstrassCurve<K>& e,
                                                 const CurveDivisor<K>& d) {
  if (d.degree() < 1)
    throw std::invalid_argument("riemann_roch_space: divisor degree must be positive");

  Poly<K> h = Poly<K>::one();
  CurveDivisor<K> shifted = d;
  const CurvePoint<K> o = CurvePoint<K>::at_infinity();
  for (const auto& [p, n] : d.mult) {
    if (p.inf || n <= 0) continue;
    Poly<K> lin({-p.x, K(1)});
    h = h * poly_pow(lin, n);
    shifted.add(p, -n);
    shifted.add(e.neg(p), -n);
    shifted.add(o, 2 * n);
  }

  const std::int64_t n_inf = shifted.at(o);
  if (n_inf < 0) throw std::logic_error("riemann_roch_space: negative pole budget at infinity");

  // Candidate numerators with pole order <= n_inf at infinity.
  std::vector<CurveFunction<K>> cands;
  for (std::int64_t i = 0; 2 * i <= n_inf; ++i)
    cands.push_back(CurveFunction<K>(poly_pow(Poly<K>::x(), i), Poly<K>::zero(), Poly<K>::one()));
  for (std::int64_t i = 0; 2 * i + 3 <= n_inf; ++i)
    cands.push_back(CurveFunction<K>(Poly<K>::zero(), poly_pow(Poly<K>::x(), i), Poly<K>::one()));

  // Vanishing conditions at finite points with negative remaining weight.
  Matrix<K> conditions;
  for (const auto& [p, n] : shifted.mult) {
    if (p.inf || n >= 0) continue;
    const std::int64_t m = -n;
    std::vector<Series<K>> exps;
    exps.reserve(cands.size());
    for (const auto& c : cands) exps.push_back(expand_at(e, c, p, m + 4));
    for (std::int64_t j = 0; j < m; ++j) {
      std::vector<K> row;
      row.reserve(cands.size());
      for (const auto& s : exps) row.push_back(s.coeff(j));
      conditions.push_back(std::move(row));
    }
  }

  std::vector<CurveFunction<K>> basis;
  const CurveFunction<K> inv_h = finv(e, CurveFunction<K>::from_poly(h));
  if (conditions.empty()) {
    for (const auto& c : cands) basis.push_back(fmul(e, c, inv_h));
  } else {
    for (const auto& v : nullspace(conditions, cands.size())) {
      CurveFunction<K> g = CurveFunction<K>::zero();
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (!v[i].is_zero()) g = fadd(g, fscale(v[i], cands[i]));
      basis.push_back(fmul(e, g, inv_h));
    }
  }

  if (static_cast<std::int64_t>(basis.size()) != d.degree())
    throw std::logic_error("riemann_roch_space: dimension mismatch against Riemann-Roch");
  return basis;
}

template <class K>
bool is_constant(const CurveFunction<K>& f) {
  return f.b.is_zero() && f.a.deg() <= 0 && f.den.deg() == 0;
}

/// Scales f so its leading expansion coefficient at p is 1.
template <class K>
CurveFunction<K> normalize_leading(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                                   const CurvePoint<K>& p) {
  return fscale(K(1) / leading_coefficient_at(e, f, p), f);
}

/// Smallest n in [1, bound] with n*p == O, if any.
template <class K>
std::optional<std::int64_t> torsion_order_up_to(const WeierstrassCurve<K>& e,
                                                const CurvePoint<K>& p, std::int64_t bound) {
  CurvePoint<K> acc = p;
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (acc.inf) return n;
    acc = e.add(acc, p);
  }
  return std::nullopt;
}

/// Spanning function of L(c(P1) - (c-1)(P2)), normalized to leading
/// coefficient 1 at its pole, with orders exactly -c at P1 and c-1 at P2.
/// For c in {0, 1} the space is spanned by constants and the result is 1.
/// Throws HypothesisViolation when c(P1 - P2) or (c-1)(P1 - P2) is trivial,
/// since either collision degenerates an order.
template <class K>
CurveFunction<K> t_function(const WeierstrassCurve<K>& e, const CurvePoint<K>& p1,
                            const CurvePoint<K>& p2, std::int64_t c) {
  if (p1 == p2) throw std::invalid_argument("t_function: points must differ");
  if (c == 0 || c == 1) return CurveFunction<K>::constant(K(1));

  const CurvePoint<K> diff = e.add(p1, e.neg(p2));
  for (std::int64_t k : {c >= 1 ? c - 1 : 1 - c, c >= 1 ? c : -c}) {
    if (e.scalar_mul(k, diff).is_infinity()) {
      auto ord = torsion_order_up_to(e, diff, k);
      throw HypothesisViolation("t_function: P1 - P2 is torsion of order " +
                                std::to_string(ord ? *ord : k) +
                                ", an order degenerates at c = " + std::to_string(c));
    }
  }

  CurveDivisor<K> d;
  d.add(p1, c);
  d.add(p2, -(c - 1));  // for c < 0 the pole sits at P2 instead
  auto basis = riemann_roch_space(e, d);
  if (basis.size() != 1) throw std::logic_error("t_function: expected a line");
  CurveFunction<K> f = basis[0];
  if (order_at(e, f, p1) != -c || order_at(e, f, p2) != c - 1)
    throw std::logic_error("t_function: wrong orders after construction");
  return normalize_leading(e, f, c >= 1 ? p1 : p2);
}

/// The non-constant spanning function of L((P1) + (P2)) with simple poles at
/// both points, normalized to leading coefficient 1 at P1 and constant term
/// 0 in the expansion at P1.
template <class K>
CurveFunction<K> w_function(const WeierstrassCurve<K>& e, const CurvePoint<K>& p1,
                            const CurvePoint<K>& p2) {
  if (p1 == p2) throw std::invalid_argument("w_function: points must differ");
  CurveDivisor<K> d;
  d.add(p1, 1);
  d.add(p2, 1);
  CurveFunction<K> g = CurveFunction<K>::zero();
  for (const auto& b : riemann_roch_space(e, d)) {
    if (!is_constant(b)) {
      g = b;
      break;
    }
  }
  if (g.is_zero()) throw std::logic_error("w_function: no non-constant element found");
  if (order_at(e, g, p1) != -1 || order_at(e, g, p2) != -1)
    throw std::logic_error("w_function: poles are not simple at both points");
  g = normalize_leading(e, g, p1);
  Series<K> s = expand_at(e, g, p1, 16);
  return fsub(g, CurveFunction<K>::constant(s.coeff(0)));
}

}  // namespace sectionring
