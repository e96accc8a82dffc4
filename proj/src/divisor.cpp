#include "sectionring/divisor.hpp"

#include <algorithm>
#include <vector>

#include "sectionring/localexp.hpp"

namespace sectionring {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

CurveDivisor<Rational> divisor_of(const WeierstrassCurve<Rational>& e,
                                  const CurveFunction<Rational>& f) {
  if (f.is_zero()) throw std::invalid_argument("divisor_of: zero function");

  // Every affine zero or pole lies over a root of the denominator or of the
  // norm numerator a^2 - a*b*ylin - b^2*rhs.
  std::vector<Rational> xs;
  if (f.den.deg() > 0)
    for (const Rational& r : rational_roots(f.den)) xs.push_back(r);
  Poly<Rational> nrm = fnorm_num(e, f);
  if (nrm.deg() > 0)
    for (const Rational& r : rational_roots(nrm)) xs.push_back(r);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  CurveDivisor<Rational> out;
  for (const Rational& x0 : xs) {
    // Fiber over x0: y^2 + ylin(x0) y - rhs(x0) = 0.
    Rational l0 = e.ylin().eval(x0);
    Rational r0 = e.rhs_cubic().eval(x0);
    Rational disc = l0 * l0 + Rational(4) * r0;
    std::vector<Rational> ys;
    if (disc.is_zero()) {
      ys.push_back(-l0 / Rational(2));
    } else if (auto s = rational_sqrt(disc)) {
      ys.push_back((-l0 + *s) / Rational(2));
      ys.push_back((-l0 - *s) / Rational(2));
    }
    for (const Rational& y0 : ys)
      out.add(CurvePoint<Rational>::affine(x0, y0),
              order_at(e, f, CurvePoint<Rational>::affine(x0, y0)));
  }
  out.add(CurvePoint<Rational>::at_infinity(), order_at(e, f, CurvePoint<Rational>::at_infinity()));

  if (out.degree() != 0)
    throw std::runtime_error(
        "divisor_of: places did not balance; a zero or pole is not rational or a root escaped "
        "the factoring bounds");
  return out;
}

}  // namespace sectionring
