#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "sectionring/curve.hpp"
#include "sectionring/poly.hpp"

namespace sectionring {

/// Element of the function field of a Weierstrass curve, kept in the
/// canonical form (a(x) + b(x) y) / den(x) with den monic and
/// gcd(a, b, den) = 1. The canonical form is unique, so operator== is
/// componentwise.
template <class K>
struct CurveFunction {
  Poly<K> a;    // x-part of the numerator
  Poly<K> b;    // y-part of the numerator
  Poly<K> den;  // monic denominator in x

  CurveFunction() : den(Poly<K>::one()) {}
  CurveFunction(Poly<K> a_, Poly<K> b_, Poly<K> den_)
      : a(std::move(a_)), b(std::move(b_)), den(std::move(den_)) {
    normalize();
  }

  static CurveFunction zero() { return CurveFunction(); }
  static CurveFunction constant(const K& k) {
    return CurveFunction(Poly<K>::constant(k), Poly<K>::zero(), Poly<K>::one());
  }
  static CurveFunction x() {
    return CurveFunction(Poly<K>::x(), Poly<K>::zero(), Poly<K>::one());
  }
  static CurveFunction y() {
    return CurveFunction(Poly<K>::zero(), Poly<K>::one(), Poly<K>::one());
  }
  static CurveFunction from_poly(Poly<K> p) {
    return CurveFunction(std::move(p), Poly<K>::zero(), Poly<K>::one());
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  void normalize() {
    if (den.is_zero()) throw std::domain_error("CurveFunction: zero denominator");
    if (is_zero()) {
      den = Poly<K>::one();
      return;
    }
    Poly<K> g = gcd_monic(gcd_monic(a, b), den);
    if (g.deg() > 0) {
      a = Poly<K>::divmod(std::move(a), g).first;
      b = Poly<K>::divmod(std::move(b), g).first;
      den = Poly<K>::divmod(std::move(den), g).first;
    }
    K s = K(1) / den.lead();
    a = s * a;
    b = s * b;
    den = s * den;
  }

  friend bool operator==(const CurveFunction& f, const CurveFunction& g) {
    return f.a == g.a && f.b == g.b && f.den == g.den;
  }
  friend bool operator!=(const CurveFunction& f, const CurveFunction& g) { return !(f == g); }

  std::string str() const {
    std::string out = "(" + a.str();
    if (!b.is_zero()) out += " + (" + b.str() + ")*y";
    out += ")";
    if (den.deg() > 0) out += " / (" + den.str() + ")";
    return out;
  }
};

template <class K>
CurveFunction<K> fadd(const CurveFunction<K>& f, const CurveFunction<K>& g) {
  return CurveFunction<K>(f.a * g.den + g.a * f.den, f.b * g.den + g.b * f.den, f.den * g.den);
}

template <class K>
CurveFunction<K> fneg(const CurveFunction<K>& f) {
  return CurveFunction<K>(-f.a, -f.b, f.den);
}

template <class K>
CurveFunction<K> fsub(const CurveFunction<K>& f, const CurveFunction<K>& g) {
  return fadd(f, fneg(g));
}

template <class K>
CurveFunction<K> fscale(const K& s, const CurveFunction<K>& f) {
  return CurveFunction<K>(s * f.a, s * f.b, f.den);
}

/// Product, reducing y^2 = R(x) - ylin(x) y against the curve equation.
template <class K>
CurveFunction<K> fmul(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                      const CurveFunction<K>& g) {
  const Poly<K> r = e.rhs_cubic();
  const Poly<K> bb = f.b * g.b;
  Poly<K> na = f.a * g.a + bb * r;
  Poly<K> nb = f.a * g.b + g.a * f.b - bb * e.ylin();
  return CurveFunction<K>(std::move(na), std::move(nb), f.den * g.den);
}

/// Image under y -> -y - ylin(x), the hyperelliptic involution.
template <class K>
CurveFunction<K> fconj(const WeierstrassCurve<K>& e, const CurveFunction<K>& f) {
  return CurveFunction<K>(f.a - f.b * e.ylin(), -f.b, f.den);
}

/// f * conj(f) as a rational function of x alone: the numerator polynomial
/// a^2 - a b ylin - b^2 R over den^2.
template <class K>
Poly<K> fnorm_num(const WeierstrassCurve<K>& e, const CurveFunction<K>& f) {
  return f.a * f.a - f.a * f.b * e.ylin() - f.b * f.b * e.rhs_cubic();
}

template <class K>
CurveFunction<K> finv(const WeierstrassCurve<K>& e, const CurveFunction<K>& f) {
  if (f.is_zero()) throw std::domain_error("CurveFunction: inverse of zero");
  Poly<K> n = fnorm_num(e, f);
  if (n.is_zero()) throw std::logic_error("CurveFunction: norm vanished for nonzero function");
  return CurveFunction<K>(f.den * (f.a - f.b * e.ylin()), -(f.den * f.b), std::move(n));
}

template <class K>
CurveFunction<K> fdiv(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                      const CurveFunction<K>& g) {
  return fmul(e, f, finv(e, g));
}

template <class K>
CurveFunction<K> fpow(const WeierstrassCurve<K>& e, const CurveFunction<K>& f, std::int64_t n) {
  if (n < 0) return fpow(e, finv(e, f), -n);
  CurveFunction<K> out = CurveFunction<K>::constant(K(1));
  for (std::int64_t i = 0; i < n; ++i) out = fmul(e, out, f);
  return out;
}

/// Value at an affine point where the denominator does not vanish.
template <class K>
K feval(const CurveFunction<K>& f, const CurvePoint<K>& p) {
  if (p.inf) throw std::invalid_argument("feval: use expansions at infinity");
  K d = f.den.eval(p.x);
  if (d.is_zero()) throw std::domain_error("feval: denominator vanishes at the point");
  return (f.a.eval(p.x) + f.b.eval(p.x) * p.y) / d;
}

}  // namespace sectionring
