#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

#include "sectionring/field.hpp"
#include "sectionring/poly.hpp"

namespace sectionring {

template <class K>
struct CurvePoint {
  bool inf = true;
  K x{};
  K y{};

  static CurvePoint at_infinity() { return CurvePoint{}; }
  static CurvePoint affine(K x0, K y0) { return CurvePoint{false, std::move(x0), std::move(y0)}; }

  bool is_infinity() const { return inf; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.inf != b.inf) return a.inf;  // infinity sorts first
    if (a.inf) return false;
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }

  std::string str() const {
    if (inf) return "O";
    return "(" + FieldOps<K>::str(x) + ", " + FieldOps<K>::str(y) + ")";
  }
};

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, required smooth.
template <class K>
class WeierstrassCurve {
 public:
  WeierstrassCurve(K a1, K a2, K a3, K a4, K a6)
      : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
    if (discriminant().is_zero())
      throw std::invalid_argument("WeierstrassCurve: discriminant is zero");
  }

  const K& a1() const { return a1_; }
  const K& a2() const { return a2_; }
  const K& a3() const { return a3_; }
  const K& a4() const { return a4_; }
  const K& a6() const { return a6_; }

  K discriminant() const {
    K b2 = a1_ * a1_ + K(4) * a2_;
    K b4 = K(2) * a4_ + a1_ * a3_;
    K b6 = a3_ * a3_ + K(4) * a6_;
    K b8 = a1_ * a1_ * a6_ + K(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    return -(b2 * b2 * b8) - K(8) * b4 * b4 * b4 - K(27) * b6 * b6 + K(9) * b2 * b4 * b6;
  }

  /// x^3 + a2 x^2 + a4 x + a6
  Poly<K> rhs_cubic() const { return Poly<K>({a6_, a4_, a2_, K(1)}); }
  /// a1 x + a3, the coefficient of y on the left after moving y^2 across:
  /// y^2 = rhs_cubic(x) - ylin(x) * y.
  Poly<K> ylin() const { return Poly<K>({a3_, a1_}); }

  bool on_curve(const CurvePoint<K>& p) const {
    if (p.inf) return true;
    K lhs = p.y * p.y + a1_ * p.x * p.y + a3_ * p.y;
    return lhs == rhs_cubic().eval(p.x);
  }

  CurvePoint<K> neg(const CurvePoint<K>& p) const {
    if (p.inf) return p;
    return CurvePoint<K>::affine(p.x, -p.y - a1_ * p.x - a3_);
  }

  CurvePoint<K> add(const CurvePoint<K>& p, const CurvePoint<K>& q) const {
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x) {
      if (p.y != q.y) return CurvePoint<K>::at_infinity();
      return dbl(p);
    }
    K lambda = (q.y - p.y) / (q.x - p.x);
    K nu = p.y - lambda * p.x;
    return chord(lambda, nu, p.x, q.x);
  }

  CurvePoint<K> dbl(const CurvePoint<K>& p) const {
    if (p.inf) return p;
    K denom = K(2) * p.y + a1_ * p.x + a3_;
    if (denom.is_zero()) return CurvePoint<K>::at_infinity();
    K x2 = p.x * p.x;
    K lambda = (K(3) * x2 + K(2) * a2_ * p.x + a4_ - a1_ * p.y) / denom;
    K nu = (-(x2 * p.x) + a4_ * p.x + K(2) * a6_ - a3_ * p.y) / denom;
    return chord(lambda, nu, p.x, p.x);
  }

  CurvePoint<K> scalar_mul(std::int64_t n, const CurvePoint<K>& p) const {
    if (n < 0) return scalar_mul(-n, neg(p));
    CurvePoint<K> acc = CurvePoint<K>::at_infinity();
    CurvePoint<K> base = p;
    while (n > 0) {
      if (n & 1) acc = add(acc, base);
      n >>= 1;
      if (n > 0) base = dbl(base);
    }
    return acc;
  }

  /// True iff n*p == O for some 1 <= n <= bound.
  bool is_torsion_up_to(const CurvePoint<K>& p, std::int64_t bound) const {
    CurvePoint<K> acc = p;
    for (std::int64_t n = 1; n <= bound; ++n) {
      if (acc.inf) return true;
      acc = add(acc, p);
    }
    return false;
  }

 private:
  CurvePoint<K> chord(const K& lambda, const K& nu, const K& x1, const K& x2) const {
    K x3 = lambda * lambda + a1_ * lambda - a2_ - x1 - x2;
    K y3 = -(lambda + a1_) * x3 - nu - a3_;
    return CurvePoint<K>::affine(x3, y3);
  }

  K a1_, a2_, a3_, a4_, a6_;
};

}  // namespace sectionring
