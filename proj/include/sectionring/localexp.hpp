#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sectionring/function.hpp"

namespace sectionring {

/// Thrown internally when a truncated expansion cannot decide a question;
/// callers retry with a larger truncation before giving up loudly.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
Poly<K> mul_trunc(const Poly<K>& a, const Poly<K>& b, std::int64_t t) {
  if (a.is_zero() || b.is_zero()) return Poly<K>();
  std::size_t n = std::min<std::size_t>(a.c.size() + b.c.size() - 1, static_cast<std::size_t>(t));
  std::vector<K> out(n, K(0));
  for (std::size_t i = 0; i < a.c.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.c.size() && i + j < n; ++j)
      out[i + j] = out[i + j] + a.c[i] * b.c[j];
  return Poly<K>(std::move(out));
}

template <class K>
Poly<K> trunc(Poly<K> p, std::int64_t t) {
  if (p.deg() >= t) {
    p.c.resize(static_cast<std::size_t>(t));
    p.trim();
  }
  return p;
}

/// Multiplicative inverse of p in K[[s]]/(s^t); p(0) must be nonzero.
template <class K>
Poly<K> inv_series(const Poly<K>& p, std::int64_t t) {
  K c0 = p.at(0);
  if (c0.is_zero()) throw std::invalid_argument("inv_series: constant term is zero");
  K u = K(1) / c0;
  std::vector<K> r(static_cast<std::size_t>(t), K(0));
  r[0] = u;
  for (std::int64_t k = 1; k < t; ++k) {
    K acc(0);
    std::int64_t top = std::min<std::int64_t>(k, p.deg());
    for (std::int64_t i = 1; i <= top; ++i)
      acc = acc + p.at(i) * r[static_cast<std::size_t>(k - i)];
    r[static_cast<std::size_t>(k)] = -(u * acc);
  }
  return Poly<K>(std::move(r));
}

template <class K>
Poly<K> poly_derivative(const Poly<K>& p) {
  if (p.deg() < 1) return Poly<K>();
  std::vector<K> out(p.c.size() - 1, K(0));
  for (std::size_t i = 1; i < p.c.size(); ++i)
    out[i - 1] = K(static_cast<long>(i)) * p.c[i];
  return Poly<K>(std::move(out));
}

/// p(q) truncated to t coefficients, q a series in the local parameter.
template <class K>
Poly<K> compose_trunc(const Poly<K>& p, const Poly<K>& q, std::int64_t t) {
  Poly<K> r;
  for (std::size_t i = p.c.size(); i-- > 0;)
    r = trunc(mul_trunc(r, q, t) + Poly<K>::constant(p.c[i]), t);
  return r;
}

/// Laurent-series fragment at a point: coefficients for exponents in
/// [lo, hi) are known (entries of c beyond its length are known zeros, and
/// everything below lo is a known zero); exponents >= hi are unknown.
template <class K>
struct Series {
  static constexpr std::int64_t kInf = std::int64_t(1) << 40;

  std::int64_t lo = 0;
  std::int64_t hi = kInf;
  std::vector<K> c;

  static Series exact_zero() { return Series{}; }
  static Series exact_poly(const Poly<K>& p, std::int64_t shift = 0) {
    return Series{shift, kInf, p.c};
  }
  static Series window_poly(const Poly<K>& p, std::int64_t hi) {
    Series s{0, hi, p.c};
    if (s.c.size() > static_cast<std::size_t>(hi)) s.c.resize(static_cast<std::size_t>(hi));
    return s;
  }

  K coeff(std::int64_t e) const {
    if (e >= hi) throw std::out_of_range("Series: coefficient beyond known window");
    if (e < lo || e - lo >= static_cast<std::int64_t>(c.size())) return K(0);
    return c[static_cast<std::size_t>(e - lo)];
  }

  /// Exponent of the first known nonzero coefficient, or nullopt when the
  /// series is zero on the whole known window.
  std::optional<std::int64_t> first_nonzero() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero() && lo + static_cast<std::int64_t>(i) < hi)
        return lo + static_cast<std::int64_t>(i);
    return std::nullopt;
  }

  bool exact() const { return hi >= kInf; }
};

template <class K>
Series<K> sadd(const Series<K>& f, const Series<K>& g) {
  Series<K> r;
  r.lo = std::min(f.lo, g.lo);
  r.hi = std::min(f.hi, g.hi);
  std::int64_t stored_end = std::max(f.lo + static_cast<std::int64_t>(f.c.size()),
                                     g.lo + static_cast<std::int64_t>(g.c.size()));
  stored_end = std::min(stored_end, r.hi);
  if (stored_end > r.lo) {
    r.c.assign(static_cast<std::size_t>(stored_end - r.lo), K(0));
    for (std::size_t i = 0; i < f.c.size(); ++i) {
      std::int64_t e = f.lo + static_cast<std::int64_t>(i);
      if (e < stored_end) r.c[static_cast<std::size_t>(e - r.lo)] = r.c[static_cast<std::size_t>(e - r.lo)] + f.c[i];
    }
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      std::int64_t e = g.lo + static_cast<std::int64_t>(i);
      if (e < stored_end) r.c[static_cast<std::size_t>(e - r.lo)] = r.c[static_cast<std::size_t>(e - r.lo)] + g.c[i];
    }
  }
  return r;
}

template <class K>
Series<K> sneg(Series<K> f) {
  for (K& k : f.c) k = -k;
  return f;
}

template <class K>
Series<K> sscale(const K& s, Series<K> f) {
  for (K& k : f.c) k = s * k;
  return f;
}

template <class K>
Series<K> smul(const Series<K>& f, const Series<K>& g) {
  Series<K> r;
  r.lo = f.lo + g.lo;
  r.hi = std::min({f.lo + g.hi, g.lo + f.hi, Series<K>::kInf});
  if (!f.c.empty() && !g.c.empty()) {
    std::size_t cap = f.c.size() + g.c.size() - 1;
    if (r.hi - r.lo < static_cast<std::int64_t>(cap)) cap = static_cast<std::size_t>(r.hi - r.lo);
    r.c.assign(cap, K(0));
    for (std::size_t i = 0; i < f.c.size(); ++i) {
      if (f.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.c.size() && i + j < cap; ++j)
        r.c[i + j] = r.c[i + j] + f.c[i] * g.c[j];
    }
  }
  return r;
}

/// Inverse of a series with some known nonzero coefficient; rel_prec bounds
/// the relative precision requested from an exact input.
template <class K>
Series<K> sinv(const Series<K>& f, std::int64_t rel_prec) {
  auto v = f.first_nonzero();
  if (!v) {
    if (f.exact()) throw std::domain_error("sinv: inverse of the zero series");
    throw PrecisionError("sinv: leading term not visible in the known window");
  }
  std::int64_t e0 = *v;
  std::int64_t m = std::min(rel_prec, f.hi >= Series<K>::kInf ? rel_prec : f.hi - e0);
  std::vector<K> u(static_cast<std::size_t>(m), K(0));
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t e = e0 + i;
    if (e - f.lo < static_cast<std::int64_t>(f.c.size()))
      u[static_cast<std::size_t>(i)] = f.c[static_cast<std::size_t>(e - f.lo)];
  }
  Poly<K> unit(std::move(u));
  Poly<K> inv = inv_series(unit, m);
  Series<K> r;
  r.lo = -e0;
  r.hi = -e0 + m;
  r.c = inv.c;
  return r;
}

namespace detail {

inline std::int64_t hensel_iterations(std::int64_t t) {
  std::int64_t it = 2;
  for (std::int64_t reach = 1; reach < t; reach *= 2) ++it;
  return it;
}

/// y(s) with x = x0 + s, as a verified truncation mod s^t. Requires the
/// partial derivative in y to be a unit at the point.
template <class K>
Poly<K> solve_y_series(const WeierstrassCurve<K>& e, const K& x0, const K& y0, std::int64_t t) {
  const Poly<K> rs = e.rhs_cubic().shifted(x0);
  const Poly<K> ls = e.ylin().shifted(x0);
  Poly<K> y = Poly<K>::constant(y0);
  for (std::int64_t it = hensel_iterations(t); it-- > 0;) {
    Poly<K> fv = trunc(mul_trunc(y, y, t) + mul_trunc(ls, y, t) - rs, t);
    Poly<K> fy = trunc(K(2) * y + ls, t);
    y = trunc(y - mul_trunc(fv, inv_series(fy, t), t), t);
  }
  if (!trunc(mul_trunc(y, y, t) + mul_trunc(ls, y, t) - rs, t).is_zero() || y.at(0) != y0)
    throw std::logic_error("solve_y_series: lift failed to verify");
  return y;
}

/// x(s) with y = y0 + s, for points where the y-derivative vanishes.
template <class K>
Poly<K> solve_x_series(const WeierstrassCurve<K>& e, const K& x0, const K& y0, std::int64_t t) {
  const Poly<K> ys({y0, K(1)});
  const Poly<K> r = e.rhs_cubic();
  const Poly<K> l = e.ylin();
  const Poly<K> rp = poly_derivative(r);
  auto g_of = [&](const Poly<K>& x) {
    return trunc(mul_trunc(ys, ys, t) + mul_trunc(compose_trunc(l, x, t), ys, t) -
                     compose_trunc(r, x, t),
                 t);
  };
  Poly<K> x = Poly<K>::constant(x0);
  for (std::int64_t it = hensel_iterations(t); it-- > 0;) {
    Poly<K> gx = trunc(e.a1() * ys - compose_trunc(rp, x, t), t);
    x = trunc(x - mul_trunc(g_of(x), inv_series(gx, t), t), t);
  }
  if (!g_of(x).is_zero() || x.at(0) != x0)
    throw std::logic_error("solve_x_series: lift failed to verify");
  return x;
}

/// v(u) solving the dehomogenized equation at infinity, where u = x/y is the
/// local parameter, v = 1/y, x = u/v, y = 1/v. Valuation of v is 3.
template <class K>
Poly<K> solve_v_series(const WeierstrassCurve<K>& e, std::int64_t t) {
  const Poly<K> u = Poly<K>::x();
  const Poly<K> u2 = mul_trunc(u, u, t);
  const Poly<K> u3 = mul_trunc(u2, u, t);
  auto g_of = [&](const Poly<K>& v) {
    Poly<K> v2 = mul_trunc(v, v, t);
    Poly<K> v3 = mul_trunc(v2, v, t);
    return trunc(v - u3 - e.a2() * mul_trunc(u2, v, t) - e.a4() * mul_trunc(u, v2, t) -
                     e.a6() * v3 + e.a1() * mul_trunc(u, v, t) + e.a3() * v2,
                 t);
  };
  Poly<K> v = u3;
  for (std::int64_t it = hensel_iterations(t); it-- > 0;) {
    Poly<K> gv = trunc(Poly<K>::one() - e.a2() * u2 - K(2) * e.a4() * mul_trunc(u, v, t) -
                           K(3) * e.a6() * mul_trunc(v, v, t) + e.a1() * u +
                           K(2) * e.a3() * v,
                       t);
    v = trunc(v - mul_trunc(g_of(v), inv_series(gv, t), t), t);
  }
  if (!g_of(v).is_zero() || !v.at(0).is_zero() || !v.at(1).is_zero() || !v.at(2).is_zero() ||
      v.at(3) != K(1))
    throw std::logic_error("solve_v_series: lift failed to verify");
  return v;
}

template <class K>
Series<K> horner_at_series(const Poly<K>& p, const Series<K>& x) {
  Series<K> r = Series<K>::exact_zero();
  for (std::size_t i = p.c.size(); i-- > 0;)
    r = sadd(smul(r, x), Series<K>::exact_poly(Poly<K>::constant(p.c[i])));
  return r;
}

}  // namespace detail

/// Expansion of f in the local parameter at p, truncated near s^t. The
/// parameter is x - x0 where possible, y - y0 at points with vanishing
/// y-derivative, and x/y at infinity. The returned window is honest: every
/// stored coefficient is proven, and hi marks the first unknown exponent.
template <class K>
Series<K> expand_at(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                    const CurvePoint<K>& p, std::int64_t t) {
  if (f.is_zero()) return Series<K>::exact_zero();
  if (p.inf) {
    std::int64_t dmax = std::max({f.a.deg(), f.b.deg(), f.den.deg(), std::int64_t(0)});
    std::int64_t ti = t + 2 * dmax + 12;
    Poly<K> v = detail::solve_v_series(e, ti);
    Series<K> vs = Series<K>::window_poly(v, ti);
    Series<K> inv_v = sinv(vs, ti);
    Series<K> xs = smul(Series<K>::exact_poly(Poly<K>::x()), inv_v);  // u / v
    Series<K> num = sadd(detail::horner_at_series(f.a, xs),
                         smul(detail::horner_at_series(f.b, xs), inv_v));
    Series<K> den = detail::horner_at_series(f.den, xs);
    return smul(num, sinv(den, ti));
  }
  if (!e.on_curve(p)) throw std::invalid_argument("expand_at: point not on the curve");
  K fy = K(2) * p.y + e.a1() * p.x + e.a3();
  Poly<K> num, den;
  if (!fy.is_zero()) {
    Poly<K> y = detail::solve_y_series(e, p.x, p.y, t);
    num = trunc(f.a.shifted(p.x) + mul_trunc(f.b.shifted(p.x), y, t), t);
    den = f.den.shifted(p.x);
  } else {
    Poly<K> x = detail::solve_x_series(e, p.x, p.y, t);
    Poly<K> ys({p.y, K(1)});
    num = trunc(compose_trunc(f.a, x, t) + mul_trunc(compose_trunc(f.b, x, t), ys, t), t);
    den = compose_trunc(f.den, x, t);
  }
  return smul(Series<K>::window_poly(num, t), sinv(Series<K>::window_poly(den, t), t));
}

inline constexpr std::int64_t kOrderPrecisionSchedule[] = {16, 32, 64, 128, 256, 512};

/// Vanishing order of f at p via expansions, retrying with larger
/// truncations until the leading term is visible.
template <class K>
std::int64_t order_at_series(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                             const CurvePoint<K>& p) {
  if (f.is_zero()) throw std::invalid_argument("order_at: zero function");
  for (std::int64_t t : kOrderPrecisionSchedule) {
    try {
      auto v = expand_at(e, f, p, t).first_nonzero();
      if (v) return *v;
    } catch (const PrecisionError&) {
    }
  }
  throw std::runtime_error("order_at: leading term not found below the precision cap");
}

/// Vanishing order of f at p. At infinity the order comes from the exact
/// degree formula: the x-part sits in even negative orders and the y-part in
/// odd ones, so the two never cancel.
template <class K>
std::int64_t order_at(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                      const CurvePoint<K>& p) {
  if (f.is_zero()) throw std::invalid_argument("order_at: zero function");
  if (p.inf) {
    std::int64_t ord_num = Series<K>::kInf;
    if (!f.a.is_zero()) ord_num = -2 * f.a.deg();
    if (!f.b.is_zero()) ord_num = std::min(ord_num, -2 * f.b.deg() - 3);
    return ord_num + 2 * f.den.deg();
  }
  return order_at_series(e, f, p);
}

/// Coefficient of the leading term of f at p.
template <class K>
K leading_coefficient_at(const WeierstrassCurve<K>& e, const CurveFunction<K>& f,
                         const CurvePoint<K>& p) {
  if (f.is_zero()) throw std::invalid_argument("leading_coefficient_at: zero function");
  for (std::int64_t t : kOrderPrecisionSchedule) {
    try {
      Series<K> s = expand_at(e, f, p, t);
      auto v = s.first_nonzero();
      if (v) return s.coeff(*v);
    } catch (const PrecisionError&) {
    }
  }
  throw std::runtime_error("leading_coefficient_at: precision cap reached");
}

}  // namespace sectionring
