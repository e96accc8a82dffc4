#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "sectionring/curve.hpp"
#include "sectionring/function.hpp"
#include "sectionring/rational.hpp"

namespace sectionring {

/// Formal integer combination of curve points; only nonzero multiplicities
/// are stored.
template <class K>
struct CurveDivisor {
  std::map<CurvePoint<K>, std::int64_t> mult;

  void add(const CurvePoint<K>& p, std::int64_t n) {
    if (n == 0) return;
    auto it = mult.find(p);
    if (it == mult.end()) {
      mult.emplace(p, n);
    } else if ((it->second += n) == 0) {
      mult.erase(it);
    }
  }

  std::int64_t at(const CurvePoint<K>& p) const {
    auto it = mult.find(p);
    return it == mult.end() ? 0 : it->second;
  }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [p, n] : mult) d += n;
    return d;
  }

  friend CurveDivisor operator+(CurveDivisor a, const CurveDivisor& b) {
    for (const auto& [p, n] : b.mult) a.add(p, n);
    return a;
  }
  friend CurveDivisor operator-(CurveDivisor a, const CurveDivisor& b) {
    for (const auto& [p, n] : b.mult) a.add(p, -n);
    return a;
  }
  friend bool operator==(const CurveDivisor& a, const CurveDivisor& b) {
    return a.mult == b.mult;
  }

  std::string str() const {
    if (mult.empty()) return "0";
    std::string out;
    for (const auto& [p, n] : mult) {
      if (!out.empty()) out += " + ";
      out += std::to_string(n) + "(" + p.str() + ")";
    }
    return out;
  }
};

/// Sum of n_i * P_i under the group law.
template <class K>
CurvePoint<K> group_sum(const WeierstrassCurve<K>& e, const CurveDivisor<K>& d) {
  CurvePoint<K> acc = CurvePoint<K>::at_infinity();
  for (const auto& [p, n] : d.mult) acc = e.add(acc, e.scalar_mul(n, p));
  return acc;
}

/// Degree zero and trivial group-law sum: exactly the principal divisors.
template <class K>
bool is_principal(const WeierstrassCurve<K>& e, const CurveDivisor<K>& d) {
  return d.degree() == 0 && group_sum(e, d).is_infinity();
}

/// Formal rational combination of curve points.
template <class K>
struct QDivisor {
  std::map<CurvePoint<K>, Rational> mult;

  void add(const CurvePoint<K>& p, const Rational& r) {
    if (r.is_zero()) return;
    auto it = mult.find(p);
    if (it == mult.end()) {
      mult.emplace(p, r);
    } else if ((it->second += r).is_zero()) {
      mult.erase(it);
    }
  }

  Rational at(const CurvePoint<K>& p) const {
    auto it = mult.find(p);
    return it == mult.end() ? Rational(0) : it->second;
  }

  Rational degree() const {
    Rational d(0);
    for (const auto& [p, r] : mult) d += r;
    return d;
  }

  std::string str() const {
    if (mult.empty()) return "0";
    std::string out;
    for (const auto& [p, r] : mult) {
      if (!out.empty()) out += " + ";
      out += r.str() + "(" + p.str() + ")";
    }
    return out;
  }
};

/// Pointwise floor of d * D.
template <class K>
CurveDivisor<K> floor_divisor(const QDivisor<K>& qd, std::int64_t d) {
  CurveDivisor<K> out;
  for (const auto& [p, r] : qd.mult) out.add(p, (Rational(d) * r).floor_i64());
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& r);

/// Zero/pole divisor of a nonzero function, resolving every place over the
/// rationals. Throws if some zero or pole lives at a non-rational point (the
/// totals then cannot balance, which is detected) or if root extraction hits
/// its factoring limits.
CurveDivisor<Rational> divisor_of(const WeierstrassCurve<Rational>& e,
                                  const CurveFunction<Rational>& f);

}  // namespace sectionring
