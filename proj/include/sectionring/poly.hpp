#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sectionring/rational.hpp"

namespace sectionring {

/// Dense univariate polynomial over an exact field K. Trailing zero
/// coefficients are trimmed, so deg() == -1 exactly for the zero polynomial.
template <class K>
struct Poly {
  std::vector<K> c;  // c[i] multiplies x^i

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(K(1)); }
  static Poly x() { return Poly({K(0), K(1)}); }
  static Poly constant(const K& k) { return Poly(std::vector<K>{k}); }

  std::int64_t deg() const { return static_cast<std::int64_t>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const K& lead() const {
    if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
    return c.back();
  }
  K at(std::int64_t i) const {
    return i >= 0 && i < static_cast<std::int64_t>(c.size()) ? c[static_cast<std::size_t>(i)]
                                                             : K(0);
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  K eval(const K& x0) const {
    K acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x0 + c[i];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> out(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = out[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = out[i] + b.c[i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> out(std::max(a.c.size(), b.c.size()), K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = out[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = out[i] - b.c[i];
    return Poly(std::move(out));
  }
  Poly operator-() const {
    Poly out = *this;
    for (K& k : out.c) k = -k;
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> out(a.c.size() + b.c.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
    return Poly(std::move(out));
  }
  friend Poly operator*(const K& s, const Poly& p) {
    Poly out = p;
    for (K& k : out.c) k = s * k;
    out.trim();
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder with deg(r) < deg(b).
  static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    std::vector<K> q(a.deg() >= b.deg() ? static_cast<std::size_t>(a.deg() - b.deg()) + 1 : 0,
                     K(0));
    const K inv_lead = K(1) / b.lead();
    while (!a.is_zero() && a.deg() >= b.deg()) {
      std::int64_t shift = a.deg() - b.deg();
      K factor = a.lead() * inv_lead;
      q[static_cast<std::size_t>(shift)] = factor;
      for (std::size_t i = 0; i < b.c.size(); ++i) {
        std::size_t k = i + static_cast<std::size_t>(shift);
        a.c[k] = a.c[k] - factor * b.c[i];
      }
      a.trim();
    }
    return {Poly(std::move(q)), std::move(a)};
  }

  /// Coefficients of p(x0 + s) as a polynomial in s.
  Poly shifted(const K& x0) const {
    Poly rem = *this;
    std::vector<K> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      // synthetic division by (x - x0); remainder is the next coefficient
      K carry(0);
      for (std::size_t j = rem.c.size(); j-- > 0;) {
        K tmp = rem.c[j];
        rem.c[j] = carry;
        carry = tmp + carry * x0;
      }
      out.push_back(carry);
      rem.trim();
    }
    return Poly(std::move(out));
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (i == 0 || !(c[i] == K(1))) {
        out += c[i].str();
        if (i >= 1) out += "*";
      }
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }
};

template <class K>
Poly<K> monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  return (K(1) / p.lead()) * p;
}

template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = Poly<K>::divmod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, std::int64_t e) {
  Poly<K> out = Poly<K>::one();
  for (std::int64_t i = 0; i < e; ++i) out = out * p;
  return out;
}

/// Integer-coefficient image of a rational polynomial: scaled by the common
/// denominator, then divided by the content. Zero polynomial maps to {}.
std::vector<mpz_class> primitive_integer(const Poly<Rational>& p);

/// All rational roots, each listed once. Candidates come from divisor pairs
/// of the primitive polynomial's outer coefficients; divisors are enumerated
/// from trial division up to 10^5, keeping any remaining cofactor as an
/// extra candidate, so a root with a huge prime factor outside that range
/// can be missed. Callers downstream cross-check totals and complain loudly.
std::vector<Rational> rational_roots(const Poly<Rational>& p);

}  // namespace sectionring
