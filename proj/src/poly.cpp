#include "sectionring/poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace sectionring {

std::vector<mpz_class> primitive_integer(const Poly<Rational>& p) {
  if (p.is_zero()) return {};
  mpz_class common_den(1);
  for (const Rational& r : p.c) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), r.den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(p.c.size());
  mpz_class content(0);
  for (const Rational& r : p.c) {
    mpz_class v = r.num() * (common_den / r.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  for (mpz_class& v : out) v /= content;
  return out;
}

namespace {

// Positive divisors of |n|, built from trial division by primes <= 10^5.
// A composite cofactor beyond that range contributes only itself (times the
// small-divisor combinations), so the list can be incomplete for huge inputs.
std::vector<mpz_class> divisors_best_effort(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  auto take = [&](const mpz_class& p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  take(mpz_class(2));
  for (long d = 3; d <= 100000; d += 2) {
    if (mpz_class(d) * d > n) break;
    take(mpz_class(d));
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<mpz_class> out{mpz_class(1)};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    if (base * static_cast<std::size_t>(e + 1) > 200000)
      throw std::runtime_error("rational_roots: divisor list too large");
    mpz_class pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly<Rational>& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<mpz_class> z = primitive_integer(p);
  std::vector<Rational> roots;

  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 == z.size()) return roots;  // c * x^k

  const std::vector<mpz_class> nums = divisors_best_effort(z[low]);
  const std::vector<mpz_class> dens = divisors_best_effort(z.back());
  for (const mpz_class& a : nums) {
    for (const mpz_class& b : dens) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rational cand(sign * a, b);
        if (p.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace sectionring
