#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sectionring/rational.hpp"

namespace sectionring {

/// Prime field element with a process-wide runtime modulus. The modulus is
/// set once (before any element is created) and stays fixed; this keeps the
/// type trivially copyable so it can drop into the templated curve stack.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long n) { v_ = norm(n % modulus()); }  // NOLINT: implicit by design

  static void set_modulus(std::int64_t p) {
    if (p < 5) throw std::invalid_argument("Fp: modulus must be a prime >= 5");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("Fp: modulus is not prime");
    modulus_ref() = p;
  }
  static std::int64_t modulus() {
    if (modulus_ref() == 0) throw std::logic_error("Fp: modulus not set");
    return modulus_ref();
  }

  static Fp from_rational(const Rational& r) {
    mpz_class p(static_cast<long>(modulus()));
    mpz_class n = r.num() % p;
    mpz_class d = r.den() % p;
    if (d == 0) throw std::domain_error("Fp: denominator divisible by the modulus");
    Fp out;
    out.v_ = norm(n.get_si());
    return out / Fp(d.get_si());
  }

  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return std::to_string(v_); }

  Fp operator-() const { return make(v_ == 0 ? 0 : modulus() - v_); }
  Fp& operator+=(Fp o) { v_ += o.v_; if (v_ >= modulus()) v_ -= modulus(); return *this; }
  Fp& operator-=(Fp o) { v_ -= o.v_; if (v_ < 0) v_ += modulus(); return *this; }
  Fp& operator*=(Fp o) {
    v_ = static_cast<std::int64_t>(static_cast<__int128>(v_) * o.v_ % modulus());
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid
    std::int64_t a = v_, b = modulus(), x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return make(norm(x0));
  }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
  friend bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

 private:
  static std::int64_t& modulus_ref() {
    static std::int64_t m = 0;
    return m;
  }
  static std::int64_t norm(std::int64_t x) {
    std::int64_t m = modulus();
    x %= m;
    return x < 0 ? x + m : x;
  }
  static Fp make(std::int64_t v) { Fp f; f.v_ = v; return f; }

  std::int64_t v_;
};

/// Field adapters used by the templated curve stack.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static std::string str(const Rational& x) { return x.str(); }
  static bool less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct FieldOps<Fp> {
  static Fp from_rational(const Rational& r) { return Fp::from_rational(r); }
  static bool is_zero(Fp x) { return x.is_zero(); }
  static std::string str(Fp x) { return x.str(); }
  static bool less(Fp a, Fp b) { return a < b; }
};

}  // namespace sectionring
