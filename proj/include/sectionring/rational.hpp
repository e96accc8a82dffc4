#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sectionring {

/// Exact rational number backed by GMP. Used for all lattice data, divisor
/// multiplicities and (by default) curve arithmetic.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}           // NOLINT: implicit by design
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Parses "p/q" or "p" with optional leading '-'. Returns nullopt on
  /// malformed input or zero denominator.
  static std::optional<Rational> parse(const std::string& s);

  std::string str() const;

  const mpq_class& q() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  /// Numerator / denominator as int64, throwing if out of range.
  std::int64_t num_i64() const { return to_i64(v_.get_num(), "numerator"); }
  std::int64_t den_i64() const { return to_i64(v_.get_den(), "denominator"); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }

  mpz_class floor_z() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return r;
  }
  mpz_class ceil_z() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return r;
  }
  std::int64_t floor_i64() const { return to_i64(floor_z(), "floor"); }
  std::int64_t ceil_i64() const { return to_i64(ceil_z(), "ceil"); }

  /// Fractional part in [0, 1).
  Rational frac() const { return *this - Rational(floor_z()); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }

 private:
  static std::int64_t to_i64(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p())
      throw std::overflow_error(std::string("Rational: ") + what + " out of int64 range");
    return static_cast<std::int64_t>(z.get_si());
  }

  mpq_class v_;
};

inline Rational rational_floor(const Rational& x) { return Rational(x.floor_z()); }
inline Rational rational_ceil(const Rational& x) { return Rational(x.ceil_z()); }

}  // namespace sectionring
