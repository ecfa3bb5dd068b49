#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rootlace {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around mpq_class so that arithmetic
/// never leaks GMP expression templates into `auto` declarations.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(unsigned long v) : q_(v) {}       // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& v) : q_(v) {}    // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q" or "p" (optional sign on p). Throws std::invalid_argument
  /// for anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const { return Rational(::abs(q_)); }
  double to_double() const { return q_.get_d(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Power of two 2^e for e of either sign.
Rational pow2(int e);

}  // namespace rootlace
