#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootlace/rational.hpp"

namespace rootlace {

/// Dense univariate polynomial over Q, coefficients in ascending powers.
///
/// Always canonical: the stored leading coefficient is nonzero, and the zero
/// polynomial is the empty coefficient list (it has no degree).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({0, 1}); }
  /// c * prod (x - root).
  static Polynomial from_roots(std::span<const Rational> roots, const Rational& lead = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;
  int leading_sign() const { return is_zero() ? 0 : coeffs_.back().sign(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiply by x^k.
  Polynomial shifted_up(std::size_t k) const;
  /// Divide by the leading coefficient (zero stays zero).
  Polynomial monic() const;
  bool has_nonnegative_coeffs() const;

  /// Human-readable form such as "x^3 + 4x^2 - 1/2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by b over Q; throws on b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// a / b; throws std::domain_error unless the division is exact.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// (b*x + a)*p + (d*x + c)*q.
Polynomial combine(const Polynomial& p, const Polynomial& q, const Rational& b,
                   const Rational& a, const Rational& d, const Rational& c);

Polynomial derivative(const Polynomial& p);

/// p(x + u), by repeated synthetic division.
Polynomial shift(const Polynomial& p, const Rational& u);

/// x^deg(p) * p(1/x). Throws std::invalid_argument on the zero polynomial.
Polynomial reciprocal(const Polynomial& p);

/// Monic gcd over Q, via a primitive pseudo-remainder sequence on integer
/// images. Throws std::invalid_argument if both inputs are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Monic p / gcd(p, p'). Throws std::invalid_argument on zero.
Polynomial squarefree_part(const Polynomial& p);

/// Horner evaluation.
Rational evaluate(const Polynomial& p, const Rational& x0);

/// Sign of p(x0).
int sign_at(const Polynomial& p, const Rational& x0);

/// Primitive integer polynomial with the same roots and the same leading sign.
std::vector<mpz_class> primitive_integer_coeffs(const Polynomial& p);

/// Parses an ascending coefficient list such as {"3", "4", "1"}.
Polynomial parse_polynomial(std::span<const std::string> coeffs);
std::vector<std::string> coeff_strings(const Polynomial& p);

}  // namespace rootlace
