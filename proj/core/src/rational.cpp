#include "rootlace/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rootlace {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_digits(den)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!is_digits(digits)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  // mpz_class rejects a leading '+'.
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow2(int e) {
  mpz_class p = 1;
  if (e >= 0) {
    p <<= static_cast<mp_bitcnt_t>(e);
    return Rational(p);
  }
  p <<= static_cast<mp_bitcnt_t>(-e);
  return Rational(mpz_class(1), p);
}

}  // namespace rootlace
