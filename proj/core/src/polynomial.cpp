#include "rootlace/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rootlace {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  trim_int(p);
  if (p.empty()) return;
  mpz_class content = 0;
  for (const auto& c : p) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) return;
  }
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// lc(b)^k * a mod b, computed fraction-free one leading term at a time.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

Polynomial from_int(const IntPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return Polynomial(std::move(out));
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots, const Rational& lead) {
  Polynomial p = constant(lead);
  for (const auto& r : roots) p = p * Polynomial({-r, 1});
  return p;
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  const Rational inv = Rational(1) / leading();
  return out *= inv;
}

bool Polynomial::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.sign() >= 0; });
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = Rational(1) / bc.back();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational q = rem[i] * inv_lead;
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Polynomial combine(const Polynomial& p, const Polynomial& q, const Rational& b,
                   const Rational& a, const Rational& d, const Rational& c) {
  return Polynomial({a, b}) * p + Polynomial({c, d}) * q;
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial shift(const Polynomial& p, const Rational& u) {
  if (u.is_zero() || p.is_constant()) return p;
  // In-place Taylor shift (n passes of synthetic division by x - u).
  std::vector<Rational> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += u * c[j + 1];
  }
  return Polynomial(std::move(c));
}

Polynomial reciprocal(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("reciprocal of zero undefined");
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return Polynomial(std::move(c));
}

std::vector<mpz_class> primitive_integer_coeffs(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    const mpz_class den = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
  make_primitive(out);
  return out;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  IntPoly a = primitive_integer_coeffs(p);
  IntPoly b = primitive_integer_coeffs(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Polynomial::constant(1);
    IntPoly r = pseudo_remainder(std::move(a), b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return from_int(a).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of zero undefined");
  if (p.is_constant()) return Polynomial::constant(1);
  return exact_div(p, gcd(p, derivative(p))).monic();
}

Rational evaluate(const Polynomial& p, const Rational& x0) {
  const auto& c = p.coeffs();
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x0;
    acc += c[i];
  }
  return acc;
}

int sign_at(const Polynomial& p, const Rational& x0) { return evaluate(p, x0).sign(); }

Polynomial parse_polynomial(std::span<const std::string> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& s : coeffs) out.push_back(Rational::parse(s));
  return Polynomial(std::move(out));
}

std::vector<std::string> coeff_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

}  // namespace rootlace
