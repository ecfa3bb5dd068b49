#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "rootlace/polynomial.hpp"
#include "rootlace/rational.hpp"

namespace rootlace {
namespace {

Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-6/4"), q(-3, 2));
  EXPECT_EQ(Rational::parse("+7/1"), Rational(7));
  EXPECT_EQ(q(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(12).to_string(), "12");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "one", "1.5", "1/0", "1/", "/2", "1/-2", "--1", "1 2", "0x10"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Polynomial, CanonicalForm) {
  const Polynomial p({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1U);
  EXPECT_EQ(p.coeffs().size(), 2U);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_FALSE(Polynomial().degree().has_value());
  EXPECT_EQ(Polynomial({3, 4, 1}).to_string(), "x^2 + 4x + 3");
}

TEST(Polynomial, Arithmetic) {
  const Polynomial f({3, 4, 1});
  const Polynomial g({2, 1});
  EXPECT_EQ(f * g, Polynomial({6, 11, 6, 1}));
  EXPECT_EQ(f - f, Polynomial());
  EXPECT_EQ(f + g, Polynomial({5, 5, 1}));
  const auto [quo, rem] = divmod(f, g);
  EXPECT_EQ(quo, Polynomial({2, 1}));
  EXPECT_EQ(rem, Polynomial({-1}));
  EXPECT_THROW(divmod(f, Polynomial()), std::exception);
  EXPECT_THROW(exact_div(f, g), std::domain_error);
  EXPECT_EQ(exact_div(f, Polynomial({1, 1})), Polynomial({3, 1}));
}

TEST(Polynomial, CombineMatchesDefinition) {
  const Polynomial f({3, 4, 1});
  const Polynomial g({2, 1});
  // (0x + 1) f + (1x + 0) g = f + x g
  EXPECT_EQ(combine(f, g, 0, 1, 1, 0), Polynomial({3, 6, 2}));
  // x f + g: the counterexample output.
  EXPECT_EQ(combine(f, g, 1, 0, 0, 1), Polynomial({2, 4, 4, 1}));
}

TEST(Polynomial, DerivativeAndEvaluate) {
  const Polynomial p({-2, 0, 1});
  EXPECT_EQ(derivative(p), Polynomial({0, 2}));
  EXPECT_EQ(derivative(Polynomial({5})), Polynomial());
  EXPECT_EQ(evaluate(p, 3), Rational(7));
  EXPECT_EQ(sign_at(p, q(1, 2)), -1);
}

TEST(Polynomial, ShiftAndReciprocal) {
  const Polynomial p({3, 4, 1});
  EXPECT_EQ(shift(p, -1), Polynomial({0, 2, 1}));
  EXPECT_EQ(reciprocal(p), Polynomial({1, 4, 3}));
  // A root at zero drops the degree of the reciprocal.
  EXPECT_EQ(reciprocal(Polynomial({0, 1, 1})), Polynomial({1, 1}));
  EXPECT_THROW(reciprocal(Polynomial()), std::invalid_argument);
}

TEST(Polynomial, GcdAndSquarefree) {
  const Polynomial a = Polynomial({1, 1}) * Polynomial({1, 1}) * Polynomial({-2, 1});
  const Polynomial b = Polynomial({1, 1}) * Polynomial({3, 1});
  EXPECT_EQ(gcd(a, b), Polynomial({1, 1}));
  EXPECT_EQ(gcd(a, Polynomial()), a.monic());
  EXPECT_THROW(gcd(Polynomial(), Polynomial()), std::invalid_argument);
  EXPECT_EQ(squarefree_part(a), (Polynomial({1, 1}) * Polynomial({-2, 1})));
  EXPECT_EQ(squarefree_part(Polynomial({7})), Polynomial({1}));
  EXPECT_THROW(squarefree_part(Polynomial()), std::invalid_argument);
}

TEST(Polynomial, FromRootsAndIntegerImage) {
  const std::vector<Rational> roots{q(-1, 2), Rational(3)};
  const Polynomial p = Polynomial::from_roots(roots, 2);
  EXPECT_EQ(p, Polynomial({-3, -5, 2}));
  const auto z = primitive_integer_coeffs(Polynomial({q(-3, 4), q(-5, 4), q(1, 2)}));
  ASSERT_EQ(z.size(), 3U);
  EXPECT_EQ(z[0], -3);
  EXPECT_EQ(z[1], -5);
  EXPECT_EQ(z[2], 2);
}

TEST(Polynomial, ParseList) {
  const std::vector<std::string> ok{"3", "4", "1"};
  EXPECT_EQ(parse_polynomial(ok), Polynomial({3, 4, 1}));
  const std::vector<std::string> bad{"3", "4", "one"};
  EXPECT_THROW(parse_polynomial(bad), std::invalid_argument);
  EXPECT_EQ(coeff_strings(Polynomial({q(1, 2), -1})), (std::vector<std::string>{"1/2", "-1"}));
}

TEST(PolynomialProperty, GcdDividesBoth) {
  oracle::RationalGen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial common = gen.poly(static_cast<std::size_t>(gen.integer(0, 2)));
    const Polynomial a = common * gen.poly(static_cast<std::size_t>(gen.integer(0, 3)));
    const Polynomial b = common * gen.poly(static_cast<std::size_t>(gen.integer(0, 3)));
    const Polynomial h = gcd(a, b);
    EXPECT_TRUE(divmod(a, h).second.is_zero());
    EXPECT_TRUE(divmod(b, h).second.is_zero());
    EXPECT_TRUE(divmod(h, common.monic()).second.is_zero());
  }
}

TEST(PolynomialProperty, ShiftGroupLawAndReciprocalInvolution) {
  oracle::RationalGen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = gen.poly(static_cast<std::size_t>(gen.integer(1, 6)));
    const Rational u = gen.rational(-5, 5);
    const Rational v = gen.rational(-5, 5);
    EXPECT_EQ(shift(shift(p, u), v), shift(p, u + v));
    EXPECT_EQ(evaluate(shift(p, u), v), evaluate(p, u + v));
    if (p.coeff(0).is_zero()) p += Polynomial({1});
    EXPECT_EQ(reciprocal(reciprocal(p)), p);
  }
}

}  // namespace
}  // namespace rootlace
