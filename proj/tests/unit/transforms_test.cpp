#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rootlace/errors.hpp"
#include "rootlace/interlace.hpp"
#include "rootlace/transforms.hpp"

namespace rootlace {
namespace {

Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

const Polynomial kF({3, 4, 1});
const Polynomial kG({2, 1});

TEST(Theorem, CounterexampleNeedsGate) {
  const TransformParams p{0, 1, 1, 0};  // ad - bc = -1
  try {
    theorem_transform(kF, kG, p);
    FAIL() << "expected HypothesisViolation";
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.which(), std::vector<std::string>{"gate"});
  }
  const auto forced = theorem_transform(kF, kG, p, /*force=*/true);
  EXPECT_FALSE(forced.hypothesis_ok);
  EXPECT_EQ(forced.output, Polynomial({2, 4, 4, 1}));
  EXPECT_FALSE(forced.certificate.is_real_rooted);
  EXPECT_EQ(forced.certificate.distinct_real_roots, 1U);
}

TEST(Theorem, SatisfiedHypotheses) {
  const TransformParams p{1, 2, -1, 3};  // ad - bc = 3 + 2 = 5
  const auto res = theorem_transform(kF, kG, p);
  EXPECT_TRUE(res.hypothesis_ok);
  EXPECT_TRUE(res.violations.empty());
  EXPECT_EQ(res.output, combine(kF, kG, p.b, p.a, p.d, p.c));
  EXPECT_TRUE(res.certificate.is_real_rooted);
}

TEST(Theorem, ViolationNames) {
  const TransformParams p{1, 0, 0, 1};
  try {
    theorem_transform(kF, -kG, p);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.which(), std::vector<std::string>{"leading-sign"});
  }
  try {
    theorem_transform(kF, Polynomial({5, 1}), p);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.which(), std::vector<std::string>{"leadsto"});
  }
  EXPECT_THROW(theorem_transform(Polynomial({1, 0, 1}), kG, p), NotRealRooted);
  const auto forced = theorem_transform(kF, Polynomial({5, 1}), p, true);
  EXPECT_FALSE(forced.hypothesis_ok);
  EXPECT_EQ(forced.violations, std::vector<std::string>{"leadsto"});
}

TEST(Theorem, BoundaryFactorsOut) {
  // ad = bc with (d, c) = 2 (b, a): F = (bx + a)(f + 2g).
  const TransformParams p{1, 3, 2, 6};
  const auto res = theorem_transform(kF, kG, p);
  EXPECT_TRUE(res.certificate.is_real_rooted);
  EXPECT_TRUE(divmod(res.output, Polynomial({1, 3})).second.is_zero());
}

TEST(SumRz, Examples) {
  EXPECT_EQ(sum_rz(kF, kG).output, Polynomial({5, 5, 1}));
  EXPECT_EQ(sum_rz(kF, Polynomial({8, 6, 1})).output, Polynomial({11, 10, 2}));
  EXPECT_TRUE(sum_rz(kF, kG).certificate.is_real_rooted);
}

TEST(Corollary, Example) {
  const Polynomial f({1, 2, 1});
  const Polynomial g({1, 1});
  const auto res = corollary_abcd(f, g, {1, 1, 0, 1});
  EXPECT_EQ(res.output, Polynomial({1, 4, 4, 1}));
  EXPECT_TRUE(res.certificate.is_real_rooted);
  EXPECT_THROW(corollary_abcd(Polynomial({1, -3, 2}), Polynomial({1}), {1, 1, 0, 1}), NotPF);
}

TEST(PfLinearMap, Examples) {
  const std::vector<Rational> xs{1, 2, 1};
  EXPECT_EQ(pf_linear_map(xs, {1, 1, 0, 0}), (std::vector<Rational>{1, 3, 3, 1}));
  const std::vector<Rational> one{1};
  EXPECT_EQ(pf_linear_map(one, {0, 1, 0, 0}), (std::vector<Rational>{1, 0}));
  const std::vector<Rational> two{1, 1};
  EXPECT_EQ(pf_linear_map(two, {1, 0, 1, 1}), (std::vector<Rational>{0, 2, 2}));
}

TEST(PfLinearMap, Errors) {
  const std::vector<Rational> xs{1, 2, 1};
  EXPECT_THROW(pf_linear_map(xs, {0, 1, 1, 0}), GateViolation);
  const std::vector<Rational> not_pf{1, 1, 1};
  EXPECT_THROW(pf_linear_map(not_pf, {1, 1, 0, 0}), NotPF);
  EXPECT_THROW(pf_linear_map(xs, {1, -1, 0, 1}), NegativeOutput);
  EXPECT_THROW(pf_linear_map(std::vector<Rational>{}, {1, 1, 0, 0}), std::invalid_argument);
}

TEST(Orthogonal, ChebyshevAndHermite) {
  const std::vector<ThreeTermCoeffs> cheb(3, ThreeTermCoeffs{2, 0, 1});
  const auto t = orthogonal_sequence(cheb, 3);
  ASSERT_EQ(t.size(), 4U);
  EXPECT_EQ(t[0], Polynomial({1}));
  EXPECT_EQ(t[1], Polynomial({0, 2}));
  EXPECT_EQ(t[2], Polynomial({-1, 0, 4}));
  EXPECT_EQ(t[3], Polynomial({0, -4, 0, 8}));

  std::vector<ThreeTermCoeffs> herm;
  for (long k = 1; k <= 3; ++k) herm.push_back({2, 0, Rational(2 * (k - 1))});
  const auto h = orthogonal_sequence(herm, 3);
  EXPECT_EQ(h[2], Polynomial({-2, 0, 4}));
  EXPECT_EQ(h[3], Polynomial({0, -12, 0, 8}));
}

TEST(Orthogonal, SignViolation) {
  std::vector<ThreeTermCoeffs> bad(3, ThreeTermCoeffs{2, 0, 1});
  bad[2].c = -1;
  try {
    orthogonal_sequence(bad, 3);
    FAIL();
  } catch (const CoefficientSignViolation& e) {
    EXPECT_EQ(e.n(), 3U);
  }
  bad[2].c = 1;
  bad[1].a = 0;
  EXPECT_THROW(orthogonal_sequence(bad, 3), CoefficientSignViolation);
}

TEST(Simion, Examples) {
  EXPECT_EQ(simion_polynomial(std::vector<unsigned>{1, 1}), Polynomial({0, 1, 2}));
  EXPECT_EQ(simion_polynomial(std::vector<unsigned>{2}), Polynomial({0, 1, 1}));
  EXPECT_EQ(simion_polynomial(std::vector<unsigned>{}), Polynomial({1}));
}

TEST(Simion, AgreesWithEnumeration) {
  for (const auto& m : std::vector<std::vector<unsigned>>{{3}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1, 1}}) {
    const auto counts = oracle::composition_counts(m);
    const Polynomial p = simion_polynomial(m);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      EXPECT_EQ(p.coeff(k), Rational(static_cast<unsigned long>(counts[k])));
    }
  }
}

// Theorem outputs on random hypotheses-satisfying inputs are real-rooted.
TEST(TheoremProperty, RandomGatedInputs) {
  oracle::RationalGen gen(41);
  for (int trial = 0; trial < 120; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const auto merged = gen.distinct_sorted(2 * n - 1, -20, 20);
    std::vector<Rational> fr;
    std::vector<Rational> gr;
    for (std::size_t i = 0; i < merged.size(); ++i) (i % 2 == 0 ? fr : gr).push_back(merged[i]);
    const Polynomial f = Polynomial::from_roots(fr, q(3, 2));
    const Polynomial g = Polynomial::from_roots(gr, q(1, 3));
    TransformParams p{gen.rational(-5, 5), gen.rational(-5, 5), gen.rational(-5, 5), gen.rational(-5, 5)};
    if (p.gate().sign() < 0) std::swap(p.b, p.a);
    if (p.gate().sign() < 0) continue;
    const auto res = theorem_transform(f, g, p);
    EXPECT_TRUE(res.certificate.is_real_rooted) << res.output.to_string();
  }
}

}  // namespace
}  // namespace rootlace
