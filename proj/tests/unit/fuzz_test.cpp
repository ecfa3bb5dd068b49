#include <gtest/gtest.h>

#include "rootlace/fuzz.hpp"
#include "rootlace/interlace.hpp"

namespace rootlace {
namespace {

TEST(Fuzz, InstancesAreDeterministic) {
  FuzzConfig cfg;
  cfg.seed = 99;
  const auto a = make_instance(cfg, 17);
  const auto b = make_instance(cfg, 17);
  EXPECT_EQ(a.f, b.f);
  EXPECT_EQ(a.g, b.g);
  EXPECT_EQ(a.params.gate(), b.params.gate());
  cfg.seed = 100;
  EXPECT_FALSE(make_instance(cfg, 17).f == a.f);
}

TEST(Fuzz, InstancesSatisfyHypotheses) {
  FuzzConfig cfg;
  cfg.seed = 5;
  for (std::size_t i = 0; i < 60; ++i) {
    const auto inst = make_instance(cfg, i);
    EXPECT_EQ(inst.f.leading_sign(), inst.g.leading_sign());
    EXPECT_GE(inst.params.gate().sign(), 0);
    EXPECT_EQ(classify(inst.g, inst.f).kind == InterlaceKind::kNeither, false) << i;
    EXPECT_EQ(inst.relation, i % 2 == 0 ? InterlaceKind::kInterlaces : InterlaceKind::kAlternatesLeft);
  }
}

TEST(Fuzz, BoundaryGateIsZero) {
  FuzzConfig cfg;
  cfg.boundary = true;
  cfg.seed = 3;
  for (std::size_t i = 0; i < 40; ++i) EXPECT_TRUE(make_instance(cfg, i).params.gate().is_zero());
}

TEST(Fuzz, AllKindsPass) {
  for (auto kind : {FuzzKind::kTheorem, FuzzKind::kCorollary31, FuzzKind::kCorollary32}) {
    FuzzConfig cfg;
    cfg.kind = kind;
    cfg.count = 40;
    cfg.seed = 8;
    const auto summary = run_fuzz(cfg);
    EXPECT_EQ(summary.passed, 40U) << to_string(kind);
    EXPECT_TRUE(summary.failures.empty());
  }
}

TEST(Fuzz, KindNames) {
  EXPECT_EQ(parse_fuzz_kind("corollary31"), FuzzKind::kCorollary31);
  EXPECT_FALSE(parse_fuzz_kind("lemma").has_value());
  EXPECT_EQ(to_string(FuzzKind::kCorollary32), "corollary32");
  FuzzConfig bad;
  bad.min_degree = 0;
  EXPECT_THROW(make_instance(bad, 0), std::invalid_argument);
}

}  // namespace
}  // namespace rootlace
