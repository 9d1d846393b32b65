#include <gtest/gtest.h>

#include "haarpt/bounds.hpp"

using namespace haarpt;

namespace {

Rational q(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST(LpBrute, Examples) {
  auto a = lp_brute(SubspaceSpec(2, 2, 2), 2);
  EXPECT_EQ(a.value, 32);
  EXPECT_EQ(a.argmax, (LPTriple{2, 2, 1}));
  auto b = lp_brute(SubspaceSpec(2, 8, 2), 3);
  EXPECT_EQ(b.value, 4096);
  EXPECT_EQ(b.argmax, (LPTriple{2, 3, 1}));
  EXPECT_EQ(lp_brute(SubspaceSpec(1, 1, 1), 3).value, 1);
}

TEST(LpBrute, AgreesWithPlainEnumeration) {
  for (long da = 1; da <= 5; ++da)
    for (long db = da; db <= 6; ++db)
      for (long r = 1; r <= 9; r += 2)
        for (int k = 1; k <= 6; ++k) {
          if (r > da * db) continue;
          BigInt best = 0;
          for (int x = 1; x <= k; ++x)
            for (int y = 1; y <= k; ++y)
              for (int z = 1; z <= k; ++z)
                if (LPTriple{x, y, z}.valid(k)) {
                  BigInt v = ipow(BigInt(da), x) * ipow(BigInt(db), y) * ipow(BigInt(r), z);
                  if (v > best) best = v;
                }
          EXPECT_EQ(lp_brute(SubspaceSpec(da, db, r), k).value, best);
        }
}

TEST(LpDual, Examples) {
  auto a = lp_dual_bound(SubspaceSpec(2, 2, 2), 2);
  EXPECT_EQ(a.value, 32);
  EXPECT_EQ(a.branch, Branch::kRankAboveRatio);
  EXPECT_TRUE(a.exact);
  auto b = lp_dual_bound(SubspaceSpec(2, 8, 2), 3);
  EXPECT_EQ(b.value, 8192);
  EXPECT_EQ(b.branch, Branch::kRankBelowRatio);
  EXPECT_EQ(lp_dual_bound(SubspaceSpec(1, 1, 1), 4).value, 1);
}

TEST(LpDual, OddOrderReportsSquaredValue) {
  // (d_A d_B)^{5/2} r^{3/2} at d_A=d_B=2, r=3: squared 4^5·27 = 27648
  auto rep = lp_dual_bound(SubspaceSpec(2, 2, 3), 3);
  EXPECT_EQ(rep.squared, 27648);
  EXPECT_FALSE(rep.exact);
  EXPECT_EQ(rep.value, 167);  // sqrt(27648) = 166.27...
}

TEST(LpDual, WeakDualityOnGrid) {
  for (long da = 1; da <= 8; ++da)
    for (long db = da; db <= 8; ++db)
      for (long r = 1; r <= std::min(da * db, 20L); ++r)
        for (int k = 1; k <= 10; ++k) {
          SubspaceSpec s(da, db, r);
          EXPECT_LE(lp_brute(s, k).value, lp_dual_bound(s, k).value);
        }
}

TEST(ExplicitBound, UnitExampleWithoutHypothesis) {
  SubspaceSpec unit(1, 1, 1);
  EXPECT_EQ(explicit_moment_bound(unit, 1, false), 3);
  EXPECT_GE(explicit_moment_bound(unit, 1, false), exact_moment(unit, 1));
  EXPECT_THROW(explicit_moment_bound(unit, 1), UsageError);
}

TEST(ExplicitBound, DominatesExactAtEightEightSixteen) {
  SubspaceSpec s(8, 8, 16);
  ASSERT_TRUE(alpha_bound_hypothesis(s, 4));
  EXPECT_GE(explicit_moment_bound(s, 4), exact_moment(s, 4));
}

TEST(ExplicitBound, MonotoneInRank) {
  for (long r = 2; r <= 16; r *= 2) {
    SubspaceSpec lo(4, 8, r), hi(4, 8, 2 * r);
    EXPECT_LT(explicit_moment_bound(lo, 2, false), explicit_moment_bound(hi, 2, false));
  }
}

TEST(ExplicitBound, DominatesExactOnSmallGrid) {
  int checked = 0;
  for (long da = 1; da <= 6; ++da)
    for (long db = da; db <= 6; ++db)
      for (long r = 1; r <= std::min(12L, da * db); ++r)
        for (int k = 1; k <= 6; ++k) {
          SubspaceSpec s(da, db, r);
          if (!alpha_bound_hypothesis(s, k) || s.d() < k) continue;
          EXPECT_LE(exact_moment(s, k), explicit_moment_bound(s, k)) << da << " " << db << " " << r << " " << k;
          ++checked;
        }
  EXPECT_GT(checked, 100);
}

TEST(ExplicitBound, HypothesisChecks) {
  EXPECT_TRUE(alpha_bound_hypothesis(SubspaceSpec(4, 4, 4), 1));
  EXPECT_FALSE(alpha_bound_hypothesis(SubspaceSpec(4, 4, 4), 2));
  EXPECT_TRUE(alpha_bound_hypothesis(SubspaceSpec(4, 4, 6), 2));
  EXPECT_THROW(explicit_moment_bound(SubspaceSpec(4, 4, 4), 2), UsageError);
}

TEST(ThmMainBounds, BranchExamples) {
  auto a = thm_main_bounds(SubspaceSpec(4, 4, 4));
  EXPECT_EQ(a.branch, Branch::kRankAboveRatio);
  EXPECT_FALSE(a.k_from_rule);
  EXPECT_EQ(a.k, 2);
  EXPECT_EQ(bound_report(SubspaceSpec(2, 8, 2), 2).branch, Branch::kRankBelowRatio);
  EXPECT_THROW(thm_main_bounds(SubspaceSpec(2, 8, 2)), UsageError);
}

TEST(ThmMainBounds, ScaleExample) {
  auto rep = thm_main_bounds(SubspaceSpec(16, 16, 16));
  EXPECT_DOUBLE_EQ(rep.scale, 64.0);
  EXPECT_EQ(rep.scale_squared, 4096);
  EXPECT_DOUBLE_EQ(rep.norm_scale, 0.25);
  // m = 16: (m/2)^{2/3} = 4, largest even k below it is 2
  EXPECT_EQ(rep.k, 2);
  EXPECT_TRUE(rep.k_from_rule);
  ASSERT_TRUE(rep.exact_moment.has_value());
  EXPECT_EQ(*rep.exact_moment, 16);
  ASSERT_TRUE(rep.moment_root.has_value());
  EXPECT_DOUBLE_EQ(*rep.moment_root, 4.0);
  EXPECT_EQ(rep.moment_root_source, "exact");
}

TEST(ThmMainBounds, SecondBranchScale) {
  auto rep = thm_main_bounds(SubspaceSpec(4, 64, 8));
  EXPECT_EQ(rep.branch, Branch::kRankBelowRatio);
  EXPECT_DOUBLE_EQ(rep.scale, 64.0);
  EXPECT_EQ(rep.scale_squared, 4096);
}

TEST(ThmMainBounds, TailShape) {
  auto rep = thm_main_bounds(SubspaceSpec(16, 16, 16));
  EXPECT_DOUBLE_EQ(rep.tail_exponent, 4.0);
  EXPECT_NEAR(rep.tail_prefactor, std::pow(16.0, 16.0 / 3.0), 1e-6 * rep.tail_prefactor);
  EXPECT_NEAR(rep.tail_shape(2.0), rep.tail_prefactor / 16.0, 1e-9 * rep.tail_prefactor);
}

TEST(KSelection, Rule) {
  EXPECT_FALSE(select_moment_order(4).has_value());
  EXPECT_FALSE(select_moment_order(5).has_value());
  EXPECT_EQ(select_moment_order(6), 2);
  EXPECT_EQ(select_moment_order(16), 2);  // 4k³ < 256 fails at k = 4 (equality)
  EXPECT_EQ(select_moment_order(17), 4);
  EXPECT_EQ(select_moment_order(29), 4);  // k = 6 needs m² > 864
  EXPECT_EQ(select_moment_order(30), 6);
}

TEST(WeakMult, Examples) {
  auto a = weak_mult_exponent(SubspaceSpec(1L << 15, 1L << 15, 8));
  EXPECT_DOUBLE_EQ(a.epsilon, 1.0 / 3.0);
  EXPECT_NEAR(a.exponent, 1.0 / 6.0, 1e-15);
  EXPECT_FALSE(a.vacuous);
  EXPECT_NEAR(a.threshold, std::pow(std::pow(2.0, -27.0), 1.0 / 6.0), 1e-15);

  auto b = weak_mult_exponent(SubspaceSpec(1L << 10, 1L << 10, 4));
  EXPECT_DOUBLE_EQ(b.epsilon, 0.5);
  EXPECT_DOUBLE_EQ(b.exponent, 0.0);
  EXPECT_TRUE(b.vacuous);

  auto c = weak_mult_exponent(SubspaceSpec(1L << 9, 1L << 20, 2));
  EXPECT_EQ(c.branch, Branch::kRankBelowRatio);
  EXPECT_DOUBLE_EQ(c.epsilon, 1.0);
  EXPECT_DOUBLE_EQ(c.exponent, 0.0);
  EXPECT_TRUE(c.vacuous);
}

TEST(WeakMult, UndefinedDimensions) {
  EXPECT_THROW(weak_mult_exponent(SubspaceSpec(2, 2, 4)), UsageError);
  EXPECT_THROW(weak_mult_exponent(SubspaceSpec(1, 8, 1)), UsageError);
}

TEST(Holder, Examples) {
  EXPECT_EQ(holder_exponent(q(1, 2), Rational(2)), q(1, 4));
  EXPECT_EQ(holder_exponent(q(1, 2), std::nullopt), q(1, 2));
  EXPECT_LT(holder_exponent(Rational(1), q(1000001, 1000000)), q(1, 1000000));
  EXPECT_THROW(holder_exponent(q(1, 2), Rational(1)), UsageError);
  EXPECT_THROW(holder_exponent(Rational(0), Rational(2)), UsageError);
}

TEST(EntropyFloor, Examples) {
  auto a = entropy_floor(SubspaceSpec(1024, 1024, 1024));
  EXPECT_DOUBLE_EQ(a.leading, 5.0);
  EXPECT_DOUBLE_EQ(a.floor, -3.0);
  EXPECT_TRUE(a.vacuous);
  auto b = entropy_floor(SubspaceSpec(4096, 1L << 20, 2));
  EXPECT_EQ(b.branch, Branch::kRankBelowRatio);
  EXPECT_DOUBLE_EQ(b.leading, 12.0);
  EXPECT_DOUBLE_EQ(b.floor, 4.0);
  EXPECT_FALSE(b.vacuous);
  EXPECT_DOUBLE_EQ(entropy_floor(SubspaceSpec(3, 5, 15)).leading, 0.0);
}
