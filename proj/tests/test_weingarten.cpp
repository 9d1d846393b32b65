#include <gtest/gtest.h>

#include "haarpt/weingarten.hpp"
#include "oracle_values.hpp"

using namespace haarpt;

namespace {

Rational q(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST(WgExact, Examples) {
  for (long d = 1; d <= 5; ++d) EXPECT_EQ(wg_exact(CycleType{1}, d).value, q(1, d));
  for (long d = 2; d <= 6; ++d) {
    EXPECT_EQ(wg_exact(CycleType{2}, d).value, q(-1, d * (d * d - 1)));
    EXPECT_EQ(wg_exact(CycleType{1, 1}, d).value, q(1, d * d - 1));
  }
}

TEST(WgExact, RejectsSmallDimension) {
  EXPECT_THROW(wg_exact(CycleType{1, 1, 1}, 2), UsageError);
  EXPECT_THROW(wg_cycle_formula(3, 2), UsageError);
}

TEST(WgExact, MatchesGramInverseOracle) {
  for (const auto& row : oracle::kWeingarten) {
    CycleType mu(row.type);
    EXPECT_EQ(wg_exact(mu, row.d).value, make_rational(BigInt(row.value.num), BigInt(row.value.den)))
        << row.k << " " << row.d << " " << mu.to_string();
  }
}

TEST(WgExact, ClassFunctionOnS4) {
  // evaluate per explicit permutation and compare across each class
  std::map<CycleType, Rational> seen;
  for (const auto& p : enumerate_sk(4)) {
    Rational sum = 0;
    for (const auto& lam : partitions_of(4)) {
      BigInt f = syt_count(lam);
      sum += make_rational(BigInt(f * f * mn_character(lam, cycle_type(p)).value), schur_dim(lam, 5));
    }
    sum /= 576;
    auto [it, fresh] = seen.emplace(cycle_type(p), sum);
    if (!fresh) {
      EXPECT_EQ(it->second, sum);
    }
    EXPECT_EQ(wg_exact(p, 5).value, sum);
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(WgExact, SignAlternatesWithDistance) {
  for (int k = 1; k <= 5; ++k)
    for (long d = k; d <= k + 3; ++d)
      for (const auto& mu : cycle_types_of(k)) {
        int expected = (k - mu.length()) % 2 ? -1 : 1;
        EXPECT_EQ(sgn(wg_exact(mu, d).value), expected) << mu.to_string() << " d=" << d;
      }
}

TEST(WgCycleFormula, Examples) {
  EXPECT_EQ(wg_cycle_formula(1, 7).value, q(1, 7));
  EXPECT_EQ(wg_cycle_formula(2, 3).value, q(-1, 24));
  EXPECT_EQ(wg_cycle_formula(3, 3).value, q(1, 60));
}

TEST(WgCycleFormula, AgreesWithCharacterFormula) {
  for (int k = 1; k <= 6; ++k)
    for (long d = k; d <= k + 3; ++d)
      EXPECT_EQ(wg_exact(CycleType{k}, d).value, wg_cycle_formula(k, d).value) << k << " " << d;
}

TEST(GramMatrix, Examples) {
  auto g1 = gram_matrix(1, 4);
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_EQ(g1.at(0, 0), 1);
  auto g2 = gram_matrix(2, 3);
  EXPECT_EQ(g2.at(0, 0), 1);
  EXPECT_EQ(g2.at(0, 1), q(1, 3));
  EXPECT_EQ(g2.at(1, 0), q(1, 3));
  EXPECT_EQ(g2.at(1, 1), 1);
  auto g3 = gram_matrix(3, 5);
  auto cyc = Permutation::from_cycles(3, {{1, 2, 3}});
  auto col = static_cast<std::size_t>(std::find(g3.perms.begin(), g3.perms.end(), cyc) - g3.perms.begin());
  EXPECT_EQ(g3.at(0, col), q(1, 25));
  EXPECT_THROW(gram_matrix(7, 7), InfeasibleError);
}

TEST(GramMatrix, SymmetricWithUnitDiagonal) {
  auto g = gram_matrix(4, 3);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.at(i, i), 1);
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(g.at(i, j), g.at(j, i));
  }
}

TEST(GramInverse, Examples) {
  EXPECT_TRUE(verify_gram_inverse(2, 2).identity);
  EXPECT_TRUE(verify_gram_inverse(3, 3).identity);
  EXPECT_TRUE(verify_gram_inverse(4, 4).identity);
  EXPECT_THROW(verify_gram_inverse(3, 2), UsageError);
  EXPECT_THROW(verify_gram_inverse(6, 6), InfeasibleError);
}

TEST(GramInverse, AllSmallCases) {
  for (int k = 1; k <= 4; ++k)
    for (long d = k; d <= k + 2; ++d) {
      auto rep = verify_gram_inverse(k, d);
      EXPECT_TRUE(rep.identity) << k << " " << d;
      EXPECT_FALSE(rep.first_failure.has_value());
    }
}

TEST(WgSeries, Examples) {
  for (long d = 2; d <= 5; ++d) {
    EXPECT_EQ(wg_series_truncated(CycleType{2}, d, 1), q(-1, d * d * d));
    EXPECT_EQ(wg_series_truncated(CycleType{2}, d, 3), q(-1, d * d * d) - q(1, d * d * d * d * d));
  }
  for (int len = 0; len <= 8; ++len) EXPECT_EQ(wg_series_truncated(CycleType{1}, 3, len), q(1, 3));
  EXPECT_THROW(wg_series_truncated(CycleType{1}, 3, 9), InfeasibleError);
}

TEST(WgSeries, S2GeometricTail) {
  // w_ℓ = 1 on the matching parity in S_2, so the tail after the last kept
  // term is the first omitted term times d²/(d²-1)
  for (long d = 2; d <= 6; ++d)
    for (const auto& mu : cycle_types_of(2)) {
      Rational exact = wg_exact(mu, d).value;
      for (int len = 0; len <= 7; ++len) {
        Rational truncated = wg_series_truncated(mu, d, len);
        int next = len + 1;
        if ((next - (2 - mu.length())) % 2) ++next;
        Rational first_omitted = rpow(Rational(d), -2) * rpow(q(-1, d), next);
        Rational tail = first_omitted * q(d * d, d * d - 1);
        EXPECT_EQ(exact - truncated, tail) << mu.to_string() << " d=" << d << " len=" << len;
        EXPECT_LE(abs(exact - truncated), abs(first_omitted) * 2);
      }
    }
}

TEST(WgSeries, ConvergesForLargerGroups) {
  // partial sums approach the exact value as the truncation grows
  for (int k = 3; k <= 4; ++k)
    for (const auto& mu : cycle_types_of(k)) {
      long d = 2 * k + 2;
      Rational exact = wg_exact(mu, d).value;
      int top = 8 - (8 - (k - mu.length())) % 2;
      Rational prev_err = abs(exact - wg_series_truncated(mu, d, top - 2));
      Rational err = abs(exact - wg_series_truncated(mu, d, top));
      EXPECT_LT(err, prev_err) << mu.to_string();
    }
}

TEST(WgBound, Examples) {
  auto r2 = wg_bound_check(2, 3);
  EXPECT_TRUE(r2.holds);
  for (const auto& [mu, ratio] : r2.ratios)
    if (mu == CycleType{2}) {
      EXPECT_EQ(ratio, q(3, 4));
    }
  for (long d = 1; d <= 5; ++d) {
    auto r1 = wg_bound_check(1, d);
    EXPECT_TRUE(r1.holds);
    EXPECT_EQ(r1.max_ratio, q(2, 3));
  }
  auto r4 = wg_bound_check(4, 9);
  EXPECT_TRUE(r4.holds);
  EXPECT_EQ(r4.ratios.size(), 5u);
  EXPECT_THROW(wg_bound_check(4, 7), UsageError);
}

TEST(WgBound, SmallestAdmissibleDimension) {
  for (int k = 1; k <= 6; ++k) {
    long d = 1;
    while (static_cast<long>(k) * k * k > d * d) ++d;
    EXPECT_TRUE(wg_bound_check(k, d).holds) << k << " " << d;
  }
}
