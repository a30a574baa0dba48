#include <gtest/gtest.h>

#include "rblab/bounds.hpp"
#include "rblab/error.hpp"
#include "rblab/search.hpp"
#include "rblab/turan.hpp"

using namespace rblab;

TEST(Decompose, Examples) {
  const auto d = decompose(11, 4);
  EXPECT_EQ(d.k0, 3);
  EXPECT_EQ(d.m, 2);
  for (int r = 3; r <= 12; ++r)
    for (int n = 1; n <= 100; ++n) {
      const auto e = decompose(n, r);
      EXPECT_EQ(e.k0 * (r - 1) + e.m, n);
      EXPECT_GE(e.m, 0);
      EXPECT_LE(e.m, r - 2);
    }
}

TEST(GR, Examples) {
  EXPECT_EQ(g_r(2, 5, 4), Rational(8));
  EXPECT_EQ(g_r(0, 6, 4), Rational(12));
  for (int r = 3; r <= 12; ++r) EXPECT_EQ(g_r(0, r - 1, r), Rational(choose2(r - 1)));
  EXPECT_THROW(g_r(0, 3, 1), InvalidParameter);
}

TEST(TuranInequalities, AcceptanceGridClean) {
  const auto rep = verify_turan_inequalities(4, 12, 400);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_GT(rep.checks_i, 0);
  EXPECT_GT(rep.checks_ii, 0);
  EXPECT_GT(rep.checks_iii, 0);
  EXPECT_GT(rep.checks_iv, 0);
}

TEST(TuranInequalities, WideRangeFailsAtFourFiveFour) {
  // t_3(5) - t_3(1) = 8 < C(4,2) + (2/3)*4*1.
  const auto rep = verify_turan_inequalities(4, 4, 5);
  ASSERT_TRUE(rep.first_wide_violation);
  EXPECT_EQ(rep.first_wide_violation->r, 4);
  EXPECT_EQ(rep.first_wide_violation->n, 5);
  EXPECT_EQ(rep.first_wide_violation->s, 4);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(3 * (turan_number(5, 3) - turan_number(1, 3)), 24);
  EXPECT_LT(3 * 8, 3 * choose2(4) + 2 * 4 * 1);
}

TEST(TuranInequalities, EqualityAtFourFive) {
  EXPECT_EQ(thresholds(5, 4).k2, choose2(4) + 1);
}

TEST(F0, Examples) {
  EXPECT_EQ(f0(4, 1), 30);
  EXPECT_EQ(f0(4, 6), 30);
  for (int r = 3; r <= 10; ++r) {
    const int h = static_cast<int>(choose2(r));
    for (int j = 1; j <= h; ++j) EXPECT_LE(f0(r, j), (h - 1) * h);
  }
}

TEST(NEqualsR, TightAndChecked) {
  for (int r = 3; r <= 5; ++r) {
    const int h = static_cast<int>(choose2(r));
    const WeightedGraph tight(r, h, std::vector<int>(static_cast<std::size_t>(h), h - 1));
    EXPECT_TRUE(check_n_equals_r(r, tight));
    EXPECT_EQ(tight.total_weight(), (h - 1) * h);
    const WeightedGraph full(r, h, std::vector<int>(static_cast<std::size_t>(h), h));
    EXPECT_THROW(check_n_equals_r(r, full), ContractViolation);
  }
  EXPECT_THROW(check_n_equals_r(4, WeightedGraph(5, 6)), ContractViolation);
  EXPECT_THROW(check_n_equals_r(4, WeightedGraph(4, 7)), ContractViolation);
}

TEST(NEqualsR, ExhaustiveSmall) {
  EXPECT_EQ(brute_force_optimum(3, 3, 3).optimum, 6);
  const auto rep = brute_force_optimum(4, 4, 6);
  EXPECT_EQ(rep.optimum, 30);
  EXPECT_TRUE(check_n_equals_r(4, rep.witness));
}

TEST(AlphaH, Examples) {
  const auto d = alpha_h_diagnostics(4, 6, 2);
  ASSERT_TRUE(d.alpha);
  EXPECT_EQ(*d.alpha, Rational(4, 5));
  ASSERT_TRUE(d.h);
  EXPECT_EQ(*d.h, Rational(8));
  EXPECT_EQ(alpha_h_diagnostics(4, 5, 2).a, Rational(5, 4));
  EXPECT_FALSE(alpha_h_diagnostics(4, 5, 0).alpha);
  EXPECT_FALSE(alpha_h_diagnostics(4, 6, 0).h);
  EXPECT_THROW(alpha_h_diagnostics(3, 6, 0), InvalidParameter);
  EXPECT_THROW(alpha_h_diagnostics(4, 3, 0), InvalidParameter);
  EXPECT_THROW(alpha_h_diagnostics(4, 6, 3), InvalidParameter);
}

TEST(AlphaH, Monotone) {
  for (int r = 4; r <= 12; ++r) {
    for (int n = 2 * r - 2; n < 300; ++n)
      EXPECT_GT(*alpha_h_diagnostics(r, n, 0).alpha, *alpha_h_diagnostics(r, n + 1, 0).alpha) << r << ' ' << n;
    for (int m = 2; m < r - 2; ++m)
      EXPECT_GT(*alpha_h_diagnostics(r, r, m).h, *alpha_h_diagnostics(r, r, m + 1).h) << r << ' ' << m;
    for (int n = r + 1; n <= 300; ++n) {
      const auto a = alpha_h_diagnostics(r, n, 0).a;
      EXPECT_GT(a, Rational(1)) << r << ' ' << n;
      EXPECT_GE(thresholds(n, r).k2, choose2(r) + 1);
    }
  }
}
