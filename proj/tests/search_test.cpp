#include <algorithm>
#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "rblab/error.hpp"
#include "rblab/nesting.hpp"
#include "rblab/rainbow.hpp"
#include "rblab/sampling.hpp"
#include "rblab/search.hpp"
#include "rblab/sequences.hpp"
#include "rblab/turan.hpp"
#include "support.hpp"

using namespace rblab;

namespace {

void expect_valid_witness(const SearchReport& rep) {
  EXPECT_EQ(rep.witness.total_weight(), rep.optimum);
  EXPECT_EQ(rep.witness.order(), rep.n);
  EXPECT_EQ(rep.witness.ceiling(), rep.k);
  if (rep.n >= rep.r) {
    EXPECT_FALSE(has_bounded_clique(rep.witness, rep.r, WeightSeq::staircase(static_cast<int>(choose2(rep.r)))));
  }
  EXPECT_TRUE(is_rainbow_free(from_weighted(rep.witness).system(), PatternGraph::clique(rep.r)).rainbow_free);
}

// Largest total size of a rainbow-free multiset of k graphs on [n], by
// enumerating nondecreasing tuples of edge-set masks.
std::int64_t multiset_optimum(int n, int r, int k) {
  const int e = static_cast<int>(choose2(n));
  const int masks = 1 << e;
  std::vector<int> pick(static_cast<std::size_t>(k), 0);
  std::int64_t best = 0;
  const auto pattern = PatternGraph::clique(r);
  std::function<void(int, int)> go = [&](int i, int from) {
    if (i == k) {
      std::vector<SimpleGraph> members;
      std::int64_t total = 0;
      for (int m : pick) {
        SimpleGraph g(n);
        for (int b = 0; b < e; ++b)
          if (m >> b & 1) g.add_edge(edge_at(static_cast<std::size_t>(b)).u, edge_at(static_cast<std::size_t>(b)).v);
        total += static_cast<std::int64_t>(g.size());
        members.push_back(g);
      }
      if (total > best && is_rainbow_free(GraphSystem(n, members), pattern).rainbow_free) best = total;
      return;
    }
    for (int m = from; m < masks; ++m) {
      pick[static_cast<std::size_t>(i)] = m;
      go(i + 1, m);
    }
  };
  go(0, 0);
  return best;
}

}  // namespace

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_optimum(3, 3, 3).optimum, 6);
  EXPECT_EQ(brute_force_optimum(4, 4, 6).optimum, 30);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(brute_force_optimum(3, 4, k).optimum, 3 * k);
  EXPECT_THROW(brute_force_optimum(6, 3, 5), ResourceLimit);
  EXPECT_EQ(brute_force_optimum(4, 4, 6).mode, SearchMode::Oracle);
}

TEST(BruteForce, MatchesMultisetEnumeration) {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int r = 3; r <= 4; ++r) EXPECT_EQ(brute_force_optimum(n, r, k).optimum, multiset_optimum(n, r, k)) << n << r << k;
}

TEST(BranchAndBound, Examples) {
  const auto a = bnb_optimum(4, 3, 3);
  EXPECT_EQ(a.optimum, 12);
  EXPECT_TRUE(a.complete);
  expect_valid_witness(a);
  const auto b = bnb_optimum(5, 4, 6);
  EXPECT_EQ(b.optimum, 50);
  expect_valid_witness(b);
  const auto c = bnb_optimum(5, 4, 7);
  EXPECT_EQ(c.optimum, 56);
  expect_valid_witness(c);
  EXPECT_EQ(c.mode, SearchMode::BranchAndBound);
}

TEST(BranchAndBound, AgreesWithOracleUnderAllOptions) {
  for (int n = 2; n <= 5; ++n)
    for (int r = 3; r <= n + 1; ++r)
      for (int k = 1; k <= 40 && std::pow(k + 1.0, static_cast<double>(choose2(n))) <= 2e5; ++k) {
        const auto want = brute_force_optimum(n, r, k);
        expect_valid_witness(want);
        for (int sym = 0; sym <= 2; ++sym)
          for (bool collapse : {false, true})
            for (bool clique_bound : {false, true}) {
              SearchOptions o;
              o.symmetry = sym;
              o.collapse_heavy = collapse;
              o.clique_bound = clique_bound;
              const auto got = bnb_optimum(n, r, k, o);
              ASSERT_TRUE(got.complete);
              ASSERT_EQ(got.optimum, want.optimum) << n << ' ' << r << ' ' << k << ' ' << sym << collapse << clique_bound;
              expect_valid_witness(got);
            }
      }
}

TEST(BranchAndBound, NeverBelowConstructions) {
  for (int r = 3; r <= 5; ++r)
    for (int n = r; n <= 6; ++n)
      for (int k = 1; k <= 12; ++k) {
        const auto rep = bnb_optimum(n, r, k);
        ASSERT_TRUE(rep.complete);
        EXPECT_GE(rep.optimum, clique_construction(n, r, k).total_weight());
        EXPECT_GE(rep.optimum, turan_construction(n, r, k).total_weight());
        if (k >= choose2(r) - 1) EXPECT_EQ(rep.optimum, conjectured_bound(n, r, k)) << n << ' ' << r << ' ' << k;
      }
}

TEST(BranchAndBound, ThreadCountDoesNotChangeOptimum) {
  for (int threads : {1, 2, 4}) {
    SearchOptions o;
    o.threads = threads;
    EXPECT_EQ(bnb_optimum(6, 4, 7, o).optimum, 84);
    EXPECT_EQ(bnb_optimum(6, 3, 4, o).optimum, 36);
  }
}

TEST(BranchAndBound, BudgetExhaustionFlagsIncomplete) {
  SearchOptions o;
  o.budget.max_nodes = 50;
  const auto rep = bnb_optimum(7, 4, 7, o);
  EXPECT_FALSE(rep.complete);
  EXPECT_GE(rep.optimum, conjectured_bound(7, 4, 7));
  expect_valid_witness(rep);
}

TEST(BranchAndBound, RejectsBadOptions) {
  SearchOptions o;
  o.threads = 0;
  EXPECT_THROW(bnb_optimum(4, 3, 3, o), InvalidParameter);
  o.threads = 1;
  o.symmetry = 3;
  EXPECT_THROW(bnb_optimum(4, 3, 3, o), InvalidParameter);
  EXPECT_THROW(bnb_optimum(4, 3, 0), InvalidParameter);
  EXPECT_THROW(bnb_optimum(4, 2, 3), InvalidParameter);
}

TEST(Constructions, Values) {
  EXPECT_EQ(clique_construction(5, 4, 7).total_weight(), 50);
  EXPECT_EQ(turan_construction(5, 4, 7).total_weight(), 56);
  EXPECT_EQ(clique_construction(5, 4, 3).total_weight(), 30);
  for (int r = 3; r <= 5; ++r)
    for (int n = 1; n <= 7; ++n)
      for (int k = 1; k <= 12; ++k) {
        EXPECT_TRUE(is_bound_free(clique_construction(n, r, k), r));
        EXPECT_TRUE(is_bound_free(turan_construction(n, r, k), r));
      }
}

TEST(IsBoundFree, MatchesDirectCheck) {
  Rng rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 5;
    const auto wg = random_weighting(n, 1 + trial % 12, rng);
    for (int r = 3; r <= 5; ++r)
      ASSERT_EQ(is_bound_free(wg, r), !rblab::testing::some_clique_dominates_staircase(wg, r));
  }
}

TEST(Grid, SmallThresholdGridAllEqual) {
  const std::vector<int> rs{3, 4};
  const auto cells = verify_conjecture_grid(rs, 1, 5, {});
  ASSERT_FALSE(cells.empty());
  for (const auto& c : cells) {
    EXPECT_EQ(c.status, CellStatus::Equal) << c.n << ' ' << c.r << ' ' << c.k;
    EXPECT_EQ(c.optimum, c.bound);
    EXPECT_GE(c.n, c.r);
  }
}

TEST(Grid, ExplicitKAndIncomplete) {
  const std::vector<int> rs{4};
  KPolicy policy{KPolicy::Kind::Explicit, {5, 6}};
  const auto cells = verify_conjecture_grid(rs, 4, 4, policy);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].optimum, 30);
  EXPECT_EQ(cells[1].optimum, 30);
  SearchOptions tight;
  tight.budget.max_nodes = 10;
  const std::vector<int> r4{4};
  KPolicy seven{KPolicy::Kind::Explicit, {7}};
  const auto hard = verify_conjecture_grid(r4, 7, 7, seven, tight);
  ASSERT_EQ(hard.size(), 1u);
  EXPECT_EQ(hard[0].status, CellStatus::Incomplete);
  EXPECT_STREQ(to_string(CellStatus::Equal), "EQUAL");
  EXPECT_STREQ(to_string(CellStatus::Incomplete), "INCOMPLETE");
}
