#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "rblab/error.hpp"
#include "rblab/nesting.hpp"
#include "rblab/rainbow.hpp"
#include "rblab/sampling.hpp"
#include "rblab/turan.hpp"
#include "support.hpp"

using namespace rblab;
using rblab::testing::copies;
using rblab::testing::system_of;

namespace {

// Exhaustive reference: every injective placement, every injective member
// assignment, no matching.
bool brute_force_rainbow(const GraphSystem& sys, const PatternGraph& f) {
  const int n = sys.order();
  const int p = f.order();
  const int m = f.size();
  const int k = sys.size();
  if (p > n || m > k) return false;
  for (const auto& chosen : all_subsets(n, p)) {
    std::vector<Vertex> perm(chosen.begin(), chosen.end());
    do {
      std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
      std::function<bool(int)> go = [&](int j) {
        if (j == m) return true;
        const auto& e = f.edges()[static_cast<std::size_t>(j)];
        for (int i = 1; i <= k; ++i) {
          if (used[i] || !sys.member(i).has_edge(perm[e.u - 1], perm[e.v - 1])) continue;
          used[i] = true;
          if (go(j + 1)) return true;
          used[i] = false;
        }
        return false;
      };
      if (go(0)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

GraphSystem random_with(Rng& rng, int n, int k) {
  std::uniform_real_distribution<double> d(0.2, 0.9);
  return random_system(n, k, d(rng), rng);
}

}  // namespace

TEST(Rainbow, ThreeTrianglesContainRainbowTriangle) {
  const auto sys = copies(SimpleGraph::complete(3), 3);
  const auto res = is_rainbow_free(sys, PatternGraph::clique(3));
  ASSERT_FALSE(res.rainbow_free);
  ASSERT_TRUE(res.certificate);
  EXPECT_EQ(res.certificate->vertex_map, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(res.certificate->edge_assignment, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(verify_certificate(sys, PatternGraph::clique(3), *res.certificate));
}

TEST(Rainbow, CliqueConstructionIsFree) {
  const auto res = is_rainbow_free(gen_clique_system(4, 3, 3), PatternGraph::clique(3));
  EXPECT_TRUE(res.rainbow_free);
  EXPECT_FALSE(res.certificate);
}

TEST(Rainbow, MatchingNeedsDistinctMembers) {
  const auto sys = system_of(3, {{{1, 2}, {1, 3}}, {{2, 3}}, {}});
  EXPECT_TRUE(is_rainbow_free(sys, PatternGraph::clique(3)).rainbow_free);
}

TEST(Rainbow, VacuousCases) {
  EXPECT_TRUE(is_rainbow_free(copies(SimpleGraph::complete(4), 5), PatternGraph::clique(4)).rainbow_free);
  EXPECT_TRUE(is_rainbow_free(copies(SimpleGraph::complete(3), 9), PatternGraph::clique(4)).rainbow_free);
}

TEST(Rainbow, AllCompleteSystemsContainClique) {
  for (int r = 3; r <= 5; ++r)
    for (int n = r; n <= 7; ++n) {
      const auto sys = copies(SimpleGraph::complete(n), static_cast<int>(choose2(r)));
      const auto res = is_rainbow_free(sys, PatternGraph::clique(r));
      ASSERT_FALSE(res.rainbow_free);
      EXPECT_TRUE(verify_certificate(sys, PatternGraph::clique(r), *res.certificate));
    }
}

TEST(Rainbow, CertificateCheckerRejectsForgeries) {
  const auto sys = copies(SimpleGraph::complete(3), 3);
  const auto k3 = PatternGraph::clique(3);
  EXPECT_FALSE(verify_certificate(sys, k3, {{1, 2, 2}, {1, 2, 3}}));
  EXPECT_FALSE(verify_certificate(sys, k3, {{1, 2, 3}, {1, 1, 3}}));
  EXPECT_FALSE(verify_certificate(sys, k3, {{1, 2, 3}, {1, 2, 4}}));
  EXPECT_FALSE(verify_certificate(sys, k3, {{1, 2, 4}, {1, 2, 3}}));
  const auto sparse = system_of(3, {{{1, 2}}, {{1, 3}}, {{1, 2}}});
  EXPECT_FALSE(verify_certificate(sparse, k3, {{1, 2, 3}, {1, 2, 3}}));
}

TEST(Rainbow, CountEmbeddings) {
  EXPECT_EQ(count_rainbow_embeddings(copies(SimpleGraph::complete(3), 3), PatternGraph::clique(3)), 6);
  EXPECT_EQ(count_rainbow_embeddings(gen_clique_system(5, 3, 4), PatternGraph::clique(3)), 0);
  EXPECT_EQ(count_rainbow_embeddings(copies(SimpleGraph::complete(4), 6), PatternGraph::clique(4)), 24);
  EXPECT_THROW(count_rainbow_embeddings(GraphSystem(11, 3), PatternGraph::clique(3)), ResourceLimit);
  EXPECT_THROW(count_rainbow_embeddings(GraphSystem(8, 3), PatternGraph::clique(6)), ResourceLimit);
}

TEST(Rainbow, AgreesWithExhaustiveAssignment) {
  Rng rng(11);
  const std::vector<PatternGraph> patterns{PatternGraph::clique(3), PatternGraph::clique(4),
                                           PatternGraph(4, {{1, 2}, {2, 3}, {3, 4}}),
                                           PatternGraph(4, {{1, 2}, {1, 3}, {1, 4}}),
                                           PatternGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 4;
    const int k = 2 + trial % 6;
    const auto sys = random_with(rng, n, k);
    for (const auto& f : patterns) {
      const auto res = is_rainbow_free(sys, f);
      ASSERT_EQ(!res.rainbow_free, brute_force_rainbow(sys, f)) << "trial " << trial;
      if (!res.rainbow_free) ASSERT_TRUE(verify_certificate(sys, f, *res.certificate));
    }
  }
}

TEST(Rainbow, CountAgreesWithDecision) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sys = random_with(rng, 5, 4 + trial % 4);
    const auto k3 = PatternGraph::clique(3);
    EXPECT_EQ(count_rainbow_embeddings(sys, k3) == 0, is_rainbow_free(sys, k3).rainbow_free);
  }
}

TEST(Rainbow, InvariantUnderPermutations) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 4;
    const int k = 3 + trial % 7;
    const auto sys = random_with(rng, n, k);
    std::vector<Vertex> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 1);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<SimpleGraph> moved;
    for (const auto& g : sys.members()) {
      SimpleGraph h(n);
      for (const auto& e : g.edges()) h.add_edge(relabel[e.u - 1], relabel[e.v - 1]);
      moved.push_back(h);
    }
    std::shuffle(moved.begin(), moved.end(), rng);
    const GraphSystem other(n, moved);
    for (int r = 3; r <= 4; ++r) {
      const auto f = PatternGraph::clique(r);
      ASSERT_EQ(is_rainbow_free(sys, f).rainbow_free, is_rainbow_free(other, f).rainbow_free);
    }
  }
}

TEST(Rainbow, AddingEdgesIsMonotone) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 3;
    auto sys = random_with(rng, n, 6);
    const auto f = PatternGraph::clique(trial % 2 ? 3 : 4);
    bool had = !is_rainbow_free(sys, f).rainbow_free;
    for (int step = 0; step < 6; ++step) {
      std::uniform_int_distribution<int> pick_member(1, sys.size());
      const Edge e = edge_at(std::uniform_int_distribution<std::size_t>(0, choose2(n) - 1)(rng));
      sys.member(pick_member(rng)).add_edge(e.u, e.v);
      const bool has = !is_rainbow_free(sys, f).rainbow_free;
      ASSERT_TRUE(!had || has);
      had = has;
    }
  }
}

TEST(Rainbow, HallEquivalenceOnNestedSystems) {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 5;
    const int k = 1 + trial % 9;
    const auto nested = random_nested_system(n, k, rng);
    const auto wg = to_weighted(nested);
    for (int r = 3; r <= 4; ++r)
      ASSERT_EQ(!is_rainbow_free(nested.system(), PatternGraph::clique(r)).rainbow_free,
                rblab::testing::some_clique_dominates_staircase(wg, r));
  }
}

TEST(Rainbow, LexicographicCertificate) {
  // Member 1 lacks 1-2, so {1,2,3} needs 12 -> 2, 13 -> 1, 23 -> 3.
  auto sys = copies(SimpleGraph::complete(4), 3);
  sys.member(1).remove_edge(1, 2);
  const auto res = is_rainbow_free(sys, PatternGraph::clique(3));
  ASSERT_FALSE(res.rainbow_free);
  EXPECT_EQ(res.certificate->vertex_map, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(res.certificate->edge_assignment, (std::vector<int>{2, 1, 3}));
}
