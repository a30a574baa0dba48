#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rblab/graph.hpp"
#include "rblab/sequences.hpp"
#include "rblab/weighted_graph.hpp"

namespace rblab {

/// Vertex-disjoint cliques collected level by level, K_{r-1} first.
struct Packing {
  int r = 0;
  /// levels[s] holds the s-sets picked at level s (2 <= s <= r-1); other slots stay empty.
  std::vector<std::vector<std::vector<Vertex>>> levels;
  /// Vertices left over after level 2.
  std::vector<Vertex> residual;

  const std::vector<std::vector<Vertex>>& level(int s) const { return levels.at(static_cast<std::size_t>(s)); }
  /// m_s: vertices covered at level s; m_1 is the residual size.
  int covered(int s) const;
  /// Smallest s in [1, r-1] with m_s > 0 (1 whenever the residual is non-empty).
  int min_level() const;
  /// Level holding `member` (1 for a residual singleton), or 0 if absent.
  int level_of(std::span<const Vertex> member) const;
};

/// Top-down greedy packing: at level s = r-1, ..., 2 keep adding the first
/// available s-set (in `priority` order, default 1..n) that avoids chosen
/// vertices and whose weight sequence dominates b_{r,s}. The loop ends only
/// when no such set remains, so each level is maximal in its residual graph.
Packing greedy_packing(const WeightedGraph& graph, int r);
Packing greedy_packing(const WeightedGraph& graph, int r, std::span<const Vertex> priority);

struct VertexClaimViolation {
  int s = 0;
  std::vector<Vertex> member;
  Vertex v = 0;
  std::int64_t star_weight = 0;
  std::int64_t limit = 0;
};

/// For every level s in [2, r-1], member F of M_s and vertex v in
/// M_1 ∪ ... ∪ M_s outside F, checks sum_{u in F} w(vu) <= (s-1)k + a_{r,s+1} - delta.
/// Throws ContractViolation unless delta is 0 or 1, k >= C(r,2) + delta,
/// all weights are <= k and no K_r dominates (1, ..., C(r,2)).
std::vector<VertexClaimViolation> check_claim_vertex(const WeightedGraph& graph, int r, std::int64_t k, int delta,
                                                     const Packing& packing);

enum class ClaimOutcome { Holds, Fails, NotApplicable };

/// (s-1)k + a_{r,s+1} - 1 <= (r-2)/(r-1) s k for every s in [2, r-1];
/// NotApplicable outside r in {4, 5} or k < C(r,2).
ClaimOutcome check_claim_45(int r, std::int64_t k);

struct InductionCheck {
  bool holds = false;
  int s = 0;
  /// Both sides multiplied by (r-1).
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// f(F) + f(K[V(F), V(F)^c]) <= k(C(s,2) + (r-2)/(r-1) s(n-s)) + (1-delta)(n-s)
/// for F a member of the minimal non-empty level s (a singleton when s = 1).
/// Throws ContractViolation when F is not such a member or k < C(r,2) + delta.
InductionCheck check_claim_induction(const WeightedGraph& graph, int r, std::int64_t k, int delta,
                                     const Packing& packing, std::span<const Vertex> member);

/// Problems with a packing found by exhaustive re-checking: overlapping or
/// missing vertices, members failing b_{r,s}, and any s-set in a level's
/// residual graph that still dominates b_{r,s}. Empty for a valid packing.
std::vector<std::string> audit_packing(const WeightedGraph& graph, const Packing& packing);

struct ClaimSweepReport {
  int trials = 0;
  std::int64_t vertex_checks = 0;
  std::int64_t vertex_violations = 0;
  int level_inequality_failures = 0;
  int packing_failures = 0;
  /// Claim over the minimal level when it is >= 2 (residual empty).
  std::int64_t induction_checks = 0;
  std::int64_t induction_violations = 0;
  /// Same inequality when the minimal level is 1; recorded, not asserted.
  std::int64_t level1_checks = 0;
  std::int64_t level1_flags = 0;
  std::vector<std::string> failures;  // first few, human-readable
};

/// Seeded sweep over bound-free weightings: each trial picks r from
/// `r_values`, n in [r+1, n_max], k in {k1, k2} of the thresholds, packs
/// greedily (in a shuffled vertex priority when `shuffle_priority`) and runs
/// every claim checker for delta = 0 and, when k >= C(r,2)+1, delta = 1.
ClaimSweepReport sweep_claims(std::span<const int> r_values, int trials, int n_max, std::uint64_t seed,
                              bool shuffle_priority = false);

}  // namespace rblab
