#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "rblab/weighted_graph.hpp"

namespace rblab {

enum class SearchMode { Oracle, BranchAndBound };

struct SearchBudget {
  std::uint64_t max_nodes = 0;          // 0 = unlimited
  std::chrono::milliseconds max_time{0};  // 0 = unlimited
};

struct SearchOptions {
  SearchBudget budget;
  int threads = 1;
  /// 0: none. 1: vertex 1's star is nonincreasing, w(1,2) >= w(1,3) >= ... >= w(1,n).
  /// 2: additionally {1,2} carries a heaviest edge overall.
  int symmetry = 2;
  /// Weights in [C(r,2), k] only matter as "at least C(r,2)", so such edges
  /// are searched at k alone.
  bool collapse_heavy = true;
  /// Prune with the r-clique averaging bound (sum of per-clique maxima / C(n-2, r-2)).
  bool clique_bound = true;
};

struct SearchReport {
  int n = 0;
  int r = 0;
  int k = 0;
  /// Exact when `complete`, otherwise a verified lower bound.
  std::int64_t optimum = 0;
  WeightedGraph witness{1, 0};
  std::uint64_t nodes_explored = 0;
  std::uint64_t nodes_pruned = 0;
  std::chrono::duration<double> elapsed{0};
  SearchMode mode = SearchMode::BranchAndBound;
  bool complete = true;
};

/// True when no r-clique's sorted weights dominate (1, ..., C(r,2)).
bool is_bound_free(const WeightedGraph& graph, int r);

/// Largest total over all weightings of K_n by {0..k} without an r-clique
/// dominating (1, ..., C(r,2)), by full enumeration.
/// Throws ResourceLimit when (k+1)^C(n,2) > 1e8.
SearchReport brute_force_optimum(int n, int r, int k);

/// Same optimum by depth-first branch-and-bound over edges in colex order
/// (cliques on prefixes of [n] complete first). The incumbent starts at the
/// better of the two extremal constructions; on budget exhaustion the report
/// is flagged incomplete and carries the best weighting found.
SearchReport bnb_optimum(int n, int r, int k, const SearchOptions& options = {});

/// Value of the two constructions: all weights min(k, C(r,2)-1), and k on
/// the edges of T_{r-1}(n).
WeightedGraph clique_construction(int n, int r, int k);
WeightedGraph turan_construction(int n, int r, int k);

struct KPolicy {
  enum class Kind { Thresholds, Explicit };
  Kind kind = Kind::Thresholds;
  std::vector<int> values;  // used for Explicit
};

enum class CellStatus { Equal, Below, Above, Incomplete };

struct GridCell {
  int n = 0;
  int r = 0;
  int k = 0;
  std::int64_t optimum = 0;
  std::int64_t bound = 0;
  CellStatus status = CellStatus::Equal;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// For every r, every max(r, n_min) <= n <= n_max and every k from the
/// policy ({k1, k2} of the thresholds, or an explicit list), compares the
/// branch-and-bound optimum with conjectured_bound(n, r, k).
std::vector<GridCell> verify_conjecture_grid(std::span<const int> r_values, int n_min, int n_max,
                                             const KPolicy& policy, const SearchOptions& options = {});

const char* to_string(CellStatus status);
const char* to_string(SearchMode mode);

}  // namespace rblab
