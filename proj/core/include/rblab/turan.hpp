#pragma once

#include <cstdint>
#include <vector>

#include "rblab/graph.hpp"

namespace rblab {

/// Part (1-based) that vertex v joins in the round-robin Turán partition.
constexpr int turan_part(Vertex v, int parts) { return (v - 1) % parts + 1; }

/// Sizes of the `parts` round-robin classes of [n] (some may be empty when parts > n).
std::vector<int> turan_part_sizes(int n, int parts);

/// Complete `parts`-partite graph on [n] with near-equal parts; T_{r-1}(n) for parts = r-1.
SimpleGraph turan_graph(int n, int parts);

/// Edge count of turan_graph(n, parts), via C(n,2) minus the in-part pairs.
/// n = 0 is accepted and yields 0.
std::int64_t turan_number(int n, int parts);

/// Thresholds of the weighted formulation for K_r on n vertices.
struct Thresholds {
  int r = 0;
  int n = 0;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t turan = 0;         // t_{r-1}(n)
  std::int64_t clique_bound = 0;  // (C(r,2) - 1) * C(n,2)
};

/// Requires n >= r-1 >= 2.
Thresholds thresholds(int n, int r);

/// max{(C(r,2)-1) C(n,2), k t_{r-1}(n)}. Requires n >= r-1 >= 2 and k >= 1.
std::int64_t conjectured_bound(int n, int r, std::int64_t k);

/// k copies of T_{r-1}(n).
GraphSystem gen_turan_system(int n, int r, int k);

/// C(r,2)-1 copies of K_n followed by k-C(r,2)+1 empty graphs.
GraphSystem gen_clique_system(int n, int r, int k);

}  // namespace rblab
