#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "rblab/combinatorics.hpp"
#include "rblab/graph.hpp"
#include "rblab/weighted_graph.hpp"

namespace rblab::testing {

inline GraphSystem system_of(int n, std::initializer_list<std::vector<Edge>> members) {
  std::vector<SimpleGraph> graphs;
  for (const auto& edges : members) graphs.emplace_back(n, edges);
  return GraphSystem(n, std::move(graphs));
}

inline GraphSystem copies(const SimpleGraph& g, int k) {
  return GraphSystem(g.order(), std::vector<SimpleGraph>(static_cast<std::size_t>(k), g));
}

// Independent of the sequences module: sort the clique's weights and compare
// with 1, 2, ..., C(r,2) directly.
inline bool some_clique_dominates_staircase(const WeightedGraph& wg, int r) {
  const int n = wg.order();
  if (r > n) return false;
  for (const auto& s : all_subsets(n, r)) {
    std::vector<int> w;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) w.push_back(wg.weight(s[i], s[j]));
    std::sort(w.begin(), w.end());
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = w[i] >= static_cast<int>(i) + 1;
    if (ok) return true;
  }
  return false;
}

}  // namespace rblab::testing
