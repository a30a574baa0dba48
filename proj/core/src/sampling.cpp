#include "rblab/sampling.hpp"

#include <algorithm>

#include "rblab/error.hpp"
#include "rblab/sequences.hpp"

namespace rblab {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

GraphSystem random_system(int n, int k, double density, Rng& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<SimpleGraph> members;
  for (int i = 0; i < k; ++i) {
    SimpleGraph g(n);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        if (keep(rng)) g.add_edge(u, v);
      }
    }
    members.push_back(std::move(g));
  }
  return GraphSystem(n, std::move(members));
}

WeightedGraph random_weighting(int n, int k, Rng& rng) {
  WeightedGraph g(n, k);
  const int profile = uniform(rng, 0, 2);
  const int parts = uniform(rng, 2, std::max(2, n));
  std::vector<int> part(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) part[static_cast<std::size_t>(v)] = uniform(rng, 1, parts);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    int w = 0;
    switch (profile) {
      case 0:
        w = uniform(rng, 0, k);
        break;
      case 1:
        w = uniform(rng, 0, 3) == 0 ? uniform(rng, 0, k) : k - uniform(rng, 0, std::min(k, 2));
        break;
      default: {
        const Edge edge = edge_at(e);
        const bool cross = part[static_cast<std::size_t>(edge.u)] != part[static_cast<std::size_t>(edge.v)];
        w = cross ? k - uniform(rng, 0, std::min(k, 1)) : uniform(rng, 0, std::min(k, 2));
        break;
      }
    }
    g.set_weight_at(e, w);
  }
  return g;
}

NestedSystem random_nested_system(int n, int k, Rng& rng) { return from_weighted(random_weighting(n, k, rng)); }

WeightedGraph random_bound_free_weighting(int n, int r, int k, Rng& rng) {
  WeightedGraph g = random_weighting(n, k, rng);
  if (n < r) return g;
  const auto h = static_cast<int>(choose2(r));
  const WeightSeq staircase = WeightSeq::staircase(h);
  while (auto clique = has_bounded_clique(g, r, staircase)) {
    const auto& vs = *clique;
    const int a = uniform(rng, 0, r - 1);
    int b = uniform(rng, 0, r - 2);
    if (b >= a) ++b;
    const Vertex u = vs[static_cast<std::size_t>(a)];
    const Vertex v = vs[static_cast<std::size_t>(b)];
    const int w = g.weight(u, v);
    g.set_weight(u, v, uniform(rng, 0, std::min(w, h) - 1));
  }
  return g;
}

}  // namespace rblab
