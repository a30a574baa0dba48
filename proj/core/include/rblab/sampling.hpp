#pragma once

#include <cstdint>
#include <random>

#include "rblab/graph.hpp"
#include "rblab/nesting.hpp"
#include "rblab/weighted_graph.hpp"

namespace rblab {

/// Generators for seeded property sweeps. All draw only from `rng`, so a
/// fixed seed reproduces the same instances.
using Rng = std::mt19937_64;

/// Each member keeps each pair independently with probability `density`.
GraphSystem random_system(int n, int k, double density, Rng& rng);

/// Weights drawn from a mixture of uniform, heavy-tailed and planted
/// multipartite profiles.
WeightedGraph random_weighting(int n, int k, Rng& rng);

/// from_weighted(random_weighting(n, k)).
NestedSystem random_nested_system(int n, int k, Rng& rng);

/// random_weighting followed by repair: while some r-clique dominates
/// (1, ..., C(r,2)), one of its edges drops to a random value below
/// min(w, C(r,2)). The result never contains such a clique.
WeightedGraph random_bound_free_weighting(int n, int r, int k, Rng& rng);

}  // namespace rblab
