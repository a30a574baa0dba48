#include "rblab/weighted_graph.hpp"

#include <string>

#include "rblab/error.hpp"

namespace rblab {

WeightedGraph::WeightedGraph(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw InvalidParameter("weighted graph order must be positive");
  if (k < 0) throw InvalidParameter("weight ceiling must be nonnegative");
  weights_.assign(static_cast<std::size_t>(choose2(n)), 0);
}

WeightedGraph::WeightedGraph(int n, int k, std::vector<int> weights) : WeightedGraph(n, k) {
  if (weights.size() != weights_.size()) {
    throw InvalidParameter("expected " + std::to_string(weights_.size()) + " weights, got " +
                           std::to_string(weights.size()));
  }
  for (std::size_t i = 0; i < weights.size(); ++i) set_weight_at(i, weights[i]);
}

std::size_t WeightedGraph::index_of(Vertex a, Vertex b) const {
  if (a == b || a < 1 || b < 1 || a > n_ || b > n_) {
    throw InvalidParameter("pair " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge of K_" +
                           std::to_string(n_));
  }
  const Edge e = make_edge(a, b);
  return edge_index(e.u, e.v);
}

int WeightedGraph::weight(Vertex a, Vertex b) const { return weights_[index_of(a, b)]; }

void WeightedGraph::set_weight(Vertex a, Vertex b, int w) { set_weight_at(index_of(a, b), w); }

void WeightedGraph::set_weight_at(std::size_t index, int w) {
  if (w < 0 || w > k_) {
    throw InvalidParameter("weight " + std::to_string(w) + " outside [0, " + std::to_string(k_) + "]");
  }
  total_ += w - weights_.at(index);
  weights_[index] = w;
}

WeightedGraph WeightedGraph::relabelled(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw InvalidParameter("permutation size mismatch");
  WeightedGraph out(n_, k_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) {
      out.set_weight(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)], weight(u, v));
    }
  }
  return out;
}

}  // namespace rblab
