#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rblab/graph.hpp"

namespace rblab {

/// Complete graph on [n] with an integer weight in [0, k] on every pair.
/// The ceiling k is carried even when no weight reaches it.
class WeightedGraph {
 public:
  WeightedGraph(int n, int k);
  /// `weights` indexed by edge_index; throws InvalidParameter on size or range errors.
  WeightedGraph(int n, int k, std::vector<int> weights);

  int order() const noexcept { return n_; }
  int ceiling() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return weights_.size(); }

  int weight(Vertex a, Vertex b) const;
  int weight_at(std::size_t index) const { return weights_[index]; }
  void set_weight(Vertex a, Vertex b, int w);
  void set_weight_at(std::size_t index, int w);

  std::span<const int> weights() const noexcept { return weights_; }
  std::int64_t total_weight() const noexcept { return total_; }

  /// Copy with vertex v relabelled as perm[v-1].
  WeightedGraph relabelled(std::span<const Vertex> perm) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t index_of(Vertex a, Vertex b) const;

  int n_;
  int k_;
  std::vector<int> weights_;
  std::int64_t total_ = 0;
};

}  // namespace rblab
