#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rblab/combinatorics.hpp"

namespace rblab {

/// Vertices are 1-based labels in [n].
using Vertex = int;

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes {a, b} into an Edge with u < v. Does not validate.
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Position of {u, v} (u < v) in the colex order 12, 13, 23, 14, 24, 34, ...
/// i.e. ordered by (max endpoint, min endpoint).
constexpr std::size_t edge_index(Vertex u, Vertex v) {
  return static_cast<std::size_t>(choose2(v - 1) + (u - 1));
}

/// Inverse of edge_index.
Edge edge_at(std::size_t index);

/// A simple graph on vertex set [n].
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);
  /// Throws InvalidParameter on loops, out-of-range endpoints or duplicates.
  SimpleGraph(int n, std::span<const Edge> edges);

  static SimpleGraph complete(int n);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge_at(std::size_t index) const { return adjacency_[index] != 0; }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex a, Vertex b);
  bool remove_edge(Vertex a, Vertex b);

  /// Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;

  /// True when every edge of *this is an edge of `other` (same order).
  bool is_subgraph_of(const SimpleGraph& other) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_pair(Vertex a, Vertex b) const;

  int n_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;  // indexed by edge_index
};

/// An ordered list of k graphs on a common [n]; multiset semantics are the
/// caller's concern (all library operations are order-insensitive).
class GraphSystem {
 public:
  GraphSystem(int n, std::vector<SimpleGraph> members);
  /// k empty graphs.
  GraphSystem(int n, int k);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  const std::vector<SimpleGraph>& members() const noexcept { return members_; }
  /// 1-based access to G_i.
  const SimpleGraph& member(int i) const { return members_.at(static_cast<std::size_t>(i - 1)); }
  SimpleGraph& member(int i) { return members_.at(static_cast<std::size_t>(i - 1)); }

  /// Sum of |G_i|.
  std::int64_t total_size() const;
  SimpleGraph union_graph() const;
  /// Number of members containing {a, b}.
  int multiplicity(Vertex a, Vertex b) const;

  friend bool operator==(const GraphSystem&, const GraphSystem&) = default;

 private:
  int n_;
  std::vector<SimpleGraph> members_;
};

/// A small fixed pattern F with an ordered edge list e_1..e_m.
class PatternGraph {
 public:
  PatternGraph(int vertex_count, std::vector<Edge> edges);

  static PatternGraph clique(int r);

  int order() const noexcept { return p_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool is_complete() const noexcept { return edges_.size() == static_cast<std::size_t>(choose2(p_)); }

 private:
  int p_;
  std::vector<Edge> edges_;
};

}  // namespace rblab
