#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rblab/graph.hpp"
#include "rblab/weighted_graph.hpp"

namespace rblab {

/// Nondecreasing list of nonnegative integers.
class WeightSeq {
 public:
  WeightSeq() = default;
  /// Throws InvalidParameter unless `values` is sorted and nonnegative.
  explicit WeightSeq(std::vector<int> values);
  static WeightSeq sorted_from(std::vector<int> values);
  /// (1, 2, ..., length).
  static WeightSeq staircase(int length);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const WeightSeq&, const WeightSeq&) = default;

 private:
  std::vector<int> values_;
};

/// Pointwise dominance a_i >= b_i. Throws InvalidParameter on length mismatch.
bool dominates(const WeightSeq& a, const WeightSeq& b);

/// Lexicographic comparison a >= b; kept for experiments, nothing in the
/// library uses it.
bool dominates_lexicographic(const WeightSeq& a, const WeightSeq& b);

/// Sorted weights of the pairs inside `vertices` (|vertices| >= 2).
WeightSeq weight_seq(const WeightedGraph& graph, std::span<const Vertex> vertices);

/// Lexicographically smallest s-subset whose weight sequence dominates `bound`.
std::optional<std::vector<Vertex>> has_bounded_clique(const WeightedGraph& graph, int s, const WeightSeq& bound);

/// The constants a_{r,s}, b_{r,s}, c_{r,s} driving the level-by-level packing.
///
///   a_{r,s} = C(r,2) - C(s+1,2) + 2 for 1 <= s <= r-1, a_{r,r} = 1
///   b_{r,r} = (1, ..., C(r,2)), b_{r,2} = (C(r,2)),
///   b_{r,s} = (a_{r,s}, a_{r,s-1}, a_{r,s-1}+1, ..., C(r,2)) otherwise
///   c_{r,s} = b_{r,s+1} minus b_{r,s} as multisets, 2 <= s <= r-1
class BoundTables {
 public:
  /// Throws InvalidParameter for r < 3; verifies all table identities.
  explicit BoundTables(int r);

  int r() const noexcept { return r_; }
  int a(int s) const;
  const WeightSeq& b(int s) const;
  const WeightSeq& c(int s) const;

 private:
  int r_;
  std::vector<int> a_;       // index s = 1..r
  std::vector<WeightSeq> b_;  // index s = 2..r
  std::vector<WeightSeq> c_;  // index s = 2..r-1
};

inline BoundTables bound_tables(int r) { return BoundTables(r); }

}  // namespace rblab
