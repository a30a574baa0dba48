#pragma once

#include "rblab/graph.hpp"
#include "rblab/weighted_graph.hpp"

namespace rblab {

/// A system with H_k ⊆ H_{k-1} ⊆ ... ⊆ H_1.
class NestedSystem {
 public:
  /// Throws ContractViolation if `system` is not nested.
  explicit NestedSystem(GraphSystem system);

  static bool is_nested(const GraphSystem& system);

  const GraphSystem& system() const noexcept { return system_; }
  int order() const noexcept { return system_.order(); }
  int size() const noexcept { return system_.size(); }

  friend bool operator==(const NestedSystem&, const NestedSystem&) = default;

 private:
  GraphSystem system_;
};

/// H_i = {e : e lies in at least i members}. Keeps the union and the total size.
NestedSystem nest(const GraphSystem& system);

/// w(e) = largest i with e in H_i (0 if none); the weight ceiling is k.
WeightedGraph to_weighted(const NestedSystem& system);

/// H_i = {e : w(e) >= i} for i = 1..k.
NestedSystem from_weighted(const WeightedGraph& graph);

/// First `keep` members. Checks that the dropped tail carries at most
/// (k - keep)/keep times the head's total size.
NestedSystem truncate(const NestedSystem& system, int keep);

}  // namespace rblab
