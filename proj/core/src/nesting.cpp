#include "rblab/nesting.hpp"

#include <string>

#include "rblab/error.hpp"

namespace rblab {

NestedSystem::NestedSystem(GraphSystem system) : system_(std::move(system)) {
  if (!is_nested(system_)) throw ContractViolation("system is not nested (H_{i+1} must be a subgraph of H_i)");
}

bool NestedSystem::is_nested(const GraphSystem& system) {
  const auto& members = system.members();
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (!members[i].is_subgraph_of(members[i - 1])) return false;
  }
  return true;
}

NestedSystem nest(const GraphSystem& system) {
  const auto pairs = static_cast<std::size_t>(choose2(system.order()));
  std::vector<int> multiplicity(pairs, 0);
  for (const auto& g : system.members()) {
    for (std::size_t e = 0; e < pairs; ++e) multiplicity[e] += g.has_edge_at(e) ? 1 : 0;
  }
  std::vector<SimpleGraph> members(static_cast<std::size_t>(system.size()), SimpleGraph(system.order()));
  for (std::size_t e = 0; e < pairs; ++e) {
    const Edge edge = edge_at(e);
    for (int i = 0; i < multiplicity[e]; ++i) members[static_cast<std::size_t>(i)].add_edge(edge.u, edge.v);
  }
  return NestedSystem(GraphSystem(system.order(), std::move(members)));
}

WeightedGraph to_weighted(const NestedSystem& system) {
  const GraphSystem& sys = system.system();
  WeightedGraph out(sys.order(), sys.size());
  for (std::size_t e = 0; e < out.edge_count(); ++e) {
    int w = 0;
    for (const auto& g : sys.members()) {
      if (!g.has_edge_at(e)) break;
      ++w;
    }
    out.set_weight_at(e, w);
  }
  return out;
}

NestedSystem from_weighted(const WeightedGraph& graph) {
  std::vector<SimpleGraph> members(static_cast<std::size_t>(graph.ceiling()), SimpleGraph(graph.order()));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge edge = edge_at(e);
    for (int i = 0; i < graph.weight_at(e); ++i) members[static_cast<std::size_t>(i)].add_edge(edge.u, edge.v);
  }
  return NestedSystem(GraphSystem(graph.order(), std::move(members)));
}

NestedSystem truncate(const NestedSystem& system, int keep) {
  const int k = system.size();
  if (keep < 1 || keep > k) {
    throw InvalidParameter("truncate needs 1 <= k' <= " + std::to_string(k) + ", got " + std::to_string(keep));
  }
  const auto& members = system.system().members();
  std::vector<SimpleGraph> head(members.begin(), members.begin() + keep);
  std::int64_t head_size = 0;
  std::int64_t tail_size = 0;
  for (int i = 0; i < k; ++i) {
    (i < keep ? head_size : tail_size) += static_cast<std::int64_t>(members[static_cast<std::size_t>(i)].size());
  }
  if (tail_size * keep > head_size * (k - keep)) {
    throw ContractViolation("dropped tail exceeds the averaging bound");
  }
  return NestedSystem(GraphSystem(system.order(), std::move(head)));
}

}  // namespace rblab
