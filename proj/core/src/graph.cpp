#include "rblab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rblab/error.hpp"

namespace rblab {

Edge edge_at(std::size_t index) {
  // v is the largest integer with C(v-1, 2) <= index.
  auto v = static_cast<Vertex>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0) + 1;
  while (static_cast<std::size_t>(choose2(v - 1)) > index) --v;
  while (static_cast<std::size_t>(choose2(v)) <= index) ++v;
  return {static_cast<Vertex>(index - static_cast<std::size_t>(choose2(v - 1))) + 1, v};
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 1) throw InvalidParameter("graph order must be positive, got " + std::to_string(n));
  adjacency_.assign(static_cast<std::size_t>(choose2(n)), 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) {
    if (!add_edge(e.u, e.v)) {
      throw InvalidParameter("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  std::fill(g.adjacency_.begin(), g.adjacency_.end(), std::uint8_t{1});
  g.edge_count_ = g.adjacency_.size();
  return g;
}

void SimpleGraph::check_pair(Vertex a, Vertex b) const {
  if (a == b) throw InvalidParameter("loop at vertex " + std::to_string(a));
  if (a < 1 || b < 1 || a > n_ || b > n_) {
    throw InvalidParameter("edge " + std::to_string(a) + "-" + std::to_string(b) + " outside [" +
                           std::to_string(n_) + "]");
  }
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a == b || a < 1 || b < 1 || a > n_ || b > n_) return false;
  const Edge e = make_edge(a, b);
  return adjacency_[edge_index(e.u, e.v)] != 0;
}

bool SimpleGraph::add_edge(Vertex a, Vertex b) {
  check_pair(a, b);
  const Edge e = make_edge(a, b);
  auto& slot = adjacency_[edge_index(e.u, e.v)];
  if (slot) return false;
  slot = 1;
  ++edge_count_;
  return true;
}

bool SimpleGraph::remove_edge(Vertex a, Vertex b) {
  check_pair(a, b);
  const Edge e = make_edge(a, b);
  auto& slot = adjacency_[edge_index(e.u, e.v)];
  if (!slot) return false;
  slot = 0;
  --edge_count_;
  return true;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) {
      if (adjacency_[edge_index(u, v)]) out.push_back({u, v});
    }
  }
  return out;
}

bool SimpleGraph::is_subgraph_of(const SimpleGraph& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    if (adjacency_[i] && !other.adjacency_[i]) return false;
  }
  return true;
}

GraphSystem::GraphSystem(int n, std::vector<SimpleGraph> members) : n_(n), members_(std::move(members)) {
  if (n < 1) throw InvalidParameter("system order must be positive");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].order() != n) {
      throw InvalidParameter("member " + std::to_string(i + 1) + " has order " +
                             std::to_string(members_[i].order()) + ", expected " + std::to_string(n));
    }
  }
}

GraphSystem::GraphSystem(int n, int k) : n_(n) {
  if (n < 1) throw InvalidParameter("system order must be positive");
  if (k < 0) throw InvalidParameter("system size must be nonnegative");
  members_.assign(static_cast<std::size_t>(k), SimpleGraph(n));
}

std::int64_t GraphSystem::total_size() const {
  std::int64_t total = 0;
  for (const auto& g : members_) total += static_cast<std::int64_t>(g.size());
  return total;
}

SimpleGraph GraphSystem::union_graph() const {
  SimpleGraph u(n_);
  for (const auto& g : members_) {
    for (const Edge& e : g.edges()) u.add_edge(e.u, e.v);
  }
  return u;
}

int GraphSystem::multiplicity(Vertex a, Vertex b) const {
  int count = 0;
  for (const auto& g : members_) count += g.has_edge(a, b) ? 1 : 0;
  return count;
}

PatternGraph::PatternGraph(int vertex_count, std::vector<Edge> edges) : p_(vertex_count), edges_(std::move(edges)) {
  if (p_ < 2) throw InvalidParameter("pattern needs at least two vertices");
  if (edges_.empty()) throw InvalidParameter("pattern needs at least one edge");
  // Reuse SimpleGraph's validation for loops, range and duplicates.
  std::vector<Edge> normalized;
  normalized.reserve(edges_.size());
  for (Edge& e : edges_) {
    e = make_edge(e.u, e.v);
    normalized.push_back(e);
  }
  SimpleGraph check(p_, normalized);
}

PatternGraph PatternGraph::clique(int r) {
  if (r < 2) throw InvalidParameter("clique pattern needs r >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= r; ++u) {
    for (Vertex v = u + 1; v <= r; ++v) edges.push_back({u, v});
  }
  return PatternGraph(r, std::move(edges));
}

}  // namespace rblab
