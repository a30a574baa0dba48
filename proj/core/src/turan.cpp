#include "rblab/turan.hpp"

#include <algorithm>
#include <string>

#include "rblab/error.hpp"

namespace rblab {

namespace {

void check_turan_args(int n, int parts) {
  if (parts < 1) throw InvalidParameter("Turan graph needs parts >= 1, got " + std::to_string(parts));
  if (n < 0) throw InvalidParameter("Turan graph needs n >= 0, got " + std::to_string(n));
}

void check_clique_args(int n, int r) {
  if (r < 3) throw InvalidParameter("clique order r must be at least 3, got " + std::to_string(r));
  if (n < r - 1) {
    throw InvalidParameter("need n >= r-1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
}

}  // namespace

std::vector<int> turan_part_sizes(int n, int parts) {
  check_turan_args(n, parts);
  std::vector<int> sizes(static_cast<std::size_t>(parts), 0);
  for (Vertex v = 1; v <= n; ++v) ++sizes[static_cast<std::size_t>(turan_part(v, parts) - 1)];
  return sizes;
}

SimpleGraph turan_graph(int n, int parts) {
  check_turan_args(n, parts);
  if (n < 1) throw InvalidParameter("Turan graph needs n >= 1");
  SimpleGraph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (turan_part(u, parts) != turan_part(v, parts)) g.add_edge(u, v);
    }
  }
  return g;
}

std::int64_t turan_number(int n, int parts) {
  std::int64_t inside = 0;
  for (int size : turan_part_sizes(n, parts)) inside += choose2(size);
  return choose2(n) - inside;
}

Thresholds thresholds(int n, int r) {
  check_clique_args(n, r);
  Thresholds t;
  t.r = r;
  t.n = n;
  t.turan = turan_number(n, r - 1);
  t.clique_bound = (choose2(r) - 1) * choose2(n);
  t.k2 = (t.clique_bound + t.turan - 1) / t.turan;
  t.k1 = t.k2 - 1;
  if (r >= 4 && n >= r + 1 && t.k2 < choose2(r) + 1) {
    throw ContractViolation("k2 < C(r,2)+1 at n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  return t;
}

std::int64_t conjectured_bound(int n, int r, std::int64_t k) {
  check_clique_args(n, r);
  if (k < 1) throw InvalidParameter("k must be positive");
  return std::max((choose2(r) - 1) * choose2(n), k * turan_number(n, r - 1));
}

GraphSystem gen_turan_system(int n, int r, int k) {
  if (r < 2) throw InvalidParameter("Turan system needs r >= 2");
  if (n < 1 || n < r - 1) throw InvalidParameter("Turan system needs n >= max(1, r-1)");
  if (k < 1) throw InvalidParameter("k must be positive");
  return GraphSystem(n, std::vector<SimpleGraph>(static_cast<std::size_t>(k), turan_graph(n, r - 1)));
}

GraphSystem gen_clique_system(int n, int r, int k) {
  if (r < 3) throw InvalidParameter("clique order r must be at least 3");
  if (n < 1) throw InvalidParameter("n must be positive");
  const auto full = static_cast<int>(choose2(r) - 1);
  if (k < full) {
    throw InvalidParameter("clique construction needs k >= C(r,2)-1 = " + std::to_string(full));
  }
  std::vector<SimpleGraph> members(static_cast<std::size_t>(full), SimpleGraph::complete(n));
  members.resize(static_cast<std::size_t>(k), SimpleGraph(n));
  return GraphSystem(n, std::move(members));
}

}  // namespace rblab
