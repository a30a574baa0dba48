#include "rblab/packing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rblab/error.hpp"

namespace rblab {

int Packing::covered(int s) const {
  if (s == 1) return static_cast<int>(residual.size());
  return s * static_cast<int>(level(s).size());
}

int Packing::min_level() const {
  if (!residual.empty()) return 1;
  for (int s = 2; s <= r - 1; ++s) {
    if (!level(s).empty()) return s;
  }
  return 1;
}

int Packing::level_of(std::span<const Vertex> member) const {
  std::vector<Vertex> key(member.begin(), member.end());
  std::sort(key.begin(), key.end());
  if (key.size() == 1 && std::find(residual.begin(), residual.end(), key[0]) != residual.end()) return 1;
  const auto s = static_cast<int>(key.size());
  if (s < 2 || s > r - 1) return 0;
  const auto& members = level(s);
  return std::find(members.begin(), members.end(), key) != members.end() ? s : 0;
}

Packing greedy_packing(const WeightedGraph& graph, int r) {
  std::vector<Vertex> identity(static_cast<std::size_t>(graph.order()));
  std::iota(identity.begin(), identity.end(), 1);
  return greedy_packing(graph, r, identity);
}

Packing greedy_packing(const WeightedGraph& graph, int r, std::span<const Vertex> priority) {
  if (r < 3) throw InvalidParameter("packing needs r >= 3");
  const int n = graph.order();
  if (n < 2) throw InvalidParameter("packing needs n >= 2");
  if (priority.size() != static_cast<std::size_t>(n)) throw InvalidParameter("priority must list every vertex once");
  const BoundTables tables(r);

  Packing packing;
  packing.r = r;
  packing.levels.assign(static_cast<std::size_t>(r), {});
  std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);

  for (int s = r - 1; s >= 2; --s) {
    const WeightSeq& bound = tables.b(s);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Vertex> free;
      for (Vertex v : priority) {
        if (!taken[static_cast<std::size_t>(v)]) free.push_back(v);
      }
      const auto f = static_cast<int>(free.size());
      if (f < s) break;
      std::vector<int> pick(static_cast<std::size_t>(s));
      std::iota(pick.begin(), pick.end(), 1);
      do {
        std::vector<Vertex> member;
        for (int p : pick) member.push_back(free[static_cast<std::size_t>(p - 1)]);
        if (dominates(weight_seq(graph, member), bound)) {
          std::sort(member.begin(), member.end());
          for (Vertex v : member) taken[static_cast<std::size_t>(v)] = 1;
          packing.levels[static_cast<std::size_t>(s)].push_back(std::move(member));
          grew = true;
          break;
        }
      } while (next_subset(pick, f));
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (!taken[static_cast<std::size_t>(v)]) packing.residual.push_back(v);
  }
  return packing;
}

namespace {

void require_claim_setting(const WeightedGraph& graph, int r, std::int64_t k, int delta) {
  if (delta != 0 && delta != 1) throw ContractViolation("delta must be 0 or 1");
  if (k < choose2(r) + delta) throw ContractViolation("claims need k >= C(r,2) + delta");
  for (int w : graph.weights()) {
    if (w > k) throw ContractViolation("weight exceeds k");
  }
  if (graph.order() >= r && has_bounded_clique(graph, r, WeightSeq::staircase(static_cast<int>(choose2(r))))) {
    throw ContractViolation("graph contains a K_r dominating (1, ..., C(r,2))");
  }
}

std::int64_t star_weight(const WeightedGraph& graph, Vertex v, std::span<const Vertex> set) {
  std::int64_t sum = 0;
  for (Vertex u : set) sum += graph.weight(v, u);
  return sum;
}

}  // namespace

std::vector<VertexClaimViolation> check_claim_vertex(const WeightedGraph& graph, int r, std::int64_t k, int delta,
                                                     const Packing& packing) {
  require_claim_setting(graph, r, k, delta);
  const BoundTables tables(r);
  std::vector<VertexClaimViolation> out;
  std::vector<Vertex> lower(packing.residual);  // vertices of M_1, ..., M_s
  for (int s = 2; s <= r - 1; ++s) {
    for (const auto& member : packing.level(s)) lower.insert(lower.end(), member.begin(), member.end());
    const std::int64_t limit = (s - 1) * k + tables.a(s + 1) - delta;
    for (const auto& member : packing.level(s)) {
      for (Vertex v : lower) {
        if (std::find(member.begin(), member.end(), v) != member.end()) continue;
        const std::int64_t star = star_weight(graph, v, member);
        if (star > limit) out.push_back({s, member, v, star, limit});
      }
    }
  }
  return out;
}

ClaimOutcome check_claim_45(int r, std::int64_t k) {
  if ((r != 4 && r != 5) || k < choose2(r)) return ClaimOutcome::NotApplicable;
  const BoundTables tables(r);
  for (int s = 2; s <= r - 1; ++s) {
    if ((r - 1) * ((s - 1) * k + tables.a(s + 1) - 1) > (r - 2) * s * k) return ClaimOutcome::Fails;
  }
  return ClaimOutcome::Holds;
}

InductionCheck check_claim_induction(const WeightedGraph& graph, int r, std::int64_t k, int delta,
                                     const Packing& packing, std::span<const Vertex> member) {
  if (delta != 0 && delta != 1) throw ContractViolation("delta must be 0 or 1");
  if (k < choose2(r) + delta) throw ContractViolation("claims need k >= C(r,2) + delta");
  const int s = packing.min_level();
  if (packing.level_of(member) != s || static_cast<int>(member.size()) != s) {
    throw ContractViolation("F must be a member of the minimal non-empty level s=" + std::to_string(s));
  }
  const int n = graph.order();
  std::vector<char> inside(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : member) inside[static_cast<std::size_t>(v)] = 1;
  std::int64_t lhs = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (inside[static_cast<std::size_t>(u)] || inside[static_cast<std::size_t>(v)]) lhs += graph.weight(u, v);
    }
  }
  InductionCheck check;
  check.s = s;
  check.lhs = (r - 1) * lhs;
  check.rhs = k * ((r - 1) * choose2(s) + (r - 2) * static_cast<std::int64_t>(s) * (n - s)) +
              (r - 1) * (1 - delta) * static_cast<std::int64_t>(n - s);
  check.holds = check.lhs <= check.rhs;
  return check;
}

}  // namespace rblab

namespace rblab {

std::vector<std::string> audit_packing(const WeightedGraph& graph, const Packing& packing) {
  std::vector<std::string> problems;
  const int n = graph.order();
  const int r = packing.r;
  const BoundTables tables(r);
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  auto mark = [&](Vertex v) {
    if (v < 1 || v > n) {
      problems.push_back("vertex " + std::to_string(v) + " out of range");
    } else if (++seen[static_cast<std::size_t>(v)] == 2) {
      problems.push_back("vertex " + std::to_string(v) + " used twice");
    }
  };
  for (Vertex v : packing.residual) mark(v);
  for (int s = 2; s <= r - 1; ++s) {
    for (const auto& member : packing.level(s)) {
      if (static_cast<int>(member.size()) != s) problems.push_back("member of wrong size at level " + std::to_string(s));
      for (Vertex v : member) mark(v);
      if (static_cast<int>(member.size()) == s && !dominates(weight_seq(graph, member), tables.b(s))) {
        problems.push_back("member at level " + std::to_string(s) + " misses b_{r,s}");
      }
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (seen[static_cast<std::size_t>(v)] == 0) problems.push_back("vertex " + std::to_string(v) + " not covered");
  }
  // Maximality: the graph left after levels r-1..s holds no further b_{r,s} member.
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int s = r - 1; s >= 2; --s) {
    for (const auto& member : packing.level(s)) {
      for (Vertex v : member) used[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> available;
    for (Vertex v = 1; v <= n; ++v) {
      if (!used[static_cast<std::size_t>(v)]) available.push_back(v);
    }
    const auto f = static_cast<int>(available.size());
    if (f < s) continue;
    std::vector<int> pick(static_cast<std::size_t>(s));
    std::iota(pick.begin(), pick.end(), 1);
    do {
      std::vector<Vertex> set;
      for (int p : pick) set.push_back(available[static_cast<std::size_t>(p - 1)]);
      if (dominates(weight_seq(graph, set), tables.b(s))) {
        problems.push_back("level " + std::to_string(s) + " is not maximal");
        break;
      }
    } while (next_subset(pick, f));
  }
  return problems;
}

}  // namespace rblab
