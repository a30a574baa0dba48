#include "rblab/sequences.hpp"

#include <algorithm>
#include <string>

#include "rblab/error.hpp"

namespace rblab {

WeightSeq::WeightSeq(std::vector<int> values) : values_(std::move(values)) {
  if (!std::is_sorted(values_.begin(), values_.end())) throw InvalidParameter("weight sequence must be nondecreasing");
  if (!values_.empty() && values_.front() < 0) throw InvalidParameter("weight sequence must be nonnegative");
}

WeightSeq WeightSeq::sorted_from(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return WeightSeq(std::move(values));
}

WeightSeq WeightSeq::staircase(int length) {
  std::vector<int> v(static_cast<std::size_t>(std::max(length, 0)));
  for (int i = 0; i < length; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return WeightSeq(std::move(v));
}

bool dominates(const WeightSeq& a, const WeightSeq& b) {
  if (a.size() != b.size()) {
    throw InvalidParameter("dominance needs equal lengths, got " + std::to_string(a.size()) + " and " +
                           std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

bool dominates_lexicographic(const WeightSeq& a, const WeightSeq& b) {
  if (a.size() != b.size()) throw InvalidParameter("dominance needs equal lengths");
  return !std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(), b.values().end());
}

WeightSeq weight_seq(const WeightedGraph& graph, std::span<const Vertex> vertices) {
  if (vertices.size() < 2) throw InvalidParameter("weight sequence needs at least two vertices");
  std::vector<int> w;
  w.reserve(vertices.size() * (vertices.size() - 1) / 2);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) w.push_back(graph.weight(vertices[i], vertices[j]));
  }
  return WeightSeq::sorted_from(std::move(w));
}

std::optional<std::vector<Vertex>> has_bounded_clique(const WeightedGraph& graph, int s, const WeightSeq& bound) {
  if (s < 2 || s > graph.order()) {
    throw InvalidParameter("clique order " + std::to_string(s) + " outside [2, " + std::to_string(graph.order()) + "]");
  }
  if (bound.size() != static_cast<std::size_t>(choose2(s))) {
    throw InvalidParameter("bound length must be C(s,2) = " + std::to_string(choose2(s)));
  }
  std::vector<Vertex> subset(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  do {
    if (dominates(weight_seq(graph, subset), bound)) return subset;
  } while (next_subset(subset, graph.order()));
  return std::nullopt;
}

BoundTables::BoundTables(int r) : r_(r) {
  if (r < 3) throw InvalidParameter("bound tables need r >= 3, got " + std::to_string(r));
  const auto h = static_cast<int>(choose2(r));
  const auto ur = static_cast<std::size_t>(r);
  a_.assign(ur + 1, 0);
  for (int s = 1; s <= r - 1; ++s) a_[static_cast<std::size_t>(s)] = h - static_cast<int>(choose2(s + 1)) + 2;
  a_[ur] = 1;

  b_.assign(ur + 1, WeightSeq{});
  b_[ur] = WeightSeq::staircase(h);
  b_[2] = WeightSeq({h});
  for (int s = 3; s <= r - 1; ++s) {
    std::vector<int> seq{a_[static_cast<std::size_t>(s)]};
    for (int x = a_[static_cast<std::size_t>(s - 1)]; x <= h; ++x) seq.push_back(x);
    b_[static_cast<std::size_t>(s)] = WeightSeq(std::move(seq));
  }

  c_.assign(ur, WeightSeq{});
  for (int s = 2; s <= r - 1; ++s) {
    const auto& big = b_[static_cast<std::size_t>(s + 1)].values();
    const auto& small = b_[static_cast<std::size_t>(s)].values();
    std::vector<int> diff;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(diff));
    if (big.size() != small.size() + diff.size()) {
      throw ContractViolation("b_{r,s} is not contained in b_{r,s+1} at s=" + std::to_string(s));
    }
    c_[static_cast<std::size_t>(s)] = WeightSeq(std::move(diff));
  }

  for (int s = 2; s <= r; ++s) {
    if (b_[static_cast<std::size_t>(s)].size() != static_cast<std::size_t>(choose2(s))) {
      throw ContractViolation("|b_{r,s}| != C(s,2) at s=" + std::to_string(s));
    }
  }
  for (int s = 2; s <= r - 1; ++s) {
    if (a_[static_cast<std::size_t>(s - 1)] - a_[static_cast<std::size_t>(s)] != s) {
      throw ContractViolation("a_{r,s-1} - a_{r,s} != s at s=" + std::to_string(s));
    }
    if (c_[static_cast<std::size_t>(s)].size() != static_cast<std::size_t>(s)) {
      throw ContractViolation("|c_{r,s}| != s at s=" + std::to_string(s));
    }
  }
  if (a_[ur - 1] != 2) throw ContractViolation("a_{r,r-1} != 2");
}

int BoundTables::a(int s) const {
  if (s < 1 || s > r_) throw InvalidParameter("a_{r,s} defined for 1 <= s <= r");
  return a_[static_cast<std::size_t>(s)];
}

const WeightSeq& BoundTables::b(int s) const {
  if (s < 2 || s > r_) throw InvalidParameter("b_{r,s} defined for 2 <= s <= r");
  return b_[static_cast<std::size_t>(s)];
}

const WeightSeq& BoundTables::c(int s) const {
  if (s < 2 || s > r_ - 1) throw InvalidParameter("c_{r,s} defined for 2 <= s <= r-1");
  return c_[static_cast<std::size_t>(s)];
}

}  // namespace rblab
