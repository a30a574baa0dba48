#include "rblab/rainbow.hpp"

#include <algorithm>
#include <functional>

#include "rblab/error.hpp"

namespace rblab {

namespace {

// Bipartite matching between pattern edges (left) and member indices (right,
// 0-based). `colors[j]` lists the members holding the image of e_j.
class EdgeMatcher {
 public:
  explicit EdgeMatcher(int members)
      : owner_(static_cast<std::size_t>(members), -1), seen_(static_cast<std::size_t>(members), 0) {}

  // True if every left vertex in [first, colors.size()) can be matched while
  // avoiding the members flagged in `blocked`.
  bool saturates(const std::vector<const std::vector<int>*>& colors, std::size_t first,
                 const std::vector<char>& blocked) {
    touched_.clear();
    for (std::size_t j = first; j < colors.size(); ++j) {
      seen_stamp_++;
      if (!augment(colors, j, blocked)) {
        reset();
        return false;
      }
    }
    reset();
    return true;
  }

 private:
  bool augment(const std::vector<const std::vector<int>*>& colors, std::size_t j, const std::vector<char>& blocked) {
    for (int member : *colors[j]) {
      auto m = static_cast<std::size_t>(member);
      if (blocked[m]) continue;
      if (seen_[m] == seen_stamp_) continue;
      seen_[m] = seen_stamp_;
      if (owner_[m] < 0 || augment(colors, static_cast<std::size_t>(owner_[m]), blocked)) {
        if (owner_[m] < 0) touched_.push_back(m);
        owner_[m] = static_cast<int>(j);
        return true;
      }
    }
    return false;
  }

  void reset() {
    for (std::size_t m : touched_) owner_[m] = -1;
    touched_.clear();
  }

  std::vector<int> owner_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t seen_stamp_ = 0;
  std::vector<std::size_t> touched_;
};

class Detector {
 public:
  Detector(const GraphSystem& system, const PatternGraph& pattern)
      : system_(system),
        pattern_(pattern),
        colors_(static_cast<std::size_t>(choose2(system.order()))),
        matcher_(system.size()),
        blocked_(static_cast<std::size_t>(system.size()), 0) {
    for (int i = 0; i < system.size(); ++i) {
      const SimpleGraph& g = system.members()[static_cast<std::size_t>(i)];
      for (std::size_t e = 0; e < colors_.size(); ++e) {
        if (g.has_edge_at(e)) colors_[e].push_back(i);
      }
    }
    const int p = pattern.order();
    earlier_neighbours_.resize(static_cast<std::size_t>(p) + 1);
    for (const Edge& e : pattern.edges()) earlier_neighbours_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }

  bool vacuous() const { return pattern_.order() > system_.order() || pattern_.size() > system_.size(); }

  // Visits placements in lexicographic order of (image of 1, image of 2, ...),
  // restricted to those whose every pattern edge lands on a union edge.
  // `visit` returns false to stop.
  void for_each_placement(bool subsets_only, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    std::vector<Vertex> image(static_cast<std::size_t>(pattern_.order()), 0);
    std::vector<char> used(static_cast<std::size_t>(system_.order()) + 1, 0);
    bool stop = false;
    std::function<void(int)> place = [&](int i) {
      if (stop) return;
      if (i > pattern_.order()) {
        if (!visit(image)) stop = true;
        return;
      }
      const Vertex start = (subsets_only && i > 1) ? image[static_cast<std::size_t>(i - 2)] + 1 : 1;
      for (Vertex x = start; x <= system_.order() && !stop; ++x) {
        if (used[static_cast<std::size_t>(x)]) continue;
        bool ok = true;
        for (Vertex j : earlier_neighbours_[static_cast<std::size_t>(i)]) {
          const Edge e = make_edge(image[static_cast<std::size_t>(j - 1)], x);
          if (colors_[edge_index(e.u, e.v)].empty()) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(i - 1)] = x;
        used[static_cast<std::size_t>(x)] = 1;
        place(i + 1);
        used[static_cast<std::size_t>(x)] = 0;
      }
    };
    place(1);
  }

  bool placement_is_rainbow(const std::vector<Vertex>& image) {
    bind(image);
    return matcher_.saturates(bound_colors_, 0, blocked_);
  }

  // Lexicographically smallest system of distinct representatives.
  std::vector<int> smallest_assignment(const std::vector<Vertex>& image) {
    bind(image);
    std::vector<int> assignment;
    for (std::size_t j = 0; j < bound_colors_.size(); ++j) {
      for (int member : *bound_colors_[j]) {
        if (blocked_[static_cast<std::size_t>(member)]) continue;
        blocked_[static_cast<std::size_t>(member)] = 1;
        if (matcher_.saturates(bound_colors_, j + 1, blocked_)) {
          assignment.push_back(member + 1);
          break;
        }
        blocked_[static_cast<std::size_t>(member)] = 0;
      }
    }
    for (int member : assignment) blocked_[static_cast<std::size_t>(member - 1)] = 0;
    return assignment;
  }

 private:
  void bind(const std::vector<Vertex>& image) {
    bound_colors_.clear();
    for (const Edge& e : pattern_.edges()) {
      const Edge mapped = make_edge(image[static_cast<std::size_t>(e.u - 1)], image[static_cast<std::size_t>(e.v - 1)]);
      bound_colors_.push_back(&colors_[edge_index(mapped.u, mapped.v)]);
    }
  }

  const GraphSystem& system_;
  const PatternGraph& pattern_;
  std::vector<std::vector<int>> colors_;
  std::vector<std::vector<Vertex>> earlier_neighbours_;
  std::vector<const std::vector<int>*> bound_colors_;
  EdgeMatcher matcher_;
  std::vector<char> blocked_;
};

}  // namespace

RainbowResult is_rainbow_free(const GraphSystem& system, const PatternGraph& pattern) {
  Detector detector(system, pattern);
  if (detector.vacuous()) return {};
  RainbowResult result;
  detector.for_each_placement(pattern.is_complete(), [&](const std::vector<Vertex>& image) {
    if (!detector.placement_is_rainbow(image)) return true;
    result.rainbow_free = false;
    result.certificate = RainbowCertificate{image, detector.smallest_assignment(image)};
    return false;
  });
  return result;
}

bool verify_certificate(const GraphSystem& system, const PatternGraph& pattern, const RainbowCertificate& cert) {
  if (cert.vertex_map.size() != static_cast<std::size_t>(pattern.order())) return false;
  if (cert.edge_assignment.size() != static_cast<std::size_t>(pattern.size())) return false;
  std::vector<Vertex> vs = cert.vertex_map;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (vs.front() < 1 || vs.back() > system.order()) return false;
  std::vector<int> is = cert.edge_assignment;
  std::sort(is.begin(), is.end());
  if (std::adjacent_find(is.begin(), is.end()) != is.end()) return false;
  if (is.front() < 1 || is.back() > system.size()) return false;
  for (std::size_t j = 0; j < pattern.edges().size(); ++j) {
    const Edge& e = pattern.edges()[j];
    const Vertex a = cert.vertex_map[static_cast<std::size_t>(e.u - 1)];
    const Vertex b = cert.vertex_map[static_cast<std::size_t>(e.v - 1)];
    if (!system.member(cert.edge_assignment[j]).has_edge(a, b)) return false;
  }
  return true;
}

std::int64_t count_rainbow_embeddings(const GraphSystem& system, const PatternGraph& pattern) {
  if (system.order() > 10 || pattern.order() > 5) {
    throw ResourceLimit("embedding count limited to n <= 10 and patterns with <= 5 vertices");
  }
  Detector detector(system, pattern);
  if (detector.vacuous()) return 0;
  std::int64_t count = 0;
  detector.for_each_placement(false, [&](const std::vector<Vertex>& image) {
    if (detector.placement_is_rainbow(image)) ++count;
    return true;
  });
  return count;
}

}  // namespace rblab
