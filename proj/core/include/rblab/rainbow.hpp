#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rblab/graph.hpp"

namespace rblab {

/// Witness of a rainbow copy: pattern vertex i (1-based) maps to
/// vertex_map[i-1]; pattern edge e_j is taken from member edge_assignment[j-1].
struct RainbowCertificate {
  std::vector<Vertex> vertex_map;
  std::vector<int> edge_assignment;
  friend bool operator==(const RainbowCertificate&, const RainbowCertificate&) = default;
};

struct RainbowResult {
  bool rainbow_free = true;
  std::optional<RainbowCertificate> certificate;
};

/// Decides whether `system` contains a rainbow copy of `pattern`.
///
/// For each injective placement of the pattern the member indices are
/// matched to pattern edges by augmenting paths, so a placement is rainbow
/// iff the matching saturates every pattern edge. Clique patterns only
/// enumerate vertex subsets. The certificate is the lexicographically
/// smallest placement, then the lexicographically smallest assignment.
RainbowResult is_rainbow_free(const GraphSystem& system, const PatternGraph& pattern);

/// Independent re-check of a certificate: injectivity of both maps,
/// index range, and membership of every mapped edge.
bool verify_certificate(const GraphSystem& system, const PatternGraph& pattern, const RainbowCertificate& cert);

/// Number of labelled injective placements admitting a rainbow assignment.
/// Throws ResourceLimit unless n <= 10 and the pattern has at most 5 vertices.
std::int64_t count_rainbow_embeddings(const GraphSystem& system, const PatternGraph& pattern);

}  // namespace rblab
