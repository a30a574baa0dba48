#include <algorithm>
#include <numeric>
#include <sstream>

#include "rblab/error.hpp"
#include "rblab/packing.hpp"
#include "rblab/sampling.hpp"
#include "rblab/turan.hpp"

namespace rblab {

namespace {

constexpr std::size_t kMaxRecorded = 20;

void note(ClaimSweepReport& report, const std::string& text) {
  if (report.failures.size() < kMaxRecorded) report.failures.push_back(text);
}

std::string describe(int trial, int n, int r, int k, int delta) {
  std::ostringstream out;
  out << "trial " << trial << " (n=" << n << " r=" << r << " k=" << k << " delta=" << delta << ")";
  return out.str();
}

}  // namespace

ClaimSweepReport sweep_claims(std::span<const int> r_values, int trials, int n_max, std::uint64_t seed,
                              bool shuffle_priority) {
  if (r_values.empty()) throw InvalidParameter("sweep needs at least one r");
  for (int r : r_values) {
    if (r < 4) throw InvalidParameter("claim sweep needs r >= 4");
    if (n_max < r + 1) throw InvalidParameter("claim sweep needs n_max >= r+1");
  }
  Rng rng(seed);
  ClaimSweepReport report;
  for (int trial = 0; trial < trials; ++trial) {
    const int r = r_values[static_cast<std::size_t>(trial) % r_values.size()];
    const auto h = static_cast<int>(choose2(r));
    const int n = std::uniform_int_distribution<int>(r + 1, n_max)(rng);
    const Thresholds t = thresholds(n, r);
    const auto k = static_cast<int>(trial % 2 == 0 ? t.k1 : t.k2);
    const WeightedGraph graph = random_bound_free_weighting(n, r, k, rng);

    std::vector<Vertex> priority(static_cast<std::size_t>(n));
    std::iota(priority.begin(), priority.end(), 1);
    if (shuffle_priority) std::shuffle(priority.begin(), priority.end(), rng);
    const Packing packing = greedy_packing(graph, r, priority);
    ++report.trials;

    if (const auto problems = audit_packing(graph, packing); !problems.empty()) {
      ++report.packing_failures;
      note(report, describe(trial, n, r, k, -1) + ": " + problems.front());
    }
    if (check_claim_45(r, k) == ClaimOutcome::Fails) {
      ++report.level_inequality_failures;
      note(report, describe(trial, n, r, k, -1) + ": claim (s-1)k + a_{r,s+1} - 1 <= (r-2)sk/(r-1) fails");
    }

    const int s = packing.min_level();
    std::vector<std::vector<Vertex>> minimal;
    if (s == 1) {
      for (Vertex v : packing.residual) minimal.push_back({v});
    } else {
      minimal = packing.level(s);
    }

    for (int delta = 0; delta <= 1; ++delta) {
      if (k < h + delta) continue;
      const auto violations = check_claim_vertex(graph, r, k, delta, packing);
      auto lower = static_cast<std::int64_t>(packing.residual.size());
      for (int level = 2; level <= r - 1; ++level) {
        lower += packing.covered(level);
        report.vertex_checks += static_cast<std::int64_t>(packing.level(level).size()) * (lower - level);
      }
      report.vertex_violations += static_cast<std::int64_t>(violations.size());
      if (!violations.empty()) {
        const auto& v = violations.front();
        note(report, describe(trial, n, r, k, delta) + ": star of " + std::to_string(v.v) + " into level-" +
                         std::to_string(v.s) + " member weighs " + std::to_string(v.star_weight) + " > " +
                         std::to_string(v.limit));
      }
      for (const auto& member : minimal) {
        const InductionCheck check = check_claim_induction(graph, r, k, delta, packing, member);
        if (s == 1) {
          ++report.level1_checks;
          report.level1_flags += check.holds ? 0 : 1;
        } else {
          ++report.induction_checks;
          if (!check.holds) {
            ++report.induction_violations;
            note(report, describe(trial, n, r, k, delta) + ": deletion bound fails at level " + std::to_string(s));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace rblab
