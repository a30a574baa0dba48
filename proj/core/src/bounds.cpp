#include "rblab/bounds.hpp"

#include <algorithm>

#include "rblab/combinatorics.hpp"
#include "rblab/error.hpp"
#include "rblab/sequences.hpp"
#include "rblab/turan.hpp"

namespace rblab {

TuranDecomposition decompose(int n, int r) {
  if (r < 2) throw InvalidParameter("decomposition needs r >= 2");
  if (n < 0) throw InvalidParameter("decomposition needs n >= 0");
  return {n, r, n / (r - 1), n % (r - 1)};
}

Rational g_r(int m, int n, int r) {
  if (r <= 1) throw InvalidParameter("g_r needs r >= 2");
  return Rational(choose2(n)) -
         Rational(static_cast<std::int64_t>(n - m) * (n + m - (r - 1)), 2 * static_cast<std::int64_t>(r - 1));
}

TuranInequalityReport verify_turan_inequalities(int r_min, int r_max, int n_max) {
  if (r_min < 4 || r_max < r_min) throw InvalidParameter("sweep needs 4 <= r_min <= r_max");
  if (n_max < r_max + 1) throw InvalidParameter("sweep needs n_max >= r_max + 1");
  TuranInequalityReport report;
  report.r_min = r_min;
  report.r_max = r_max;
  report.n_max = n_max;
  auto fail = [&](const char* item, int r, int n, int s) { report.violations.push_back({item, r, n, s}); };

  for (int r = r_min; r <= r_max; ++r) {
    const std::int64_t h = choose2(r);
    const int parts = r - 1;
    for (int n = r - 1; n <= n_max; ++n) {
      const std::int64_t tn = turan_number(n, parts);
      const std::int64_t cn = choose2(n);
      if (n >= r + 1) {
        ++report.checks_i;
        const std::int64_t k2 = ((h - 1) * cn + tn - 1) / tn;
        if (k2 < h + 1) fail("i", r, n, 0);
      }
      // (ii) scaled by (r-1).
      auto ii_holds = [&](int s) {
        const std::int64_t lhs = (r - 1) * (tn - turan_number(n - s, parts));
        const std::int64_t rhs = (r - 1) * choose2(s) + static_cast<std::int64_t>(r - 2) * s * (n - s);
        return lhs >= rhs;
      };
      for (int s = 1; s <= std::min(r - 1, n - 1); ++s) {
        ++report.checks_ii;
        if (!ii_holds(s)) fail("ii", r, n, s);
      }
      for (int s = 1; s <= std::max(r - 1, n - 1); ++s) {
        ++report.checks_ii_wide;
        if (!ii_holds(s)) {
          ++report.violations_ii_wide;
          if (!report.first_wide_violation) report.first_wide_violation = TuranInequalityViolation{"ii", r, n, s};
        }
      }
      for (int s = 1; s <= n - 1; ++s) {
        ++report.checks_iii;
        if (turan_number(n - s, parts) * cn < choose2(n - s) * tn) fail("iii", r, n, s);
      }
      if (n >= r + 1) {
        for (int s = 1; s <= r - 1; ++s) {
          ++report.checks_iv;
          const std::int64_t lhs = (r - 1) * (h - 1) * (cn - choose2(n - s));
          const std::int64_t rhs =
              h * ((r - 1) * choose2(s) + static_cast<std::int64_t>(r - 2) * s * (n - s)) + (r - 1) * (n - s);
          if (lhs < rhs) fail("iv", r, n, s);
        }
      }
    }
  }
  return report;
}

std::int64_t f0(int r, int j) {
  const std::int64_t h = choose2(r);
  if (j < 1 || j > h) throw InvalidParameter("f0(j) defined for 1 <= j <= C(r,2)");
  return static_cast<std::int64_t>(j) * (j - 1) + (h - j) * h;
}

bool check_n_equals_r(int r, const WeightedGraph& graph) {
  if (r < 3) throw InvalidParameter("need r >= 3");
  const auto h = static_cast<int>(choose2(r));
  if (graph.order() != r) throw ContractViolation("graph must have exactly r vertices");
  if (graph.ceiling() != h) throw ContractViolation("weight ceiling must be C(r,2)");
  if (has_bounded_clique(graph, r, WeightSeq::staircase(h))) {
    throw ContractViolation("weighting dominates (1, ..., C(r,2))");
  }
  return graph.total_weight() <= static_cast<std::int64_t>(h - 1) * h;
}

AlphaHDiagnostics alpha_h_diagnostics(int r, int n, int m) {
  if (r < 4) throw InvalidParameter("diagnostics need r >= 4");
  if (n < r) throw InvalidParameter("diagnostics need n >= r");
  if (m < 0 || m > r - 2) throw InvalidParameter("m must lie in [0, r-2]");
  const std::int64_t h = choose2(r);
  AlphaHDiagnostics d;
  if (n >= 2 * r - 2) d.alpha = g_r(0, n, r) / Rational(choose2(n));
  if (m >= 2) d.h = Rational(2) * g_r(m, r - 1 + m, r) / Rational(m);
  const TuranDecomposition dec = decompose(n, r);
  d.a = Rational(h - 1) * (Rational(choose2(n)) / g_r(dec.m, n, r) - Rational(1));
  return d;
}

}  // namespace rblab
