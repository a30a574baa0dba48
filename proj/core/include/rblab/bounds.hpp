#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "rblab/weighted_graph.hpp"

namespace rblab {

using Rational = boost::rational<std::int64_t>;

/// n = k0 (r-1) + m with 0 <= m <= r-2.
struct TuranDecomposition {
  int n = 0;
  int r = 0;
  int k0 = 0;
  int m = 0;
};

TuranDecomposition decompose(int n, int r);

/// C(n,2) - (n-m)/(2(r-1)) (n+m-(r-1)); equals t_{r-1}(n) at the canonical m.
Rational g_r(int m, int n, int r);

/// One failed inequality; `item` is "i", "ii", "iii" or "iv" (s = 0 for "i").
struct TuranInequalityViolation {
  std::string item;
  int r = 0;
  int n = 0;
  int s = 0;
};

struct TuranInequalityReport {
  int r_min = 0;
  int r_max = 0;
  int n_max = 0;
  std::int64_t checks_i = 0;
  std::int64_t checks_ii = 0;
  std::int64_t checks_iii = 0;
  std::int64_t checks_iv = 0;
  std::vector<TuranInequalityViolation> violations;
  /// (ii) re-evaluated over 1 <= s <= max{r-1, n-1}; the upper part of that
  /// range is known to fail and is reported only as a diagnostic.
  std::int64_t checks_ii_wide = 0;
  std::int64_t violations_ii_wide = 0;
  std::optional<TuranInequalityViolation> first_wide_violation;
};

/// Sweeps r in [r_min, r_max], r-1 <= n <= n_max with exact integer arithmetic:
///  (i)   n >= r+1  =>  k2 >= C(r,2) + 1
///  (ii)  1 <= s <= min{r-1, n-1}:  t(n) - t(n-s) >= C(s,2) + (r-2)/(r-1) s(n-s)
///  (iii) 1 <= s <= n-1:  t(n-s) C(n,2) >= C(n-s,2) t(n)
///  (iv)  n >= r+1, 1 <= s <= r-1:
///        (C(r,2)-1)(C(n,2)-C(n-s,2)) >= C(r,2)(C(s,2) + (r-2)/(r-1) s(n-s)) + n - s
TuranInequalityReport verify_turan_inequalities(int r_min, int r_max, int n_max);

/// f0(j) = j(j-1) + (C(r,2)-j) C(r,2): the largest total of a K_r weighting
/// with ceiling C(r,2) whose j-th smallest weight is below j.
std::int64_t f0(int r, int j);

/// Checks f(G0) <= (C(r,2)-1) C(r,2) for a weighting of K_r with ceiling
/// C(r,2). Throws ContractViolation on a wrong order or ceiling, or if the
/// weighting dominates (1, ..., C(r,2)).
bool check_n_equals_r(int r, const WeightedGraph& graph);

struct AlphaHDiagnostics {
  std::optional<Rational> alpha;  // g_r(0,n)/C(n,2), for n >= 2r-2
  std::optional<Rational> h;      // 2 g_r(m, r-1+m)/m, for 2 <= m <= r-2
  Rational a;                     // (C(r,2)-1)(C(n,2)/g_r(m*,n) - 1), m* canonical for n
};

/// Throws InvalidParameter for r < 4, n < r or m outside [0, r-2].
AlphaHDiagnostics alpha_h_diagnostics(int r, int n, int m);

}  // namespace rblab
