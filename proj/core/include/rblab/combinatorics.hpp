#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rblab {

/// Binomial coefficient; 0 when k < 0 or k > n. Exact for the desk-scale
/// arguments used here (no overflow check beyond int64).
constexpr std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

constexpr std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Advances `subset` (strictly increasing values in [1, n]) to the next
/// subset of the same size in lexicographic order. Returns false after the last.
inline bool next_subset(std::span<int> subset, int n) {
  const int s = static_cast<int>(subset.size());
  int i = s - 1;
  while (i >= 0 && subset[i] == n - (s - 1 - i)) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

/// All s-subsets of [n] in lexicographic order.
inline std::vector<std::vector<int>> all_subsets(int n, int s) {
  std::vector<std::vector<int>> out;
  if (s < 0 || s > n) return out;
  std::vector<int> cur(s);
  for (int i = 0; i < s; ++i) cur[i] = i + 1;
  do {
    out.push_back(cur);
  } while (next_subset(cur, n));
  return out;
}

}  // namespace rblab
