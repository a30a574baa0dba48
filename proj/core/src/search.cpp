#include "rblab/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "rblab/combinatorics.hpp"
#include "rblab/error.hpp"
#include "rblab/sequences.hpp"
#include "rblab/turan.hpp"

namespace rblab {

namespace {

using Clock = std::chrono::steady_clock;

void check_search_args(int n, int r, int k) {
  if (n < 1) throw InvalidParameter("search needs n >= 1");
  if (r < 3) throw InvalidParameter("search needs r >= 3");
  if (k < 1) throw InvalidParameter("search needs k >= 1");
}

// Edge indices of every r-subset of [n], in lexicographic subset order.
std::vector<std::vector<int>> clique_edge_lists(int n, int r) {
  std::vector<std::vector<int>> out;
  for (const auto& subset : all_subsets(n, r)) {
    std::vector<int> edges;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        edges.push_back(static_cast<int>(edge_index(subset[i], subset[j])));
      }
    }
    out.push_back(std::move(edges));
  }
  return out;
}

struct Instance {
  int n = 0;
  int r = 0;
  int k = 0;
  int h = 0;
  int edges = 0;
  int cliques = 0;
  std::int64_t cliques_per_edge = 0;
  std::vector<int> clique_edges;  // cliques * h
  std::vector<std::vector<int>> edge_cliques;
  std::vector<int> star_prev;  // index of (1, j-1) for e = (1, j), j >= 3; else -1
  std::vector<int> domain;     // descending
  SearchOptions options;

  Instance(int n_, int r_, int k_, const SearchOptions& opts) : n(n_), r(r_), k(k_), options(opts) {
    h = static_cast<int>(choose2(r));
    edges = static_cast<int>(choose2(n));
    const auto lists = n >= r ? clique_edge_lists(n, r) : std::vector<std::vector<int>>{};
    cliques = static_cast<int>(lists.size());
    cliques_per_edge = binom(n - 2, r - 2);
    edge_cliques.resize(static_cast<std::size_t>(edges));
    for (int c = 0; c < cliques; ++c) {
      for (int e : lists[static_cast<std::size_t>(c)]) {
        clique_edges.push_back(e);
        edge_cliques[static_cast<std::size_t>(e)].push_back(c);
      }
    }
    star_prev.assign(static_cast<std::size_t>(edges), -1);
    for (Vertex j = 3; j <= n; ++j) {
      star_prev[edge_index(1, j)] = static_cast<int>(edge_index(1, j - 1));
    }
    if (options.collapse_heavy && k >= h) {
      domain.push_back(k);
      for (int w = h - 1; w >= 0; --w) domain.push_back(w);
    } else {
      for (int w = k; w >= 0; --w) domain.push_back(w);
    }
  }
};

struct Shared {
  std::atomic<std::int64_t> incumbent{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> pruned{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::mutex mutex;
  std::vector<int> best_weights;
  Clock::time_point start = Clock::now();
};

constexpr std::int64_t kInfeasible = -1;

class Worker {
 public:
  Worker(const Instance& in, Shared& shared)
      : in_(in),
        shared_(shared),
        weights_(static_cast<std::size_t>(in.edges), -1),
        count_(static_cast<std::size_t>(in.cliques), 0),
        sum_(static_cast<std::size_t>(in.cliques), 0),
        hist_(static_cast<std::size_t>(in.cliques) * static_cast<std::size_t>(in.h + 1), 0),
        maxq_(static_cast<std::size_t>(in.cliques), 0),
        cap_(in.k) {
    recompute_all();
  }

  ~Worker() { flush(); }

  void search(int depth) {
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    if (depth == in_.edges) {
      record();
      return;
    }
    const int e = depth;
    const int ub = upper_for(e);
    for (int value : in_.domain) {
      if (value > ub) continue;
      if (!tick()) return;
      assign(e, value);
      if (infeasible_ > 0 || !promising(depth + 1)) {
        ++pruned_;
        unassign(e);
        continue;
      }
      search(depth + 1);
      unassign(e);
    }
  }

  // Enumerates surviving partial assignments of the first `depth` edges.
  void collect(int level, int depth, std::vector<std::vector<int>>& out) {
    if (level == depth) {
      out.emplace_back(weights_.begin(), weights_.begin() + depth);
      return;
    }
    const int ub = upper_for(level);
    for (int value : in_.domain) {
      if (value > ub) continue;
      tick();
      assign(level, value);
      if (infeasible_ > 0 || !promising(level + 1)) {
        ++pruned_;
      } else {
        collect(level + 1, depth, out);
      }
      unassign(level);
    }
  }

  void run_prefix(const std::vector<int>& prefix) {
    for (std::size_t e = 0; e < prefix.size(); ++e) assign(static_cast<int>(e), prefix[e]);
    if (infeasible_ == 0 && promising(static_cast<int>(prefix.size()))) search(static_cast<int>(prefix.size()));
    for (auto e = static_cast<int>(prefix.size()) - 1; e >= 0; --e) unassign(e);
  }

  void flush() {
    shared_.nodes.fetch_add(nodes_, std::memory_order_relaxed);
    shared_.pruned.fetch_add(pruned_, std::memory_order_relaxed);
    nodes_ = 0;
    pruned_ = 0;
  }

 private:
  int upper_for(int e) const {
    int ub = in_.k;
    if (in_.options.symmetry >= 2 && e > 0) ub = std::min(ub, weights_[0]);
    if (in_.options.symmetry >= 1) {
      const int prev = in_.star_prev[static_cast<std::size_t>(e)];
      if (prev >= 0) ub = std::min(ub, weights_[static_cast<std::size_t>(prev)]);
    }
    return ub;
  }

  // Upper bound on any completion, compared against the incumbent.
  bool promising(int assigned) const {
    const std::int64_t incumbent = shared_.incumbent.load(std::memory_order_relaxed);
    const std::int64_t simple = partial_ + static_cast<std::int64_t>(in_.edges - assigned) * cap_;
    if (simple <= incumbent) return false;
    if (in_.options.clique_bound && in_.cliques > 0) {
      if (sum_maxq_ / in_.cliques_per_edge <= incumbent) return false;
    }
    return true;
  }

  bool tick() {
    ++nodes_;
    if ((nodes_ & 4095) != 0) return true;
    const std::uint64_t total = shared_.nodes.fetch_add(nodes_, std::memory_order_relaxed) + nodes_;
    shared_.pruned.fetch_add(pruned_, std::memory_order_relaxed);
    nodes_ = 0;
    pruned_ = 0;
    const auto& budget = in_.options.budget;
    bool over = budget.max_nodes != 0 && total >= budget.max_nodes;
    if (budget.max_time.count() > 0 && Clock::now() - shared_.start >= budget.max_time) over = true;
    if (over) {
      shared_.exhausted = true;
      shared_.stop = true;
    }
    return !shared_.stop.load(std::memory_order_relaxed);
  }

  void record() {
    if (partial_ <= shared_.incumbent.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(shared_.mutex);
    if (partial_ <= shared_.incumbent.load(std::memory_order_relaxed)) return;
    shared_.best_weights = weights_;
    shared_.incumbent.store(partial_, std::memory_order_relaxed);
  }

  void assign(int e, int value) {
    weights_[static_cast<std::size_t>(e)] = value;
    partial_ += value;
    update_cliques(e, value, +1);
    if (e == 0 && in_.options.symmetry >= 2) {
      cap_ = value;
      recompute_all();
    } else {
      refresh(e);
    }
  }

  void unassign(int e) {
    const int value = weights_[static_cast<std::size_t>(e)];
    weights_[static_cast<std::size_t>(e)] = -1;
    partial_ -= value;
    update_cliques(e, value, -1);
    if (e == 0 && in_.options.symmetry >= 2) {
      cap_ = in_.k;
      recompute_all();
    } else {
      refresh(e);
    }
  }

  void update_cliques(int e, int value, int sign) {
    const int bucket = std::min(value, in_.h);
    for (int c : in_.edge_cliques[static_cast<std::size_t>(e)]) {
      auto uc = static_cast<std::size_t>(c);
      count_[uc] += sign;
      sum_[uc] += sign * value;
      hist_[uc * static_cast<std::size_t>(in_.h + 1) + static_cast<std::size_t>(bucket)] += sign;
    }
  }

  void refresh(int e) {
    for (int c : in_.edge_cliques[static_cast<std::size_t>(e)]) set_maxq(c, evaluate(c));
  }

  void recompute_all() {
    for (int c = 0; c < in_.cliques; ++c) set_maxq(c, evaluate(c));
  }

  void set_maxq(int c, std::int64_t value) {
    auto& slot = maxq_[static_cast<std::size_t>(c)];
    if (slot == kInfeasible) {
      --infeasible_;
    } else {
      sum_maxq_ -= slot;
    }
    slot = value;
    if (value == kInfeasible) {
      ++infeasible_;
    } else {
      sum_maxq_ += value;
    }
  }

  // Largest weight clique c can reach when every free edge is at most cap_
  // and the completed sequence fails to dominate (1..h). A sequence fails
  // iff some t in [0, h-1] has at least t+1 entries <= t.
  std::int64_t evaluate(int c) const {
    const auto uc = static_cast<std::size_t>(c);
    const int free = in_.h - count_[uc];
    const int* hist = &hist_[uc * static_cast<std::size_t>(in_.h + 1)];
    const std::int64_t assigned = sum_[uc];
    int at_most = 0;
    if (free == 0) {
      for (int t = 0; t < in_.h; ++t) {
        at_most += hist[t];
        if (at_most >= t + 1) return assigned;
      }
      return kInfeasible;
    }
    std::int64_t best = kInfeasible;
    for (int t = 0; t < in_.h; ++t) {
      at_most += hist[t];
      const int need = std::max(0, t + 1 - at_most);
      if (need > free) continue;
      const std::int64_t value =
          assigned + static_cast<std::int64_t>(need) * std::min(t, cap_) + static_cast<std::int64_t>(free - need) * cap_;
      best = std::max(best, value);
    }
    return best;
  }

  const Instance& in_;
  Shared& shared_;
  std::vector<int> weights_;
  std::vector<int> count_;
  std::vector<std::int64_t> sum_;
  std::vector<int> hist_;
  std::vector<std::int64_t> maxq_;
  std::int64_t sum_maxq_ = 0;
  int infeasible_ = 0;
  std::int64_t partial_ = 0;
  int cap_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pruned_ = 0;
};

// Sorted weights of each clique compared position by position with 1..h.
bool dominating_clique_exists(const std::vector<int>& weights, const std::vector<std::vector<int>>& cliques, int h) {
  std::vector<int> seq(static_cast<std::size_t>(h));
  for (const auto& clique : cliques) {
    for (int i = 0; i < h; ++i) seq[static_cast<std::size_t>(i)] = weights[static_cast<std::size_t>(clique[i])];
    std::sort(seq.begin(), seq.end());
    bool dominates = true;
    for (int i = 0; i < h && dominates; ++i) dominates = seq[static_cast<std::size_t>(i)] >= i + 1;
    if (dominates) return true;
  }
  return false;
}

}  // namespace

bool is_bound_free(const WeightedGraph& graph, int r) {
  if (graph.order() < r) return true;
  return !has_bounded_clique(graph, r, WeightSeq::staircase(static_cast<int>(choose2(r))));
}

WeightedGraph clique_construction(int n, int r, int k) {
  check_search_args(n, r, k);
  const int w = std::min<int>(k, static_cast<int>(choose2(r)) - 1);
  return WeightedGraph(n, k, std::vector<int>(static_cast<std::size_t>(choose2(n)), w));
}

WeightedGraph turan_construction(int n, int r, int k) {
  check_search_args(n, r, k);
  WeightedGraph g(n, k);
  const SimpleGraph t = turan_graph(n, r - 1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (t.has_edge_at(e)) g.set_weight_at(e, k);
  }
  return g;
}

SearchReport brute_force_optimum(int n, int r, int k) {
  check_search_args(n, r, k);
  const auto edges = static_cast<int>(choose2(n));
  double space = 1;
  for (int e = 0; e < edges; ++e) space *= static_cast<double>(k) + 1;
  if (space > 1e8) {
    throw ResourceLimit("brute force needs (k+1)^C(n,2) <= 1e8, got " + std::to_string(space));
  }
  const auto start = Clock::now();
  const auto cliques = n >= r ? clique_edge_lists(n, r) : std::vector<std::vector<int>>{};
  const auto h = static_cast<int>(choose2(r));

  std::vector<int> w(static_cast<std::size_t>(edges), 0);
  std::vector<int> best_w = w;
  std::int64_t total = 0;
  std::int64_t best = -1;
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (total > best && !dominating_clique_exists(w, cliques, h)) {
      best = total;
      best_w = w;
    }
    int i = 0;
    while (i < edges && w[static_cast<std::size_t>(i)] == k) {
      w[static_cast<std::size_t>(i)] = 0;
      total -= k;
      ++i;
    }
    if (i == edges) break;
    ++w[static_cast<std::size_t>(i)];
    ++total;
  }

  SearchReport report;
  report.n = n;
  report.r = r;
  report.k = k;
  report.optimum = best;
  report.witness = WeightedGraph(n, k, best_w);
  report.nodes_explored = visited;
  report.mode = SearchMode::Oracle;
  report.elapsed = Clock::now() - start;
  return report;
}

SearchReport bnb_optimum(int n, int r, int k, const SearchOptions& options) {
  check_search_args(n, r, k);
  if (options.threads < 1) throw InvalidParameter("threads must be positive");
  if (options.symmetry < 0 || options.symmetry > 2) throw InvalidParameter("symmetry level must be 0, 1 or 2");
  const Instance instance(n, r, k, options);
  Shared shared;

  const WeightedGraph seeds[] = {clique_construction(n, r, k), turan_construction(n, r, k)};
  const WeightedGraph& seed = seeds[0].total_weight() >= seeds[1].total_weight() ? seeds[0] : seeds[1];
  shared.incumbent = seed.total_weight();
  shared.best_weights.assign(seed.weights().begin(), seed.weights().end());

  if (options.threads == 1 || instance.edges < 2) {
    Worker worker(instance, shared);
    worker.search(0);
  } else {
    std::vector<std::vector<int>> prefixes;
    {
      Worker splitter(instance, shared);
      const int depth = std::min(instance.edges - 1, 3);
      splitter.collect(0, depth, prefixes);
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t) {
      pool.emplace_back([&] {
        Worker worker(instance, shared);
        for (std::size_t i = next++; i < prefixes.size(); i = next++) worker.run_prefix(prefixes[i]);
      });
    }
    for (auto& th : pool) th.join();
  }

  SearchReport report;
  report.n = n;
  report.r = r;
  report.k = k;
  report.optimum = shared.incumbent.load();
  report.witness = WeightedGraph(n, k, shared.best_weights);
  report.nodes_explored = shared.nodes.load();
  report.nodes_pruned = shared.pruned.load();
  report.mode = SearchMode::BranchAndBound;
  report.complete = !shared.exhausted.load();
  report.elapsed = Clock::now() - shared.start;
  if (report.witness.total_weight() != report.optimum || !is_bound_free(report.witness, r)) {
    throw ContractViolation("branch-and-bound produced an invalid witness");
  }
  return report;
}

std::vector<GridCell> verify_conjecture_grid(std::span<const int> r_values, int n_min, int n_max,
                                             const KPolicy& policy, const SearchOptions& options) {
  std::vector<GridCell> cells;
  for (int r : r_values) {
    for (int n = std::max(r, n_min); n <= n_max; ++n) {
      std::vector<int> ks;
      if (policy.kind == KPolicy::Kind::Thresholds) {
        const Thresholds t = thresholds(n, r);
        for (std::int64_t k : {t.k1, t.k2}) {
          if (k >= 1) ks.push_back(static_cast<int>(k));
        }
      } else {
        ks = policy.values;
      }
      for (int k : ks) {
        const SearchReport report = bnb_optimum(n, r, k, options);
        GridCell cell;
        cell.n = n;
        cell.r = r;
        cell.k = k;
        cell.optimum = report.optimum;
        cell.bound = conjectured_bound(n, r, k);
        cell.nodes = report.nodes_explored;
        cell.seconds = report.elapsed.count();
        if (!report.complete) {
          cell.status = CellStatus::Incomplete;
        } else if (cell.optimum == cell.bound) {
          cell.status = CellStatus::Equal;
        } else {
          cell.status = cell.optimum < cell.bound ? CellStatus::Below : CellStatus::Above;
        }
        cells.push_back(cell);
      }
    }
  }
  return cells;
}

const char* to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Equal: return "EQUAL";
    case CellStatus::Below: return "BELOW";
    case CellStatus::Above: return "ABOVE";
    case CellStatus::Incomplete: return "INCOMPLETE";
  }
  return "?";
}

const char* to_string(SearchMode mode) { return mode == SearchMode::Oracle ? "oracle" : "branch-and-bound"; }

}  // namespace rblab
