#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rblab/bounds.hpp"
#include "rblab/combinatorics.hpp"
#include "rblab/error.hpp"
#include "rblab/graph.hpp"
#include "rblab/io.hpp"
#include "rblab/nesting.hpp"
#include "rblab/packing.hpp"
#include "rblab/rainbow.hpp"
#include "rblab/search.hpp"
#include "rblab/turan.hpp"

namespace rblab::cli {
namespace {

struct Globals {
  std::uint64_t seed = 1;
  int threads = 1;
};

// Raised by commands that must end with a nonzero code and no report.
struct Abort {
  int code;
  std::string message;
};

std::string join(const std::vector<int>& values, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

std::string vertex_set(std::span<const Vertex> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

void echo(std::ostream& out, const std::string& cmd, const std::string& params, const Globals& g) {
  out << "# rblab " << cmd;
  if (!params.empty()) out << ' ' << params;
  out << " seed=" << g.seed << " threads=" << g.threads << '\n';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// turan

struct TuranArgs {
  int n = 0;
  int parts = 0;
};

int cmd_turan(const TuranArgs& a, const Globals& g, std::ostream& out) {
  const auto t = turan_number(a.n, a.parts);
  echo(out, "turan", "n=" + std::to_string(a.n) + " parts=" + std::to_string(a.parts), g);
  out << "t=" << t << '\n';
  if (a.n >= 1) {
    for (int p = 1; p <= a.parts; ++p) {
      out << "part " << p << ":";
      for (Vertex v = p; v <= a.n; v += a.parts) out << ' ' << v;
      out << '\n';
    }
    const auto graph = turan_graph(a.n, a.parts);
    out << "edges:";
    for (const auto& e : graph.edges()) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  }
  out << "RESULT t=" << t << '\n';
  return kOk;
}

// gen

struct GenArgs {
  std::string kind;
  int n = 0;
  int r = 0;
  int k = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, const Globals& g, std::ostream& out) {
  const GraphSystem sys = a.kind == "turan" ? gen_turan_system(a.n, a.r, a.k) : gen_clique_system(a.n, a.r, a.k);
  write_text_file(a.out, format_system(sys));
  echo(out, "gen",
       "kind=" + a.kind + " n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) + " k=" + std::to_string(a.k) +
           " out=" + a.out,
       g);
  out << "RESULT total=" << sys.total_size() << '\n';
  out << "RESULT members=" << sys.size() << '\n';
  return kOk;
}

// check

struct CheckArgs {
  std::string in;
  int r = 0;
};

int cmd_check(const CheckArgs& a, const Globals& g, std::ostream& out) {
  if (a.r < 2) throw InvalidParameter("--r must be at least 2");
  const GraphSystem sys = parse_system(read_text_file(a.in));
  const auto pattern = PatternGraph::clique(a.r);
  const auto result = is_rainbow_free(sys, pattern);
  echo(out, "check", "in=" + a.in + " r=" + std::to_string(a.r), g);
  out << "n=" << sys.order() << " k=" << sys.size() << " total=" << sys.total_size() << '\n';
  if (!result.rainbow_free) {
    const auto& cert = *result.certificate;
    out << "rainbow K_" << a.r << " on " << vertex_set(cert.vertex_map) << '\n';
    const auto& edges = pattern.edges();
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const auto e = make_edge(cert.vertex_map[edges[j].u - 1], cert.vertex_map[edges[j].v - 1]);
      out << "  " << e.u << '-' << e.v << " <- graph " << cert.edge_assignment[j] << '\n';
    }
  }
  out << "RESULT rainbow_free=" << yes_no(result.rainbow_free) << '\n';
  return result.rainbow_free ? kOk : kRainbowFound;
}

// nest / to-weighted

struct NestArgs {
  std::string in;
  std::string out;
  bool nest_first = false;
};

int cmd_nest(const NestArgs& a, const Globals& g, std::ostream& out) {
  const GraphSystem sys = parse_system(read_text_file(a.in));
  const NestedSystem nested = nest(sys);
  write_text_file(a.out, format_system(nested.system()));
  echo(out, "nest", "in=" + a.in + " out=" + a.out, g);
  out << "RESULT total=" << nested.system().total_size() << '\n';
  out << "RESULT union=" << nested.system().union_graph().size() << '\n';
  out << "RESULT was_nested=" << yes_no(NestedSystem::is_nested(sys)) << '\n';
  return kOk;
}

int cmd_to_weighted(const NestArgs& a, const Globals& g, std::ostream& out) {
  GraphSystem sys = parse_system(read_text_file(a.in));
  const NestedSystem nested = a.nest_first ? nest(sys) : NestedSystem(std::move(sys));
  const WeightedGraph wg = to_weighted(nested);
  write_text_file(a.out, format_weighted(wg));
  echo(out, "to-weighted", "in=" + a.in + " out=" + a.out + " nest=" + yes_no(a.nest_first), g);
  out << "RESULT total_weight=" << wg.total_weight() << '\n';
  return kOk;
}

// pack

struct PackArgs {
  std::string in;
  int r = 0;
};

int cmd_pack(const PackArgs& a, const Globals& g, std::ostream& out) {
  const WeightedGraph wg = parse_weighted(read_text_file(a.in));
  const Packing packing = greedy_packing(wg, a.r);
  const auto problems = audit_packing(wg, packing);
  echo(out, "pack", "in=" + a.in + " r=" + std::to_string(a.r), g);
  for (int s = a.r - 1; s >= 2; --s) {
    out << "level " << s << ":";
    for (const auto& m : packing.level(s)) out << ' ' << vertex_set(m);
    out << '\n';
  }
  out << "residual:";
  for (Vertex v : packing.residual) out << ' ' << v;
  out << '\n';
  for (const auto& p : problems) out << "problem: " << p << '\n';
  for (int s = a.r - 1; s >= 1; --s) out << "RESULT m" << s << '=' << packing.covered(s) << '\n';
  out << "RESULT min_level=" << packing.min_level() << '\n';
  out << "RESULT problems=" << problems.size() << '\n';
  return problems.empty() ? kOk : kViolation;
}

// verify-bounds

struct BoundsArgs {
  int r_min = 4;
  int r_max = 12;
  int n_max = 400;
};

int cmd_verify_bounds(const BoundsArgs& a, const Globals& g, std::ostream& out) {
  if (a.r_min < 3 || a.r_max < a.r_min) throw InvalidParameter("need 3 <= r-min <= r-max");
  if (a.n_max < a.r_min - 1) throw InvalidParameter("n-max below r-min - 1");
  echo(out, "verify-bounds",
       "r-min=" + std::to_string(a.r_min) + " r-max=" + std::to_string(a.r_max) + " n-max=" + std::to_string(a.n_max),
       g);
  out << std::setw(4) << "r" << std::setw(10) << "i" << std::setw(10) << "ii" << std::setw(10) << "iii"
      << std::setw(10) << "iv" << std::setw(12) << "violations" << '\n';
  std::int64_t checks = 0;
  std::int64_t violations = 0;
  std::int64_t wide_checks = 0;
  std::int64_t wide_violations = 0;
  std::optional<TuranInequalityViolation> first, first_wide;
  for (int r = a.r_min; r <= a.r_max; ++r) {
    const auto rep = verify_turan_inequalities(r, r, a.n_max);
    out << std::setw(4) << r << std::setw(10) << rep.checks_i << std::setw(10) << rep.checks_ii << std::setw(10)
        << rep.checks_iii << std::setw(10) << rep.checks_iv << std::setw(12) << rep.violations.size() << '\n';
    checks += rep.checks_i + rep.checks_ii + rep.checks_iii + rep.checks_iv;
    violations += static_cast<std::int64_t>(rep.violations.size());
    if (!first && !rep.violations.empty()) first = rep.violations.front();
    wide_checks += rep.checks_ii_wide;
    wide_violations += rep.violations_ii_wide;
    if (!first_wide && rep.first_wide_violation) first_wide = rep.first_wide_violation;
  }
  if (first) out << "first violation: (" << first->item << ") r=" << first->r << " n=" << first->n << " s=" << first->s << '\n';
  out << "note: (ii) over s <= max{r-1,n-1}: " << wide_checks << " checks, " << wide_violations << " failures";
  if (first_wide) out << ", first at r=" << first_wide->r << " n=" << first_wide->n << " s=" << first_wide->s;
  out << '\n';
  out << "RESULT checks=" << checks << '\n';
  out << "RESULT violations=" << violations << '\n';
  return violations == 0 ? kOk : kViolation;
}

// verify-claims

struct ClaimsArgs {
  std::vector<int> r_values{4, 5};
  int trials = 1000;
  int n_max = 9;
  bool shuffle = false;
};

int cmd_verify_claims(const ClaimsArgs& a, const Globals& g, std::ostream& out) {
  const auto rep = sweep_claims(a.r_values, a.trials, a.n_max, g.seed, a.shuffle);
  echo(out, "verify-claims",
       "r=" + join(a.r_values) + " trials=" + std::to_string(a.trials) + " n-max=" + std::to_string(a.n_max) +
           " shuffle=" + yes_no(a.shuffle),
       g);
  for (const auto& f : rep.failures) out << "failure: " << f << '\n';
  out << "level-1 induction flags (recorded only): " << rep.level1_flags << " of " << rep.level1_checks << '\n';
  const std::int64_t violations = rep.vertex_violations + rep.level_inequality_failures + rep.packing_failures +
                                  rep.induction_violations;
  out << "RESULT trials=" << rep.trials << '\n';
  out << "RESULT vertex_checks=" << rep.vertex_checks << '\n';
  out << "RESULT vertex_violations=" << rep.vertex_violations << '\n';
  out << "RESULT level_inequality_failures=" << rep.level_inequality_failures << '\n';
  out << "RESULT packing_failures=" << rep.packing_failures << '\n';
  out << "RESULT induction_checks=" << rep.induction_checks << '\n';
  out << "RESULT induction_violations=" << rep.induction_violations << '\n';
  out << "RESULT level1_flags=" << rep.level1_flags << '\n';
  out << "RESULT violations=" << violations << '\n';
  return violations == 0 ? kOk : kViolation;
}

// search

struct SearchArgs {
  int n = 0;
  int r = 0;
  int k = 0;
  std::string mode = "bnb";
  std::uint64_t node_budget = 0;
  double time_budget = 0;
  int symmetry = 2;
  std::string witness;
};

SearchOptions search_options(std::uint64_t nodes, double seconds, int symmetry, const Globals& g) {
  SearchOptions o;
  o.budget.max_nodes = nodes;
  o.budget.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
  o.threads = g.threads;
  o.symmetry = symmetry;
  return o;
}

int cmd_search(const SearchArgs& a, const Globals& g, std::ostream& out) {
  const SearchReport rep = a.mode == "oracle"
                               ? brute_force_optimum(a.n, a.r, a.k)
                               : bnb_optimum(a.n, a.r, a.k, search_options(a.node_budget, a.time_budget, a.symmetry, g));
  if (!rep.complete) {
    throw Abort{kResourceLimit, "search budget exhausted after " + std::to_string(rep.nodes_explored) +
                                    " nodes; best lower bound " + std::to_string(rep.optimum)};
  }
  if (!a.witness.empty()) write_text_file(a.witness, format_weighted(rep.witness));
  echo(out, "search",
       "n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) + " k=" + std::to_string(a.k) + " mode=" + a.mode,
       g);
  if (a.n >= a.r - 1) out << "conjectured=" << conjectured_bound(a.n, a.r, a.k) << '\n';
  out << "RESULT optimum=" << rep.optimum << '\n';
  out << "RESULT nodes=" << rep.nodes_explored << '\n';
  out << "RESULT pruned=" << rep.nodes_pruned << '\n';
  out << "RESULT complete=" << yes_no(rep.complete) << '\n';
  return kOk;
}

// grid

struct GridArgs {
  std::vector<int> r_values;
  int n_min = 1;
  int n_max = 0;
  std::vector<int> k_values;
  std::uint64_t node_budget = 0;
  double time_budget = 0;
  int symmetry = 2;
};

int cmd_grid(const GridArgs& a, const Globals& g, std::ostream& out) {
  KPolicy policy;
  if (!a.k_values.empty()) {
    policy.kind = KPolicy::Kind::Explicit;
    policy.values = a.k_values;
  }
  const auto cells =
      verify_conjecture_grid(a.r_values, a.n_min, a.n_max, policy, search_options(a.node_budget, a.time_budget, a.symmetry, g));
  int equal = 0, above = 0, below = 0, incomplete = 0;
  for (const auto& c : cells) {
    switch (c.status) {
      case CellStatus::Equal: ++equal; break;
      case CellStatus::Above: ++above; break;
      case CellStatus::Below: ++below; break;
      case CellStatus::Incomplete: ++incomplete; break;
    }
  }
  if (above + below == 0 && incomplete > 0) {
    throw Abort{kResourceLimit, std::to_string(incomplete) + " grid cells exhausted the search budget"};
  }
  echo(out, "grid",
       "r=" + join(a.r_values) + " n-min=" + std::to_string(a.n_min) + " n-max=" + std::to_string(a.n_max) +
           " k=" + (a.k_values.empty() ? std::string("thresholds") : join(a.k_values)),
       g);
  out << std::setw(3) << "r" << std::setw(4) << "n" << std::setw(6) << "k" << std::setw(10) << "optimum"
      << std::setw(10) << "bound" << std::setw(12) << "status" << std::setw(12) << "nodes" << '\n';
  for (const auto& c : cells) {
    out << std::setw(3) << c.r << std::setw(4) << c.n << std::setw(6) << c.k << std::setw(10) << c.optimum
        << std::setw(10) << c.bound << std::setw(12) << to_string(c.status) << std::setw(12) << c.nodes << '\n';
  }
  out << "RESULT cells=" << cells.size() << '\n';
  out << "RESULT equal=" << equal << '\n';
  out << "RESULT above=" << above << '\n';
  out << "RESULT below=" << below << '\n';
  out << "RESULT incomplete=" << incomplete << '\n';
  return above + below == 0 ? kOk : kViolation;
}

std::optional<int> threads_from_env() {
  const char* raw = std::getenv("RBLAB_THREADS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw InvalidParameter(std::string("RBLAB_THREADS must be a positive integer, got '") + raw + "'");
  return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow clique systems: constructions, detection and exact extremal search", "rblab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed for property sweeps");
  app.add_option("--threads", g.threads, "Worker threads (RBLAB_THREADS overrides)")->check(CLI::Range(1, 1024));

  TuranArgs turan;
  auto* c_turan = app.add_subcommand("turan", "Turan number t and graph T_parts(n)");
  c_turan->add_option("--n", turan.n)->required();
  c_turan->add_option("--parts", turan.parts)->required();

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Write an extremal system as rbsys v1");
  c_gen->add_option("--kind", gen.kind)->required()->check(CLI::IsMember({"turan", "clique"}));
  c_gen->add_option("--n", gen.n)->required();
  c_gen->add_option("--r", gen.r)->required();
  c_gen->add_option("--k", gen.k)->required();
  c_gen->add_option("--out", gen.out)->required();

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Search a system for a rainbow K_r (exit 1 when found)");
  c_check->add_option("--in", check.in)->required();
  c_check->add_option("--r", check.r)->required();

  NestArgs nest_args;
  auto* c_nest = app.add_subcommand("nest", "Replace a system by its nested form");
  c_nest->add_option("--in", nest_args.in)->required();
  c_nest->add_option("--out", nest_args.out)->required();

  NestArgs tw;
  auto* c_tw = app.add_subcommand("to-weighted", "Convert a nested system to rbwt v1");
  c_tw->add_option("--in", tw.in)->required();
  c_tw->add_option("--out", tw.out)->required();
  c_tw->add_flag("--nest", tw.nest_first, "Nest the input first instead of requiring it to be nested");

  PackArgs pack;
  auto* c_pack = app.add_subcommand("pack", "Greedy level packing of a weighted graph");
  c_pack->add_option("--in", pack.in)->required();
  c_pack->add_option("--r", pack.r)->required();

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("verify-bounds", "Exact sweep of the Turan-number inequalities");
  c_bounds->add_option("--r-min", bounds.r_min);
  c_bounds->add_option("--r-max", bounds.r_max);
  c_bounds->add_option("--n-max", bounds.n_max);

  ClaimsArgs claims;
  auto* c_claims = app.add_subcommand("verify-claims", "Randomized packing-claim sweep");
  c_claims->add_option("--r", claims.r_values)->delimiter(',');
  c_claims->add_option("--trials", claims.trials)->check(CLI::PositiveNumber);
  c_claims->add_option("--n-max", claims.n_max);
  c_claims->add_flag("--shuffle", claims.shuffle, "Randomize the greedy vertex priority");

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Exact optimum of bound-free k-weightings of K_n");
  c_search->add_option("--n", search.n)->required();
  c_search->add_option("--r", search.r)->required();
  c_search->add_option("--k", search.k)->required();
  c_search->add_option("--mode", search.mode)->check(CLI::IsMember({"bnb", "oracle"}));
  c_search->add_option("--node-budget", search.node_budget, "0 = unlimited");
  c_search->add_option("--time-budget", search.time_budget, "Seconds, 0 = unlimited")->check(CLI::NonNegativeNumber);
  c_search->add_option("--symmetry", search.symmetry)->check(CLI::Range(0, 2));
  c_search->add_option("--witness", search.witness, "Write the optimal weighting as rbwt v1");

  GridArgs grid;
  auto* c_grid = app.add_subcommand("grid", "Compare exact optima with max{(C(r,2)-1)C(n,2), k t(n)}");
  c_grid->add_option("--r", grid.r_values)->required()->delimiter(',');
  c_grid->add_option("--n-min", grid.n_min);
  c_grid->add_option("--n-max", grid.n_max)->required();
  c_grid->add_option("--k", grid.k_values, "Explicit k list (default k1,k2)")->delimiter(',');
  c_grid->add_option("--node-budget", grid.node_budget, "Per cell, 0 = unlimited");
  c_grid->add_option("--time-budget", grid.time_budget, "Seconds per cell, 0 = unlimited")->check(CLI::NonNegativeNumber);
  c_grid->add_option("--symmetry", grid.symmetry)->check(CLI::Range(0, 2));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  std::ostringstream report;
  int code = kOk;
  try {
    if (auto env = threads_from_env()) g.threads = *env;
    if (*c_turan) code = cmd_turan(turan, g, report);
    else if (*c_gen) code = cmd_gen(gen, g, report);
    else if (*c_check) code = cmd_check(check, g, report);
    else if (*c_nest) code = cmd_nest(nest_args, g, report);
    else if (*c_tw) code = cmd_to_weighted(tw, g, report);
    else if (*c_pack) code = cmd_pack(pack, g, report);
    else if (*c_bounds) code = cmd_verify_bounds(bounds, g, report);
    else if (*c_claims) code = cmd_verify_claims(claims, g, report);
    else if (*c_search) code = cmd_search(search, g, report);
    else if (*c_grid) code = cmd_grid(grid, g, report);
  } catch (const Abort& a) {
    err << "rblab: " << a.message << '\n';
    return a.code;
  } catch (const ParseError& e) {
    err << "rblab: parse error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ResourceLimit& e) {
    err << "rblab: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "rblab: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "rblab: " << e.what() << '\n';
    return kConfigError;
  }
  if (code == kOk || code == kRainbowFound || code == kViolation) out << report.str();
  return code;
}

}  // namespace rblab::cli
