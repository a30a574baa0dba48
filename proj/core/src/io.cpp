#include "rblab/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "rblab/error.hpp"

namespace rblab {

namespace {

struct Line {
  int number;
  std::string_view text;
};

// Content lines (not empty, not comments) with their physical numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

int parse_int(std::string_view token, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

int parse_key(std::string_view token, std::string_view key, int line) {
  if (token.substr(0, key.size()) != key) {
    throw ParseError(line, "expected '" + std::string(key) + "<int>', got '" + std::string(token) + "'");
  }
  return parse_int(token.substr(key.size()), line, key.data());
}

struct Header {
  int n;
  int k;
};

Header parse_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) throw ParseError(1, "missing '" + std::string(magic) + "' header");
  if (lines[0].text != magic) {
    throw ParseError(lines[0].number, "expected '" + std::string(magic) + "', got '" + std::string(lines[0].text) + "'");
  }
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, "missing 'n=<int> k=<int>' line");
  const auto tok = tokens(lines[1].text);
  if (tok.size() != 2) throw ParseError(lines[1].number, "expected 'n=<int> k=<int>'");
  const Header h{parse_key(tok[0], "n=", lines[1].number), parse_key(tok[1], "k=", lines[1].number)};
  if (h.n < 1) throw ParseError(lines[1].number, "n must be positive");
  if (h.k < 0) throw ParseError(lines[1].number, "k must be nonnegative");
  return h;
}

void check_pair(int u, int v, int n, int line) {
  if (u >= v) throw ParseError(line, "edge endpoints must satisfy u < v");
  if (u < 1 || v > n) throw ParseError(line, "edge endpoint outside [1, n]");
}

}  // namespace

GraphSystem parse_system(std::string_view text) {
  const auto lines = content_lines(text);
  const Header header = parse_header(lines, "rbsys v1");
  std::vector<SimpleGraph> members;
  members.reserve(static_cast<std::size_t>(header.k));
  for (int i = 1; i <= header.k; ++i) {
    const std::size_t at = static_cast<std::size_t>(i) + 1;
    if (at >= lines.size()) {
      const int line = lines.back().number + 1;
      throw ParseError(line, "missing 'graph " + std::to_string(i) + ":' line");
    }
    const Line& line = lines[at];
    const std::string prefix = "graph " + std::to_string(i) + ":";
    if (line.text.substr(0, prefix.size()) != prefix) {
      throw ParseError(line.number, "expected '" + prefix + "'");
    }
    SimpleGraph g(header.n);
    for (std::string_view tok : tokens(line.text.substr(prefix.size()))) {
      const std::size_t dash = tok.find('-');
      if (dash == std::string_view::npos) throw ParseError(line.number, "expected '<u>-<v>', got '" + std::string(tok) + "'");
      const int u = parse_int(tok.substr(0, dash), line.number, "vertex");
      const int v = parse_int(tok.substr(dash + 1), line.number, "vertex");
      check_pair(u, v, header.n, line.number);
      if (!g.add_edge(u, v)) throw ParseError(line.number, "duplicate edge " + std::string(tok));
    }
    members.push_back(std::move(g));
  }
  if (lines.size() > static_cast<std::size_t>(header.k) + 2) {
    throw ParseError(lines[static_cast<std::size_t>(header.k) + 2].number, "unexpected content after last graph");
  }
  return GraphSystem(header.n, std::move(members));
}

std::string format_system(const GraphSystem& system) {
  std::ostringstream out;
  out << "rbsys v1\n"
      << "n=" << system.order() << " k=" << system.size() << "\n";
  for (int i = 1; i <= system.size(); ++i) {
    out << "graph " << i << ":";
    for (const Edge& e : system.member(i).edges()) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  }
  return out.str();
}

WeightedGraph parse_weighted(std::string_view text) {
  const auto lines = content_lines(text);
  const Header header = parse_header(lines, "rbwt v1");
  WeightedGraph g(header.n, header.k);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto tok = tokens(lines[i].text);
    if (tok.size() != 3) throw ParseError(lines[i].number, "expected '<u> <v> <w>'");
    const int u = parse_int(tok[0], lines[i].number, "vertex");
    const int v = parse_int(tok[1], lines[i].number, "vertex");
    const int w = parse_int(tok[2], lines[i].number, "weight");
    check_pair(u, v, header.n, lines[i].number);
    if (w < 1 || w > header.k) throw ParseError(lines[i].number, "weight must lie in [1, k]");
    if (g.weight(u, v) != 0) throw ParseError(lines[i].number, "duplicate pair");
    g.set_weight(u, v, w);
  }
  return g;
}

std::string format_weighted(const WeightedGraph& graph) {
  std::ostringstream out;
  out << "rbwt v1\n"
      << "n=" << graph.order() << " k=" << graph.ceiling() << "\n";
  for (Vertex u = 1; u <= graph.order(); ++u) {
    for (Vertex v = u + 1; v <= graph.order(); ++v) {
      const int w = graph.weight(u, v);
      if (w > 0) out << u << ' ' << v << ' ' << w << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write " + path.string());
  out << text;
}

}  // namespace rblab
