#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rblab/graph.hpp"
#include "rblab/weighted_graph.hpp"

namespace rblab {

// rbsys v1 (LF line endings; lines starting with '#' and empty lines are ignored):
//   rbsys v1
//   n=<int> k=<int>
//   graph 1: <u>-<v> <u>-<v> ...      (one line per member, i = 1..k, u < v)
//
// rbwt v1:
//   rbwt v1
//   n=<int> k=<int>
//   <u> <v> <w>                        (every pair with w > 0, sorted by (u, v))
//
// Parsers throw ParseError with the 1-based physical line number.

GraphSystem parse_system(std::string_view text);
std::string format_system(const GraphSystem& system);

WeightedGraph parse_weighted(std::string_view text);
std::string format_weighted(const WeightedGraph& graph);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace rblab
