#pragma once

#include <iosfwd>
#include <string>

#include "emu/graph.hpp"

namespace emu {

// Line-oriented "u v" pairs. Lines starting with '#' are comments; a
// "# n=<k>" comment pins the vertex count (otherwise n = 1 + max id).
// Duplicate and reversed duplicate lines collapse to one edge.
// Malformed lines and self-loops throw with the offending line number.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_string(const std::string& text);
Graph load_edge_list_file(const std::string& path);

void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

// Same format with a weight column: "u v w".
WeightedGraph load_weighted_edge_list(std::istream& in);
WeightedGraph load_weighted_edge_list_file(const std::string& path);

void save_weighted_edge_list(const WeightedGraph& h, std::ostream& out);
void save_weighted_edge_list_file(const WeightedGraph& h, const std::string& path);

}  // namespace emu
