#pragma once

#include <cstdint>
#include <string>

#include "emu/graph.hpp"

namespace emu {

// Deterministic graph generators; all randomness derives from the seed.
Graph er_graph(Vertex n, double p, std::uint64_t seed);
Graph grid_graph(Vertex width, Vertex height);
Graph cycle_graph(Vertex n);
// Uniform random recursive tree: vertex v >= 1 attaches to a uniform earlier
// vertex.
Graph tree_graph(Vertex n, std::uint64_t seed);
// Random geometric graph on the unit square with the given connection radius.
Graph geo_graph(Vertex n, double radius, std::uint64_t seed);

// Spec grammar: er:<n>:<p> | grid:<w>:<h> | cycle:<n> | tree:<n> |
// geo:<n>:<radius>. Unknown or malformed specs raise std::invalid_argument.
Graph generate(const std::string& spec, std::uint64_t seed);

}  // namespace emu
