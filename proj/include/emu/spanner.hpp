#pragma once

#include <utility>
#include <vector>

#include "emu/graph.hpp"

namespace emu {

struct SpannerResult {
  std::vector<std::pair<Vertex, Vertex>> edges;  // subset of E(G), (min,max) pairs
  int stretch_bound = 1;
};

// ceil(log2 n) floored at 1, so tiny n never yields degenerate parameters.
int ceil_log2_eff(Vertex n);

// The stretch used throughout: t = 2*ceil(log2 n) - 1.
int default_spanner_stretch(Vertex n);

// Classical greedy t-spanner: scan edges sorted by (min endpoint, max
// endpoint) and keep an edge iff the current spanner distance between its
// endpoints exceeds t. Output has girth > t+1 and stretch <= t for all pairs.
// t must be odd and >= 1. For n <= 2 the spanner is the graph itself.
SpannerResult greedy_multiplicative_spanner(const Graph& g, int t);

}  // namespace emu
