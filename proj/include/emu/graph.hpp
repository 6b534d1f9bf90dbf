#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace emu {

using Vertex = std::int32_t;
using Dist = std::int64_t;

// Explicit sentinel for unreachable vertices; never a large finite value.
inline constexpr Dist kUnreachable = -1;

inline bool is_reachable(Dist d) { return d >= 0; }

// Unweighted undirected simple graph with dense vertex ids 0..n-1.
// Neighbor lists are sorted and duplicate-free.
struct Graph {
  Vertex n = 0;
  std::vector<std::vector<Vertex>> adj;
  std::int64_t edge_count = 0;

  // Builds from an edge list; parallel edges collapse, self-loops throw.
  static Graph from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
};

struct WeightedEdge {
  Vertex to;
  Dist weight;
};

// Undirected simple graph with positive integer weights.
struct WeightedGraph {
  Vertex n = 0;
  std::vector<std::vector<WeightedEdge>> adj;
  std::int64_t edge_count = 0;

  static WeightedGraph from_edges(Vertex n,
                                  const std::vector<std::tuple<Vertex, Vertex, Dist>>& edges);

  // Inserts u-v or lowers its weight to w if an edge already exists with a
  // larger weight. Returns true if the adjacency changed.
  bool add_or_relax_edge(Vertex u, Vertex v, Dist w);
  Dist edge_weight(Vertex u, Vertex v) const;  // kUnreachable if absent
};

struct DistanceVector {
  Vertex source = 0;
  std::vector<Dist> dist;

  Dist operator[](Vertex v) const { return dist[v]; }
};

// Exact hop distances from source (unweighted BFS).
DistanceVector bfs_distances(const Graph& g, Vertex source);

// Exact weighted distances from source (binary-heap Dijkstra).
DistanceVector dijkstra_distances(const WeightedGraph& h, Vertex source);

// { u : dist_g(v, u) <= radius }, sorted.
std::vector<Vertex> ball(const Graph& g, Vertex v, Dist radius);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_global;  // local id -> original id (sorted ascending)

  Vertex to_local(Vertex global) const;  // -1 if not in the subgraph
};

// Subgraph induced by s; local ids follow the sorted order of s.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

// Components sorted by smallest member; each component sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// One spanning tree per component, edges as (min,max) pairs in discovery order.
std::vector<std::pair<Vertex, Vertex>> spanning_forest(const Graph& g);

// A shortest s-t path as a vertex sequence, built from BFS distances with
// lowest-id parent tie-breaking. Empty if t is unreachable from s.
std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t);

}  // namespace emu
