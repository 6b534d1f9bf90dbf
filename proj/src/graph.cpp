#include "emu/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace emu {

namespace {

void check_vertex(Vertex v, Vertex n, const char* what) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Graph Graph::from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    check_vertex(u, n, "vertex");
    check_vertex(v, n, "vertex");
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count += static_cast<std::int64_t>(list.size());
  }
  g.edge_count /= 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edge_count));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

WeightedGraph WeightedGraph::from_edges(
    Vertex n, const std::vector<std::tuple<Vertex, Vertex, Dist>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  WeightedGraph h;
  h.n = n;
  h.adj.assign(n, {});
  for (auto [u, v, w] : edges) {
    check_vertex(u, n, "vertex");
    check_vertex(v, n, "vertex");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (w < 1) throw std::invalid_argument("edge weight must be >= 1");
    h.add_or_relax_edge(u, v, w);
  }
  return h;
}

bool WeightedGraph::add_or_relax_edge(Vertex u, Vertex v, Dist w) {
  // Returns 0 = untouched, 1 = weight lowered, 2 = inserted.
  auto relax_one = [](std::vector<WeightedEdge>& list, Vertex to, Dist weight) -> int {
    auto it = std::lower_bound(list.begin(), list.end(), to,
                               [](const WeightedEdge& e, Vertex t) { return e.to < t; });
    if (it != list.end() && it->to == to) {
      if (it->weight <= weight) return 0;
      it->weight = weight;
      return 1;
    }
    list.insert(it, WeightedEdge{to, weight});
    return 2;
  };
  int ru = relax_one(adj[u], v, w);
  relax_one(adj[v], u, w);
  if (ru == 2) ++edge_count;
  return ru != 0;
}

Dist WeightedGraph::edge_weight(Vertex u, Vertex v) const {
  const auto& list = adj[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const WeightedEdge& e, Vertex t) { return e.to < t; });
  if (it != list.end() && it->to == v) return it->weight;
  return kUnreachable;
}

DistanceVector bfs_distances(const Graph& g, Vertex source) {
  check_vertex(source, g.n, "source");
  DistanceVector d;
  d.source = source;
  d.dist.assign(g.n, kUnreachable);
  d.dist[source] = 0;
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  Dist level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (Vertex u : frontier) {
      for (Vertex v : g.adj[u]) {
        if (d.dist[v] == kUnreachable) {
          d.dist[v] = level;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  return d;
}

DistanceVector dijkstra_distances(const WeightedGraph& h, Vertex source) {
  check_vertex(source, h.n, "source");
  DistanceVector d;
  d.source = source;
  d.dist.assign(h.n, kUnreachable);
  using Item = std::pair<Dist, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  d.dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (du != d.dist[u]) continue;
    for (const WeightedEdge& e : h.adj[u]) {
      Dist cand = du + e.weight;
      if (d.dist[e.to] == kUnreachable || cand < d.dist[e.to]) {
        d.dist[e.to] = cand;
        heap.emplace(cand, e.to);
      }
    }
  }
  return d;
}

std::vector<Vertex> ball(const Graph& g, Vertex v, Dist radius) {
  check_vertex(v, g.n, "center");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  DistanceVector d = bfs_distances(g, v);
  std::vector<Vertex> members;
  for (Vertex u = 0; u < g.n; ++u) {
    if (is_reachable(d.dist[u]) && d.dist[u] <= radius) members.push_back(u);
  }
  return members;
}

Vertex InducedSubgraph::to_local(Vertex global) const {
  auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
  if (it == to_global.end() || *it != global) return -1;
  return static_cast<Vertex>(it - to_global.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
  InducedSubgraph out;
  out.to_global = s;
  std::sort(out.to_global.begin(), out.to_global.end());
  out.to_global.erase(std::unique(out.to_global.begin(), out.to_global.end()),
                      out.to_global.end());
  for (Vertex v : out.to_global) check_vertex(v, g.n, "subset vertex");

  Vertex m = static_cast<Vertex>(out.to_global.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex local_u = 0; local_u < m; ++local_u) {
    Vertex u = out.to_global[local_u];
    for (Vertex v : g.adj[u]) {
      if (v <= u) continue;
      Vertex local_v = out.to_local(v);
      if (local_v >= 0) edges.emplace_back(local_u, local_v);
    }
  }
  out.graph = Graph::from_edges(m, edges);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(g.n, 0);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> comp;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<std::pair<Vertex, Vertex>> spanning_forest(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> tree;
  std::vector<char> seen(g.n, 0);
  std::vector<Vertex> queue;
  for (Vertex start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    queue.clear();
    queue.push_back(start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      for (Vertex v : g.adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          tree.emplace_back(std::min(u, v), std::max(u, v));
          queue.push_back(v);
        }
      }
    }
  }
  return tree;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t) {
  check_vertex(s, g.n, "source");
  check_vertex(t, g.n, "target");
  DistanceVector d = bfs_distances(g, s);
  if (!is_reachable(d.dist[t])) return {};
  std::vector<Vertex> path{t};
  Vertex cur = t;
  while (cur != s) {
    Vertex parent = -1;
    for (Vertex v : g.adj[cur]) {  // adjacency sorted: first hit is lowest id
      if (d.dist[v] == d.dist[cur] - 1) {
        parent = v;
        break;
      }
    }
    cur = parent;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace emu
