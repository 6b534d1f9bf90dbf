#include "emu/spanner.hpp"

#include <algorithm>
#include <stdexcept>

namespace emu {

int ceil_log2_eff(Vertex n) {
  int k = 0;
  Vertex p = 1;
  while (p < n) {
    p *= 2;
    ++k;
  }
  return std::max(1, k);
}

int default_spanner_stretch(Vertex n) { return 2 * ceil_log2_eff(n) - 1; }

namespace {

// Distance from u to v in the partially built spanner, capped at limit.
// Returns limit+1 when the true distance exceeds limit.
Dist bounded_distance(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v,
                      Dist limit, std::vector<Dist>& dist, std::vector<Vertex>& touched) {
  dist[u] = 0;
  touched.push_back(u);
  std::vector<Vertex> frontier{u};
  std::vector<Vertex> next;
  Dist level = 0;
  Dist found = limit + 1;
  while (!frontier.empty() && level < limit) {
    ++level;
    next.clear();
    for (Vertex a : frontier) {
      for (Vertex b : adj[a]) {
        if (dist[b] != kUnreachable) continue;
        dist[b] = level;
        touched.push_back(b);
        if (b == v) {
          found = level;
          goto done;
        }
        next.push_back(b);
      }
    }
    frontier.swap(next);
  }
done:
  for (Vertex w : touched) dist[w] = kUnreachable;
  touched.clear();
  return found;
}

}  // namespace

SpannerResult greedy_multiplicative_spanner(const Graph& g, int t) {
  if (t < 1 || t % 2 == 0) {
    throw std::invalid_argument("spanner stretch t must be odd and >= 1, got " +
                                std::to_string(t));
  }
  SpannerResult result;
  result.stretch_bound = t;
  if (g.n <= 2) {
    result.edges = g.edges();
    return result;
  }

  std::vector<std::pair<Vertex, Vertex>> order = g.edges();
  std::sort(order.begin(), order.end());

  std::vector<std::vector<Vertex>> span_adj(g.n);
  std::vector<Dist> dist(g.n, kUnreachable);
  std::vector<Vertex> touched;
  for (auto [u, v] : order) {
    if (bounded_distance(span_adj, u, v, t, dist, touched) > t) {
      span_adj[u].push_back(v);
      span_adj[v].push_back(u);
      result.edges.emplace_back(u, v);
    }
  }
  return result;
}

}  // namespace emu
