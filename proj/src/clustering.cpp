#include "emu/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emu {

std::int64_t ClusterDecomposition::overlap_sum() const {
  std::int64_t total = 0;
  for (const auto& b : balls) total += static_cast<std::int64_t>(b.size());
  return total;
}

double ClusterDecomposition::overlap_ratio() const {
  if (n == 0) return 0.0;
  return static_cast<double>(overlap_sum()) / static_cast<double>(n);
}

Dist ClusterDecomposition::max_radius() const {
  Dist m = 0;
  for (Dist r : radii) m = std::max(m, r);
  return m;
}

ClusterDecomposition cluster_decompose(const Graph& g, Dist r, double epsilon,
                                       std::uint64_t seed) {
  (void)seed;  // deterministic; see header
  if (r < 1) throw std::invalid_argument("cluster_decompose: radius must be >= 1");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("cluster_decompose: epsilon must be positive");

  ClusterDecomposition dec;
  dec.n = g.n;
  dec.base_radius = r;
  dec.epsilon = epsilon;
  dec.core_of.assign(g.n, -1);

  const double threshold =
      std::pow(static_cast<double>(std::max<Vertex>(g.n, 1)), epsilon);

  std::vector<char> covered(g.n, 0);
  Vertex cursor = 0;  // min uncovered id never decreases

  std::vector<Dist> dist(g.n, kUnreachable);
  std::vector<Vertex> order;  // visited vertices, BFS order
  std::vector<Vertex> frontier, next;

  while (true) {
    while (cursor < g.n && covered[cursor]) ++cursor;
    if (cursor >= g.n) break;
    const Vertex v = cursor;

    // BFS from v, expanded lazily as the trial radius grows.
    order.clear();
    frontier.clear();
    dist[v] = 0;
    order.push_back(v);
    frontier.push_back(v);
    Dist depth = 0;

    auto expand_to = [&](Dist target) {
      while (depth < target && !frontier.empty()) {
        next.clear();
        for (Vertex u : frontier)
          for (Vertex w : g.adj[u])
            if (dist[w] == kUnreachable) {
              dist[w] = depth + 1;
              next.push_back(w);
              order.push_back(w);
            }
        frontier.swap(next);
        ++depth;
      }
    };
    auto uncovered_within = [&](Dist d) {
      std::int64_t cnt = 0;
      for (Vertex u : order)
        if (dist[u] <= d && !covered[u]) ++cnt;
      return cnt;
    };

    // Double rho while the uncovered mass of B(v, 2 rho) exceeds n^eps times
    // that of B(v, rho). The uncovered counts grow by > n^eps per doubling and
    // are capped at n, so this stops within ceil(1/eps) rounds.
    Dist rho = r;
    std::int64_t in_cnt = 0, out_cnt = 0;
    while (true) {
      expand_to(2 * rho);
      in_cnt = uncovered_within(rho);
      out_cnt = uncovered_within(2 * rho);
      if (static_cast<double>(out_cnt) <=
          threshold * static_cast<double>(in_cnt))
        break;
      rho *= 2;
    }

    const auto idx = static_cast<std::int32_t>(dec.centers.size());
    std::vector<Vertex> ball2, core;
    for (Vertex u : order) {
      if (dist[u] <= 2 * rho) ball2.push_back(u);
      if (dist[u] <= rho) core.push_back(u);
    }
    std::sort(ball2.begin(), ball2.end());
    std::sort(core.begin(), core.end());

    std::int64_t newly = 0;
    for (Vertex u : core)
      if (!covered[u]) {
        covered[u] = 1;
        dec.core_of[u] = idx;
        ++newly;
      }

    dec.centers.push_back(v);
    dec.radii.push_back(rho);
    dec.charged.push_back(newly);
    dec.uncovered_ball.push_back(out_cnt);
    dec.balls.push_back(std::move(ball2));
    dec.cores.push_back(std::move(core));

    for (Vertex u : order) dist[u] = kUnreachable;
  }

  return dec;
}

std::int32_t core_of(const ClusterDecomposition& dec, Vertex v) {
  if (v < 0 || v >= dec.n)
    throw std::out_of_range("core_of: vertex out of range");
  const std::int32_t idx = dec.core_of[v];
  if (idx < 0)
    throw std::runtime_error("core_of: vertex not covered by any core");
  return idx;
}

}  // namespace emu
