#include "emu/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "emu/emulator.hpp"
#include "emu/generators.hpp"

namespace emu {

std::vector<Dist> oracle_bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.n)
    throw std::invalid_argument("oracle_bfs_distances: source out of range");
  std::vector<Dist> dist(static_cast<std::size_t>(g.n), kUnreachable);
  std::deque<Vertex> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Vertex v : g.adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<Dist> oracle_dijkstra_distances(const WeightedGraph& h,
                                            Vertex source) {
  if (source < 0 || source >= h.n)
    throw std::invalid_argument("oracle_dijkstra_distances: source out of range");
  // Scan-based: settle the closest unsettled vertex by a full scan. O(n^2),
  // no heap involved.
  const std::size_t n = static_cast<std::size_t>(h.n);
  std::vector<Dist> dist(n, kUnreachable);
  std::vector<char> settled(n, 0);
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t round = 0; round < n; ++round) {
    Vertex best = -1;
    Dist best_d = kUnreachable;
    for (std::size_t v = 0; v < n; ++v) {
      if (settled[v] || dist[v] == kUnreachable) continue;
      if (best < 0 || dist[v] < best_d) {
        best = static_cast<Vertex>(v);
        best_d = dist[v];
      }
    }
    if (best < 0) break;
    settled[static_cast<std::size_t>(best)] = 1;
    for (const WeightedEdge& e : h.adj[static_cast<std::size_t>(best)]) {
      const Dist cand = best_d + e.weight;
      const std::size_t to = static_cast<std::size_t>(e.to);
      if (dist[to] == kUnreachable || cand < dist[to]) dist[to] = cand;
    }
  }
  return dist;
}

namespace {

struct SweepPartial {
  std::int64_t pairs_checked = 0;
  Dist max_err = 0;
  Vertex max_u = -1, max_v = -1;
  std::int64_t violations = 0;
  Vertex viol_u = -1, viol_v = -1;
  bool under = false;
  Vertex under_u = -1, under_v = -1;
  bool mismatch = false;
  Vertex mis_u = -1, mis_v = -1;
};

bool pair_less(Vertex au, Vertex av, Vertex bu, Vertex bv) {
  return au < bu || (au == bu && av < bv);
}

void keep_smaller_pair(Vertex& u, Vertex& v, Vertex cu, Vertex cv) {
  if (u < 0 || pair_less(cu, cv, u, v)) {
    u = cu;
    v = cv;
  }
}

void sweep_sources(const Graph& g, const WeightedGraph& h, Dist bound,
                   Vertex begin, Vertex step, SweepPartial& out) {
  for (Vertex s = begin; s < g.n; s += step) {
    const auto dg = oracle_bfs_distances(g, s);
    const auto dh = oracle_dijkstra_distances(h, s);
    for (Vertex t = s + 1; t < g.n; ++t) {
      const bool rg = is_reachable(dg[static_cast<std::size_t>(t)]);
      const bool rh = is_reachable(dh[static_cast<std::size_t>(t)]);
      if (rg != rh) {
        if (!out.mismatch) out.mismatch = true;
        keep_smaller_pair(out.mis_u, out.mis_v, s, t);
        continue;
      }
      if (!rg) continue;
      ++out.pairs_checked;
      const Dist gap =
          dh[static_cast<std::size_t>(t)] - dg[static_cast<std::size_t>(t)];
      if (gap < 0) {
        out.under = true;
        keep_smaller_pair(out.under_u, out.under_v, s, t);
        continue;
      }
      if (gap > out.max_err ||
          (gap == out.max_err &&
           (out.max_u < 0 || pair_less(s, t, out.max_u, out.max_v)))) {
        if (gap > out.max_err) {
          out.max_err = gap;
          out.max_u = s;
          out.max_v = t;
        } else {
          keep_smaller_pair(out.max_u, out.max_v, s, t);
        }
      }
      if (gap > bound) {
        ++out.violations;
        keep_smaller_pair(out.viol_u, out.viol_v, s, t);
      }
    }
  }
}

}  // namespace

VerificationReport verify_emulator(const Graph& g, const WeightedGraph& h,
                                   Dist bound, int threads, Vertex max_n) {
  if (h.n != g.n)
    throw std::invalid_argument("verify_emulator: vertex count mismatch");
  if (bound < 0) throw std::invalid_argument("verify_emulator: bound must be >= 0");
  if (g.n > max_n)
    throw std::invalid_argument(
        "verify_emulator: n exceeds the APSP cap (" + std::to_string(max_n) +
        "); raise max_n to force");
  const int t_count = std::max(1, std::min<int>(threads, std::max<Vertex>(g.n, 1)));

  std::vector<SweepPartial> partials(static_cast<std::size_t>(t_count));
  if (t_count == 1) {
    sweep_sources(g, h, bound, 0, 1, partials[0]);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < t_count; ++k)
      pool.emplace_back(sweep_sources, std::cref(g), std::cref(h), bound,
                        static_cast<Vertex>(k), static_cast<Vertex>(t_count),
                        std::ref(partials[static_cast<std::size_t>(k)]));
    for (auto& th : pool) th.join();
  }

  VerificationReport rep;
  rep.n = g.n;
  rep.bound = bound;
  rep.edge_count = h.edge_count;
  rep.edges_per_vertex =
      g.n > 0 ? static_cast<double>(h.edge_count) / static_cast<double>(g.n) : 0.0;
  for (const SweepPartial& p : partials) {
    rep.pairs_checked += p.pairs_checked;
    rep.violating_pairs += p.violations;
    if (p.viol_u >= 0)
      keep_smaller_pair(rep.first_violation_u, rep.first_violation_v, p.viol_u,
                        p.viol_v);
    if (p.max_err > rep.max_additive_error) {
      rep.max_additive_error = p.max_err;
      rep.argmax_u = p.max_u;
      rep.argmax_v = p.max_v;
    } else if (p.max_err == rep.max_additive_error && p.max_u >= 0) {
      keep_smaller_pair(rep.argmax_u, rep.argmax_v, p.max_u, p.max_v);
    }
    if (p.under) {
      rep.underestimation = true;
      keep_smaller_pair(rep.under_u, rep.under_v, p.under_u, p.under_v);
    }
    if (p.mismatch) {
      rep.reachability_mismatch = true;
      keep_smaller_pair(rep.mismatch_u, rep.mismatch_v, p.mis_u, p.mis_v);
    }
  }
  return rep;
}

std::int64_t pair_gain_diagnostic(const Graph& g,
                                  const WeightedGraph& h_before,
                                  std::tuple<Vertex, Vertex, Dist> edge,
                                  Dist threshold) {
  const auto [x, y, w] = edge;
  if (x < 0 || x >= g.n || y < 0 || y >= g.n || x == y)
    throw std::invalid_argument("pair_gain_diagnostic: bad edge endpoints");
  if (w < 1) throw std::invalid_argument("pair_gain_diagnostic: weight must be >= 1");
  if (h_before.n != g.n)
    throw std::invalid_argument("pair_gain_diagnostic: vertex count mismatch");
  if (is_reachable(h_before.edge_weight(x, y)))
    throw std::invalid_argument("pair_gain_diagnostic: edge already present");
  if (threshold < 0)
    throw std::invalid_argument("pair_gain_diagnostic: threshold must be >= 0");

  WeightedGraph h_after = h_before;
  h_after.add_or_relax_edge(x, y, w);

  std::int64_t gained = 0;
  for (Vertex s = 0; s < g.n; ++s) {
    const auto dg = oracle_bfs_distances(g, s);
    const auto db = oracle_dijkstra_distances(h_before, s);
    const auto da = oracle_dijkstra_distances(h_after, s);
    for (Vertex t = s + 1; t < g.n; ++t) {
      const std::size_t ti = static_cast<std::size_t>(t);
      if (!is_reachable(dg[ti])) continue;
      const bool before_ok =
          is_reachable(db[ti]) && db[ti] <= dg[ti] + threshold;
      const bool after_ok = is_reachable(da[ti]) && da[ti] <= dg[ti] + threshold;
      if (after_ok && !before_ok) ++gained;
    }
  }
  return gained;
}

namespace {

std::string cluster_fault(std::size_t i, const std::string& why) {
  std::ostringstream os;
  os << "cluster " << i << ": " << why;
  return os.str();
}

}  // namespace

ClusteringCheck verify_clustering(const Graph& g,
                                  const ClusterDecomposition& dec,
                                  double slack) {
  ClusteringCheck chk;
  chk.slack = slack;
  chk.overlap_ratio = dec.overlap_ratio();
  auto fail = [&chk](bool& flag, const std::string& why) {
    flag = false;
    if (chk.failure.empty()) chk.failure = why;
  };

  const std::size_t k = dec.size();
  if (dec.radii.size() != k || dec.balls.size() != k || dec.cores.size() != k ||
      dec.charged.size() != k || dec.uncovered_ball.size() != k ||
      dec.core_of.size() != static_cast<std::size_t>(dec.n)) {
    fail(chk.consistency_ok, "decomposition field sizes disagree");
    return chk;
  }
  if (dec.n != g.n) {
    fail(chk.consistency_ok, "decomposition built for a different vertex count");
    return chk;
  }

  // Coverage: every vertex is in the core it is assigned to.
  for (Vertex v = 0; v < g.n; ++v) {
    const std::int32_t idx = dec.core_of[static_cast<std::size_t>(v)];
    if (idx < 0 || static_cast<std::size_t>(idx) >= k) {
      fail(chk.coverage_ok,
           "vertex " + std::to_string(v) + " not covered by any core");
      break;
    }
    const auto& core = dec.cores[static_cast<std::size_t>(idx)];
    if (!std::binary_search(core.begin(), core.end(), v)) {
      fail(chk.coverage_ok, "vertex " + std::to_string(v) +
                                " missing from its assigned core " +
                                std::to_string(idx));
      break;
    }
  }

  // Consistency: balls and cores are exactly the BFS balls of their radii.
  for (std::size_t i = 0; i < k && chk.consistency_ok; ++i) {
    const auto dist = oracle_bfs_distances(g, dec.centers[i]);
    const Dist ri = dec.radii[i];
    std::vector<Vertex> want_core, want_ball;
    for (Vertex v = 0; v < g.n; ++v) {
      const Dist d = dist[static_cast<std::size_t>(v)];
      if (!is_reachable(d)) continue;
      if (d <= ri) want_core.push_back(v);
      if (d <= 2 * ri) want_ball.push_back(v);
    }
    if (want_core != dec.cores[i]) {
      fail(chk.consistency_ok, cluster_fault(i, "core differs from the exact ball"));
      break;
    }
    if (want_ball != dec.balls[i]) {
      fail(chk.consistency_ok, cluster_fault(i, "ball differs from the exact ball"));
      break;
    }
  }

  // Radius band.
  const double radius_cap =
      static_cast<double>(dec.base_radius) *
      std::pow(2.0, std::ceil(1.0 / std::max(dec.epsilon, 1e-9)));
  for (std::size_t i = 0; i < k; ++i) {
    if (dec.radii[i] < dec.base_radius ||
        static_cast<double>(dec.radii[i]) > radius_cap) {
      fail(chk.radius_band_ok, cluster_fault(i, "radius outside the allowed band"));
      break;
    }
  }

  // Growth trace: newly covered mass must pay for the uncovered ball mass.
  const double threshold =
      std::pow(static_cast<double>(std::max<Vertex>(dec.n, 1)), dec.epsilon);
  std::int64_t charged_total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    charged_total += dec.charged[i];
    if (dec.charged[i] < 1) {
      fail(chk.growth_ok, cluster_fault(i, "covered no new vertex"));
      break;
    }
    if (static_cast<double>(dec.uncovered_ball[i]) >
        threshold * static_cast<double>(dec.charged[i]) + 1e-9) {
      fail(chk.growth_ok, cluster_fault(i, "uncovered ball mass exceeds the growth bound"));
      break;
    }
  }
  if (chk.growth_ok && charged_total != dec.n)
    fail(chk.growth_ok, "charged vertices do not partition the vertex set");

  if (chk.overlap_ratio > slack)
    fail(chk.overlap_ok, "overlap ratio exceeds the configured slack");
  return chk;
}

double spanner_stretch_max(
    const Graph& g,
    const std::vector<std::pair<Vertex, Vertex>>& spanner_edges) {
  const Graph sp = Graph::from_edges(g.n, spanner_edges);
  double worst = 0.0;
  for (Vertex s = 0; s < g.n; ++s) {
    const auto dg = oracle_bfs_distances(g, s);
    const auto ds = oracle_bfs_distances(sp, s);
    for (Vertex t = s + 1; t < g.n; ++t) {
      const std::size_t ti = static_cast<std::size_t>(t);
      if (!is_reachable(dg[ti])) continue;
      if (!is_reachable(ds[ti]))
        return std::numeric_limits<double>::infinity();
      worst = std::max(
          worst, static_cast<double>(ds[ti]) / static_cast<double>(dg[ti]));
    }
  }
  return worst;
}

std::vector<ProbeRow> size_scaling_probe(const std::string& family,
                                         double degree,
                                         const std::vector<Vertex>& sizes,
                                         int levels, double epsilon, double c,
                                         double sample_const,
                                         std::uint64_t seed) {
  std::vector<ProbeRow> rows;
  for (const Vertex size : sizes) {
    if (size < 1)
      throw std::invalid_argument("size_scaling_probe: sizes must be >= 1");
    Graph g;
    std::ostringstream spec;
    if (family == "er") {
      const double p = std::min(1.0, degree / static_cast<double>(size));
      g = er_graph(size, p, seed);
      spec << "er:" << size << ":" << p;
    } else if (family == "grid") {
      const Vertex w = std::max<Vertex>(
          1, static_cast<Vertex>(std::floor(std::sqrt(static_cast<double>(size)))));
      const Vertex h = std::max<Vertex>(1, size / w);
      g = grid_graph(w, h);
      spec << "grid:" << w << ":" << h;
    } else if (family == "cycle") {
      g = cycle_graph(size);
      spec << "cycle:" << size;
    } else if (family == "tree") {
      g = tree_graph(size, seed);
      spec << "tree:" << size;
    } else if (family == "geo") {
      const double radius =
          std::sqrt(degree / (3.14159265358979323846 * static_cast<double>(size)));
      g = geo_graph(size, radius, seed);
      spec << "geo:" << size << ":" << radius;
    } else {
      throw std::invalid_argument("size_scaling_probe: unknown family '" +
                                  family + "'");
    }
    const Emulator h = build_emulator(g, levels, epsilon, c, sample_const, seed);
    ProbeRow row;
    row.spec = spec.str();
    row.n = g.n;
    row.input_edges = g.edge_count;
    row.emulator_edges = h.edge_count();
    row.density = g.n > 0 ? static_cast<double>(h.edge_count()) /
                                static_cast<double>(g.n)
                          : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace emu
