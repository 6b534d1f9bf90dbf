#include "emu/emulator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "emu/rng.hpp"
#include "emu/spanner.hpp"

namespace emu {

namespace {

// ceil(base^e) with a relative nudge so pow() landing a hair above an exact
// integer power does not bump the ceiling.
Dist ceil_pow(double base, double e) {
  const double v = std::pow(base, e);
  return static_cast<Dist>(std::ceil(v - 1e-9 * std::max(1.0, v)));
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

const char* edge_tag_name(EdgeTag tag) {
  switch (tag) {
    case EdgeTag::spanner: return "spanner";
    case EdgeTag::small_cluster: return "small_cluster";
    case EdgeTag::recursive: return "recursive";
    case EdgeTag::greedy: return "greedy";
  }
  return "unknown";
}

bool Emulator::add_edge(Vertex u, Vertex v, Dist weight, EdgeTag tag) {
  if (u < 0 || u >= h_.n || v < 0 || v >= h_.n)
    throw std::invalid_argument("Emulator::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("Emulator::add_edge: self-loop");
  if (weight < 1)
    throw std::invalid_argument("Emulator::add_edge: weight must be >= 1");
  if (!h_.add_or_relax_edge(u, v, weight)) return false;
  tags_[{std::min(u, v), std::max(u, v)}] = tag;  // retag on a lowered weight
  return true;
}

std::array<std::int64_t, kTagCount> Emulator::tag_counts() const {
  std::array<std::int64_t, kTagCount> counts{};
  for (const auto& [key, tag] : tags_) ++counts[static_cast<int>(tag)];
  return counts;
}

std::vector<EmulatorEdge> Emulator::edges() const {
  std::vector<EmulatorEdge> out;
  out.reserve(tags_.size());
  for (const auto& [key, tag] : tags_)
    out.push_back({key.first, key.second,
                   h_.edge_weight(key.first, key.second), tag});
  return out;
}

ExponentSchedule exponent_schedule(int levels) {
  if (levels < 0)
    throw std::invalid_argument("exponent_schedule: levels must be >= 0");
  ExponentSchedule s;
  s.a.resize(static_cast<std::size_t>(levels) + 1);
  s.a[0] = 1.0;
  for (int i = 0; i < levels; ++i)
    s.a[static_cast<std::size_t>(i) + 1] = 1.0 / (6.0 - 4.0 * s.a[i]);
  return s;
}

double ln_eff(Vertex n) {
  return std::max(1.0, std::log(static_cast<double>(std::max<Vertex>(n, 1))));
}

EmulatorParams EmulatorParams::derive(Vertex n, int level, double epsilon,
                                      double c, double sample_const,
                                      std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("EmulatorParams: n must be >= 1");
  if (level < 1) throw std::invalid_argument("EmulatorParams: level must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("EmulatorParams: epsilon must be in (0, 1)");
  if (c < 2.0) throw std::invalid_argument("EmulatorParams: c must be >= 2");
  if (sample_const <= 0.0)
    throw std::invalid_argument("EmulatorParams: sample_const must be positive");

  EmulatorParams p;
  p.n = n;
  p.level = level;
  p.epsilon = epsilon;
  p.c = c;
  p.sample_const = sample_const;
  p.seed = seed;
  p.alpha = exponent_schedule(level).a[static_cast<std::size_t>(level) - 1];
  p.r = std::max<Dist>(
      1, ceil_pow(static_cast<double>(n), 1.0 / (6.0 - 4.0 * p.alpha)));
  p.r_hat = std::max<Dist>(
      p.r, static_cast<Dist>(std::ceil(
               static_cast<double>(p.r) * std::pow(static_cast<double>(n), c * epsilon) -
               1e-9 * static_cast<double>(p.r))));
  return p;
}

bool SampleSet::contains(Vertex v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

SampleSet sample_vertices(const Graph& g, const EmulatorParams& params) {
  SampleSet s;
  s.probability = std::min(
      1.0, params.sample_const * ln_eff(g.n) / static_cast<double>(params.r));
  if (s.probability >= 1.0) {
    s.members.resize(static_cast<std::size_t>(g.n));
    for (Vertex v = 0; v < g.n; ++v) s.members[static_cast<std::size_t>(v)] = v;
    return s;
  }
  std::mt19937_64 rng(mix_seed(params.seed, 2));
  for (Vertex v = 0; v < g.n; ++v)
    if (uniform01(rng) < s.probability) s.members.push_back(v);
  return s;
}

std::vector<std::tuple<Vertex, Vertex, Dist>> handle_small_cluster(
    const Graph& g, const std::vector<Vertex>& ball, const SampleSet& sample,
    std::map<Vertex, std::vector<Dist>>& dist_from) {
  std::vector<Vertex> picked;
  for (Vertex v : ball)
    if (sample.contains(v)) picked.push_back(v);

  std::vector<std::tuple<Vertex, Vertex, Dist>> out;
  for (std::size_t i = 0; i + 1 < picked.size(); ++i) {
    auto it = dist_from.find(picked[i]);
    if (it == dist_from.end())
      it = dist_from.emplace(picked[i], bfs_distances(g, picked[i]).dist).first;
    const auto& d = it->second;
    for (std::size_t j = i + 1; j < picked.size(); ++j) {
      const Dist w = d[static_cast<std::size_t>(picked[j])];
      if (!is_reachable(w))
        throw std::runtime_error(
            "handle_small_cluster: ball spans multiple components");
      out.emplace_back(picked[i], picked[j], w);
    }
  }
  return out;
}

const std::vector<Dist>& DistanceCache::from(Vertex s) {
  auto it = memo_.find(s);
  if (it == memo_.end())
    it = memo_.emplace(s, dijkstra_distances(*h_, s).dist).first;
  return it->second;
}

namespace {

// Every pair on pi[0..k] within error r_hat? pi is a shortest path, so the
// exact graph distance between positions i and j is j - i.
bool prefix_ok(const std::vector<Vertex>& pi, std::size_t k, Dist r_hat,
               DistanceCache& cache) {
  for (std::size_t i = 0; i < k; ++i) {
    const auto& dh = cache.from(pi[i]);
    for (std::size_t j = i + 1; j <= k; ++j) {
      const Dist d = dh[static_cast<std::size_t>(pi[j])];
      if (!is_reachable(d) || d > static_cast<Dist>(j - i) + r_hat) return false;
    }
  }
  return true;
}

// Largest k with prefix_ok(k); feasibility is monotone in k (a bad pair stays
// inside every longer prefix), so binary search applies. k = 0 always holds.
std::size_t prefix_frontier_index(const std::vector<Vertex>& pi, Dist r_hat,
                                  DistanceCache& cache) {
  std::size_t lo = 0, hi = pi.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (prefix_ok(pi, mid, r_hat, cache))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

void validate_shortest_path(const Graph& g, const std::vector<Vertex>& pi) {
  if (pi.empty())
    throw std::invalid_argument("frontier: path must be non-empty");
  for (const Vertex v : pi)
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("frontier: path vertex out of range");
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (!g.has_edge(pi[i], pi[i + 1]))
      throw std::invalid_argument("frontier: consecutive path vertices not adjacent");
  if (pi.size() > 1) {
    const auto d = bfs_distances(g, pi.front());
    if (d[pi.back()] != static_cast<Dist>(pi.size()) - 1)
      throw std::invalid_argument("frontier: not a shortest path");
  }
}

}  // namespace

Vertex find_prefix_frontier(const Graph& g, const WeightedGraph& h,
                            const std::vector<Vertex>& pi, Dist r_hat) {
  validate_shortest_path(g, pi);
  DistanceCache cache(h);
  return pi[prefix_frontier_index(pi, r_hat, cache)];
}

Vertex find_suffix_frontier(const Graph& g, const WeightedGraph& h,
                            const std::vector<Vertex>& pi, Dist r_hat) {
  validate_shortest_path(g, pi);
  DistanceCache cache(h);
  const std::vector<Vertex> rev(pi.rbegin(), pi.rend());
  return rev[prefix_frontier_index(rev, r_hat, cache)];
}

std::vector<GreedyRound> greedy_phase(const Graph& g, Emulator& h, Dist r_hat,
                                      int greedy_constant) {
  if (r_hat < 1)
    throw std::invalid_argument("greedy_phase: r_hat must be >= 1");
  if (greedy_constant < 2)
    throw std::invalid_argument("greedy_phase: greedy constant must be >= 2");
  const Dist bound = static_cast<Dist>(greedy_constant) * r_hat;

  std::vector<GreedyRound> rounds;
  DistanceCache cache(h.graph());
  // Bought edges only shrink emulator distances and never below the graph
  // distance, so a repaired pair stays repaired: one lexicographic sweep
  // leaves no violating pair.
  for (Vertex s = 0; s < g.n; ++s) {
    const DistanceVector dg = bfs_distances(g, s);
    for (Vertex t = s + 1; t < g.n; ++t) {
      if (!is_reachable(dg[t])) continue;
      const Dist dh = cache.from(s)[static_cast<std::size_t>(t)];
      if (is_reachable(dh) && dh - dg[t] <= bound) continue;

      GreedyRound rd;
      rd.s = s;
      rd.t = t;
      rd.pre_error = is_reachable(dh) ? dh - dg[t] : kUnreachable;
      rd.pi = shortest_path(g, s, t);
      const std::size_t px = prefix_frontier_index(rd.pi, r_hat, cache);
      const std::vector<Vertex> rev(rd.pi.rbegin(), rd.pi.rend());
      const std::size_t py =
          rd.pi.size() - 1 - prefix_frontier_index(rev, r_hat, cache);
      rd.x = rd.pi[px];
      rd.y = rd.pi[py];
      if (px >= py) {
        // Crossing or meeting frontiers: the prefix and suffix properties
        // already give d_H(s,t) <= d_G(s,t) + 2 r_hat; nothing to buy.
        rd.degenerate = true;
      } else {
        rd.weight = static_cast<Dist>(py - px);
        rd.edge_added = h.add_edge(rd.x, rd.y, rd.weight, EdgeTag::greedy);
        if (rd.edge_added)
          cache.invalidate();
        else
          rd.degenerate = true;  // edge already present at this weight
      }
      const Dist dh2 = cache.from(s)[static_cast<std::size_t>(t)];
      rd.post_error = is_reachable(dh2) ? dh2 - dg[t] : kUnreachable;
      if (rd.post_error < 0 || rd.post_error > bound)
        throw std::runtime_error(
            "greedy_phase: round failed to repair its pair (internal error)");
      rounds.push_back(std::move(rd));
    }
  }
  return rounds;
}

namespace {

struct BuildCtx {
  std::vector<InstanceReport>* reports = nullptr;
  PhaseTimings* timings = nullptr;
};

Emulator build_connected(const Graph& g, int level, double epsilon, double c,
                         double sample_const, std::uint64_t seed,
                         const std::string& path, int depth,
                         const std::vector<Vertex>& global_ids,
                         int greedy_constant, BuildCtx* ctx);

// Steps 1-4 of the preprocessing phase plus the r_hat raise; fills the
// report fields it is responsible for when rep is non-null.
PreprocessResult preprocess_impl(const Graph& g, const EmulatorParams& params,
                                 Emulator& out, InstanceReport* rep,
                                 const std::string& path, int depth,
                                 const std::vector<Vertex>& global_ids,
                                 int greedy_constant, BuildCtx* ctx) {
  PreprocessResult res;
  double t0 = now_ms();

  const SpannerResult sp =
      greedy_multiplicative_spanner(g, default_spanner_stretch(g.n));
  for (const auto& [u, v] : sp.edges) out.add_edge(u, v, 1, EdgeTag::spanner);
  if (rep) {
    rep->spanner_stretch = sp.stretch_bound;
    rep->spanner_edges = static_cast<std::int64_t>(sp.edges.size());
  }
  if (ctx && ctx->timings) ctx->timings->spanner_ms += now_ms() - t0;

  res.sample = sample_vertices(g, params);
  if (rep) {
    rep->sample_size = static_cast<std::int64_t>(res.sample.members.size());
    rep->sample_probability = res.sample.probability;
  }

  t0 = now_ms();
  res.decomposition = cluster_decompose(g, params.r, params.epsilon, params.seed);
  if (ctx && ctx->timings) ctx->timings->clustering_ms += now_ms() - t0;
  const ClusterDecomposition& dec = res.decomposition;
  if (rep) {
    rep->clusters = static_cast<std::int64_t>(dec.size());
    rep->max_cluster_radius = dec.max_radius();
    rep->overlap_ratio = dec.overlap_ratio();
  }

  // The analysis wants r_hat to absorb every clustering radius with room for
  // a log factor. Tiny instances (including recursive balls) cannot satisfy
  // the formula value, so the effective r_hat is raised to the minimum that
  // restores the invariant and the raise is reported.
  const Dist log2e = static_cast<Dist>(ceil_log2_eff(g.n));
  Dist effective = params.r_hat;
  for (const Dist ri : dec.radii)
    effective = std::max(effective, 4 * ri * log2e);
  res.r_hat_effective = effective;
  if (rep) {
    rep->r_hat = effective;
    rep->r_hat_raised = effective > params.r_hat;
  }

  const double log2d = static_cast<double>(log2e);
  const double small_limit =
      static_cast<double>(params.r) * static_cast<double>(params.r) /
      (log2d * log2d);
  std::map<Vertex, std::vector<Dist>> dist_from;
  for (std::size_t i = 0; i < dec.size(); ++i) {
    if (static_cast<double>(dec.balls[i].size()) <= small_limit) {
      if (rep) ++rep->small_clusters;
      t0 = now_ms();
      for (const auto& [u, v, w] :
           handle_small_cluster(g, dec.balls[i], res.sample, dist_from))
        out.add_edge(u, v, w, EdgeTag::small_cluster);
      if (ctx && ctx->timings) ctx->timings->small_ms += now_ms() - t0;
    } else {
      if (rep) ++rep->large_clusters;
      t0 = now_ms();
      const InducedSubgraph sub = induced_subgraph(g, dec.balls[i]);
      std::vector<Vertex> sub_ids(sub.to_global.size());
      for (std::size_t l = 0; l < sub.to_global.size(); ++l)
        sub_ids[l] = global_ids[static_cast<std::size_t>(sub.to_global[l])];
      const Emulator sub_emu = build_connected(
          sub.graph, params.level - 1, params.epsilon, params.c,
          params.sample_const, mix_seed(params.seed, 3, i),
          path + "/b" + std::to_string(i), depth + 1, sub_ids, greedy_constant,
          ctx);
      for (const EmulatorEdge& e : sub_emu.edges())
        out.add_edge(sub.to_global[static_cast<std::size_t>(e.u)],
                     sub.to_global[static_cast<std::size_t>(e.v)], e.weight,
                     EdgeTag::recursive);
      if (ctx && ctx->timings) ctx->timings->recursion_ms += now_ms() - t0;
    }
  }
  return res;
}

Emulator build_connected(const Graph& g, int level, double epsilon, double c,
                         double sample_const, std::uint64_t seed,
                         const std::string& path, int depth,
                         const std::vector<Vertex>& global_ids,
                         int greedy_constant, BuildCtx* ctx) {
  Emulator out(g.n);
  std::size_t rep_idx = 0;
  const bool reporting = ctx && ctx->reports;
  if (reporting) {
    rep_idx = ctx->reports->size();
    ctx->reports->emplace_back();
  }
  InstanceReport rep;
  rep.path = path;
  rep.depth = depth;
  rep.level = level;
  rep.n = g.n;
  rep.root = global_ids.empty() ? 0 : global_ids.front();

  if (level == 0) {
    rep.r = 0;
    rep.r_hat_formula = 0;
    rep.r_hat = 0;
    for (const auto& [u, v] : spanning_forest(g))
      out.add_edge(u, v, 1, EdgeTag::spanner);
    rep.spanner_edges = out.edge_count();
    if (reporting) (*ctx->reports)[rep_idx] = std::move(rep);
    return out;
  }

  const EmulatorParams params =
      EmulatorParams::derive(g.n, level, epsilon, c, sample_const, seed);
  rep.alpha = params.alpha;
  rep.r = params.r;
  rep.r_hat_formula = params.r_hat;

  const PreprocessResult pre = preprocess_impl(
      g, params, out, &rep, path, depth, global_ids, greedy_constant, ctx);

  const double t0 = now_ms();
  const Dist bound = static_cast<Dist>(greedy_constant) * pre.r_hat_effective;
  // The spanner caps every emulator error at (stretch - 1) * d_G, and d_G is
  // at most twice any eccentricity; when that ceiling fits under the bound,
  // no pair can violate and the sweep is skipped.
  Dist ecc = 0;
  if (g.n > 0) {
    const DistanceVector d0 = bfs_distances(g, 0);
    for (Vertex v = 0; v < g.n; ++v)
      if (is_reachable(d0[v])) ecc = std::max(ecc, d0[v]);
  }
  if (static_cast<Dist>(rep.spanner_stretch - 1) * 2 * ecc <= bound) {
    rep.greedy_skipped = true;
  } else {
    rep.rounds = greedy_phase(g, out, pre.r_hat_effective, greedy_constant);
  }
  if (ctx && ctx->timings) ctx->timings->greedy_ms += now_ms() - t0;

  if (reporting) (*ctx->reports)[rep_idx] = std::move(rep);
  return out;
}

}  // namespace

PreprocessResult preprocess(const Graph& g, const EmulatorParams& params,
                            Emulator& out) {
  if (out.n() != g.n)
    throw std::invalid_argument("preprocess: emulator size mismatch");
  std::vector<Vertex> ids(static_cast<std::size_t>(g.n));
  for (Vertex v = 0; v < g.n; ++v) ids[static_cast<std::size_t>(v)] = v;
  return preprocess_impl(g, params, out, nullptr, "p", 0, ids, 16, nullptr);
}

std::vector<std::tuple<Vertex, Vertex, Dist>> handle_large_cluster(
    const Graph& g, const std::vector<Vertex>& ball, int level,
    const EmulatorParams& params) {
  if (level < 1)
    throw std::invalid_argument("handle_large_cluster: level must be >= 1");
  const InducedSubgraph sub = induced_subgraph(g, ball);
  const Emulator sub_emu = build_connected(
      sub.graph, level - 1, params.epsilon, params.c, params.sample_const,
      params.seed, "b", 0, sub.to_global, 16, nullptr);
  std::vector<std::tuple<Vertex, Vertex, Dist>> out;
  for (const EmulatorEdge& e : sub_emu.edges())
    out.emplace_back(sub.to_global[static_cast<std::size_t>(e.u)],
                     sub.to_global[static_cast<std::size_t>(e.v)], e.weight);
  return out;
}

Emulator build_emulator(const Graph& g, int levels, double epsilon, double c,
                        double sample_const, std::uint64_t seed) {
  return build_emulator_detailed(g, levels, epsilon, c, sample_const, seed)
      .emulator;
}

BuildResult build_emulator_detailed(const Graph& g, int levels, double epsilon,
                                    double c, double sample_const,
                                    std::uint64_t seed, int greedy_constant) {
  if (levels < 0)
    throw std::invalid_argument("build_emulator: levels must be >= 0");
  if (greedy_constant < 2)
    throw std::invalid_argument("build_emulator: greedy constant must be >= 2");

  BuildResult res{Emulator(g.n), {}, {}, 0};
  BuildCtx ctx{&res.instances, &res.timings};

  const auto comps = connected_components(g);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const InducedSubgraph sub = induced_subgraph(g, comps[k]);
    const Emulator ce = build_connected(
        sub.graph, levels, epsilon, c, sample_const, mix_seed(seed, 1, k),
        "c" + std::to_string(k), 0, sub.to_global, greedy_constant, &ctx);
    for (const EmulatorEdge& e : ce.edges())
      res.emulator.add_edge(sub.to_global[static_cast<std::size_t>(e.u)],
                            sub.to_global[static_cast<std::size_t>(e.v)],
                            e.weight, e.tag);
  }

  for (const InstanceReport& inst : res.instances)
    if (inst.depth == 0)
      res.default_bound = std::max(
          res.default_bound,
          inst.level >= 1 ? static_cast<Dist>(greedy_constant) * inst.r_hat
                          : static_cast<Dist>(inst.n) - 1);
  return res;
}

}  // namespace emu
