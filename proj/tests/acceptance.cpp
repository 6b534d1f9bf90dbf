// Acceptance gate: ten numbered criteria, one PASS/FAIL line each, nonzero
// exit if any fails. Tolerances are pinned in the printed lines.

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "emu/clustering.hpp"
#include "emu/emulator.hpp"
#include "emu/generators.hpp"
#include "emu/graph.hpp"
#include "emu/io.hpp"
#include "emu/rng.hpp"
#include "emu/spanner.hpp"
#include "emu/verify.hpp"
#include "oracles.hpp"

using namespace emu;

namespace {

const std::vector<std::string> kMatrixSpecs = {
    "er:256:0.04", "er:512:0.02", "er:1024:0.01",
    "grid:32:32",  "cycle:512",   "geo:400:0.08"};
const std::vector<std::uint64_t> kMatrixSeeds = {0, 1, 2};
const std::vector<int> kMatrixLevels = {1, 2, 3};

bool report(int number, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s %s\n", number, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  return ok;
}

// Canonical artifact bytes: the weighted edge list plus the sidecar-relevant
// construction record, so determinism is judged on what a user would see.
std::string artifact_bytes(const BuildResult& res) {
  std::ostringstream out;
  save_weighted_edge_list(res.emulator.graph(), out);
  out << "default_bound " << res.default_bound << "\n";
  for (const auto& rep : res.instances) {
    out << rep.path << " n=" << rep.n << " level=" << rep.level
        << " r=" << rep.r << " r_hat=" << rep.r_hat
        << " raised=" << (rep.r_hat_raised ? 1 : 0)
        << " spanner=" << rep.spanner_edges << " sample=" << rep.sample_size
        << " clusters=" << rep.clusters << " rounds=" << rep.rounds.size();
    for (const auto& rd : rep.rounds)
      out << " [" << rd.s << "," << rd.t << "," << rd.x << "," << rd.y << ","
          << rd.weight << "]";
    out << "\n";
  }
  return out.str();
}

struct MatrixOutcome {
  int instances = 0;
  int violation_free = 0;
  int underestimation_free = 0;
  std::int64_t rounds_seen = 0;
  std::int64_t rounds_in_bound = 0;
  int deterministic = 0;
  std::string first_failure;
};

MatrixOutcome run_matrix() {
  MatrixOutcome out;
  for (const auto& spec : kMatrixSpecs)
    for (std::uint64_t seed : kMatrixSeeds)
      for (int levels : kMatrixLevels) {
        ++out.instances;
        Graph g = generate(spec, seed);
        BuildResult a = build_emulator_detailed(g, levels, 0.25, 3.0, 3.0, seed);
        BuildResult b = build_emulator_detailed(g, levels, 0.25, 3.0, 3.0, seed);
        if (artifact_bytes(a) == artifact_bytes(b)) ++out.deterministic;

        VerificationReport rep =
            verify_emulator(g, a.emulator.graph(), a.default_bound);
        const bool clean =
            rep.violating_pairs == 0 && !rep.reachability_mismatch;
        if (clean) ++out.violation_free;
        if (!rep.underestimation) ++out.underestimation_free;
        if ((!clean || rep.underestimation) && out.first_failure.empty()) {
          std::ostringstream why;
          why << spec << " seed " << seed << " levels " << levels
              << ": violations=" << rep.violating_pairs << " under="
              << (rep.underestimation ? 1 : 0) << " mismatch="
              << (rep.reachability_mismatch ? 1 : 0) << " pair ("
              << rep.first_violation_u << "," << rep.first_violation_v << ")";
          out.first_failure = why.str();
        }

        for (const auto& inst : a.instances)
          for (const auto& rd : inst.rounds) {
            ++out.rounds_seen;
            if (rd.post_error >= 0 && rd.post_error <= 2 * inst.r_hat)
              ++out.rounds_in_bound;
          }
      }
  return out;
}

// The matrix instances never trigger greedy rounds at the default constants:
// r_hat dwarfs the graph diameters at these sizes, so the bound
// 16*r_hat is met before the greedy phase starts. To check per-round repair
// against real rounds, seed each downscaled family instance with only its
// spanning forest (the worst correct starting emulator) and run the greedy
// phase at tight parameters (constant 2, small r_hat).
struct GreedyStress {
  std::int64_t rounds_seen = 0;
  std::int64_t rounds_in_bound = 0;
  int instances = 0;
  int repaired = 0;
  std::string first_failure;
};

GreedyStress run_greedy_stress() {
  GreedyStress out;
  const std::vector<std::string> specs = {"er:96:0.0625", "er:128:0.046875",
                                          "grid:8:12", "cycle:96",
                                          "geo:80:0.15"};
  for (const auto& spec : specs)
    for (std::uint64_t seed : {std::uint64_t{0}, std::uint64_t{1}})
      for (Dist r_hat : {Dist{1}, Dist{3}}) {
        ++out.instances;
        Graph g = generate(spec, seed);
        Emulator h(g.n);
        for (auto [u, v] : spanning_forest(g))
          h.add_edge(u, v, 1, EdgeTag::spanner);
        std::vector<GreedyRound> rounds = greedy_phase(g, h, r_hat, 2);
        bool all_in = true;
        for (const auto& rd : rounds) {
          ++out.rounds_seen;
          if (rd.post_error >= 0 && rd.post_error <= 2 * r_hat)
            ++out.rounds_in_bound;
          else
            all_in = false;
        }
        VerificationReport rep = verify_emulator(g, h.graph(), 2 * r_hat);
        const bool clean = rep.violating_pairs == 0 && !rep.underestimation &&
                           !rep.reachability_mismatch;
        if (clean) ++out.repaired;
        if ((!clean || !all_in) && out.first_failure.empty()) {
          std::ostringstream why;
          why << spec << " seed " << seed << " r_hat " << r_hat
              << ": violations=" << rep.violating_pairs;
          out.first_failure = why.str();
        }
      }
  return out;
}

bool criterion_4() {
  const std::vector<Vertex> sizes = {256, 512, 1024, 2048};
  auto rows = size_scaling_probe("er", 8.0, sizes, 3, 0.25, 3.0, 3.0, 0);
  bool ok = rows.size() == sizes.size();
  std::ostringstream detail;
  detail << "emulator density on er p=8/n at n={256..2048}:";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    detail << " " << rows[i].density;
    if (i > 0) {
      const double ratio = rows[i].density / rows[i - 1].density;
      if (!(ratio <= 1.25)) ok = false;
    }
  }
  detail << " (each doubling ratio <= 1.25)";
  return report(4, ok, detail.str());
}

bool criterion_5() {
  std::mt19937_64 rng(mix_seed(0, 0xC5));
  int pass = 0;
  std::string first;
  for (int draw = 0; draw < 100; ++draw) {
    const int fam = static_cast<int>(uniform01(rng) * 5);
    const Vertex n = 20 + static_cast<Vertex>(uniform01(rng) * 281);
    const std::uint64_t gseed =
        static_cast<std::uint64_t>(uniform01(rng) * 1e6);
    const Dist r = 1 + static_cast<Dist>(uniform01(rng) * 8);
    const double eps_choices[5] = {0.2, 0.25, 0.3, 0.4, 0.5};
    const double eps = eps_choices[static_cast<int>(uniform01(rng) * 5)];
    Graph g;
    switch (fam) {
      case 0: g = er_graph(n, 10.0 / n, gseed); break;
      case 1: {
        const Vertex w = static_cast<Vertex>(std::sqrt(static_cast<double>(n)));
        g = grid_graph(w, n / w);
        break;
      }
      case 2: g = cycle_graph(std::max<Vertex>(3, n)); break;
      case 3: g = tree_graph(n, gseed); break;
      case 4:
        g = geo_graph(n, std::sqrt(9.0 / (3.141592653589793 * n)), gseed);
        break;
    }
    const double slack = 4.0 * std::pow(static_cast<double>(g.n), eps);
    ClusterDecomposition dec = cluster_decompose(g, r, eps, gseed);
    ClusteringCheck chk = verify_clustering(g, dec, slack);
    if (chk.pass())
      ++pass;
    else if (first.empty())
      first = chk.failure;
  }
  std::ostringstream detail;
  detail << "clustering coverage/consistency exact, overlap <= 4*n^eps on "
         << pass << "/100 random draws";
  if (!first.empty()) detail << "; first failure: " << first;
  return report(5, pass == 100, detail.str());
}

bool criterion_6() {
  int pass = 0, total = 0;
  std::ostringstream detail;
  double worst_stretch_margin = 1e9;
  for (const auto& spec : kMatrixSpecs)
    for (std::uint64_t seed : kMatrixSeeds) {
      ++total;
      Graph g = generate(spec, seed);
      const int t = default_spanner_stretch(g.n);
      SpannerResult res = greedy_multiplicative_spanner(g, t);
      const double stretch = spanner_stretch_max(g, res.edges);
      const bool ok = stretch <= static_cast<double>(t) &&
                      res.edges.size() <= static_cast<std::size_t>(3 * g.n);
      if (ok) ++pass;
      worst_stretch_margin =
          std::min(worst_stretch_margin, static_cast<double>(t) - stretch);
    }
  detail << "spanner stretch <= 2*ceil(log2 n)-1 (exact) and size <= 3n on "
         << pass << "/" << total << " matrix graphs (worst stretch margin "
         << worst_stretch_margin << ")";
  return report(6, pass == total, detail.str());
}

bool criterion_7() {
  ExponentSchedule s = exponent_schedule(20);
  const double limit = 1.0 / (3.0 + std::sqrt(5.0));
  const double gap = std::abs(s.a[20] - limit);
  const bool ok = gap < 1e-6 && s.a[1] == 0.5 && s.a[3] == 0.2;
  std::ostringstream detail;
  detail << "exponent schedule: |a20 - 1/(3+sqrt5)| = " << gap
         << " (< 1e-6), a1 = " << s.a[1] << ", a3 = " << s.a[3]
         << " (exact rationals)";
  return report(7, ok, detail.str());
}

bool criterion_8() {
  int pass = 0, total = 0;
  std::string first;
  for (const auto& spec : kMatrixSpecs)
    for (std::uint64_t seed : kMatrixSeeds) {
      ++total;
      Graph g = generate(spec, seed);
      Emulator h = build_emulator(g, 0, 0.25, 3.0, 3.0, seed);
      // A level-0 emulator is a unit-weight forest, so plain BFS measures it.
      std::vector<std::pair<Vertex, Vertex>> fe;
      bool unit = true;
      for (const auto& e : h.edges()) {
        if (e.weight != 1) unit = false;
        fe.emplace_back(e.u, e.v);
      }
      Graph forest = Graph::from_edges(g.n, fe);
      auto comps = connected_components(g);
      std::vector<Dist> comp_bound(static_cast<std::size_t>(g.n), 0);
      for (const auto& comp : comps)
        for (Vertex v : comp)
          comp_bound[static_cast<std::size_t>(v)] =
              static_cast<Dist>(comp.size()) - 1;
      bool ok = unit;
      for (Vertex s = 0; s < g.n && ok; ++s) {
        auto dg = oracle_bfs_distances(g, s);
        auto dh = oracle_bfs_distances(forest, s);
        for (Vertex v = s + 1; v < g.n; ++v) {
          const bool rg = dg[static_cast<std::size_t>(v)] >= 0;
          const bool rh = dh[static_cast<std::size_t>(v)] >= 0;
          if (rg != rh) { ok = false; break; }
          if (!rg) continue;
          const Dist err = dh[static_cast<std::size_t>(v)] -
                           dg[static_cast<std::size_t>(v)];
          if (err < 0 || err > comp_bound[static_cast<std::size_t>(s)]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) ++pass;
      else if (first.empty()) first = spec + " seed " + std::to_string(seed);
    }
  std::ostringstream detail;
  detail << "levels=0 spanning forest keeps additive error <= n-1 per "
            "component (exact) on "
         << pass << "/" << total << " matrix graphs";
  if (!first.empty()) detail << "; first failure: " << first;
  return report(8, pass == total, detail.str());
}

bool criterion_10() {
  std::mt19937_64 rng(mix_seed(0, 0xF0));
  int agree = 0, total = 0;
  while (total < 500) {
    const Vertex n = 16 + static_cast<Vertex>(uniform01(rng) * 48);
    Graph g = er_graph(n, 3.0 / n, rng());
    std::vector<std::tuple<Vertex, Vertex, Dist>> sub;
    for (auto [u, v] : g.edges())
      if (uniform01(rng) < 0.75) sub.emplace_back(u, v, 1);
    for (int extra = 0; extra < 2; ++extra) {
      const Vertex u = static_cast<Vertex>(uniform01(rng) * n);
      const Vertex v = static_cast<Vertex>(uniform01(rng) * n);
      if (u != v)
        sub.emplace_back(std::min(u, v), std::max(u, v),
                         1 + static_cast<Dist>(uniform01(rng) * 5));
    }
    WeightedGraph h = WeightedGraph::from_edges(n, sub);
    const Vertex s = static_cast<Vertex>(uniform01(rng) * n);
    const Vertex t = static_cast<Vertex>(uniform01(rng) * n);
    DistanceVector d = bfs_distances(g, s);
    if (s == t || d[t] < 0) continue;
    std::vector<Vertex> pi = shortest_path(g, s, t);
    const Dist r_hat = 1 + static_cast<Dist>(uniform01(rng) * 4);
    ++total;
    const Vertex bin = find_prefix_frontier(g, h, pi, r_hat);
    const Vertex ref = pi[oracles::linear_prefix_frontier_index(h, pi, r_hat)];
    std::vector<Vertex> rev(pi.rbegin(), pi.rend());
    const Vertex bin_s = find_suffix_frontier(g, h, pi, r_hat);
    const Vertex ref_s = rev[oracles::linear_prefix_frontier_index(h, rev, r_hat)];
    if (bin == ref && bin_s == ref_s) ++agree;
  }
  std::ostringstream detail;
  detail << "binary-search frontier equals the linear-scan reference on "
         << agree << "/" << total << " random (graph, emulator, path) triples";
  return report(10, agree == total, detail.str());
}

}  // namespace

int main() {
  bool all = true;

  MatrixOutcome m = run_matrix();
  {
    std::ostringstream d1;
    d1 << "emulator validity: " << m.violation_free << "/" << m.instances
       << " matrix instances certify exactly at bound 16*r_hat";
    if (!m.first_failure.empty()) d1 << "; first failure: " << m.first_failure;
    all &= report(1, m.violation_free == m.instances, d1.str());

    std::ostringstream d2;
    d2 << "no distance is underestimated on " << m.underestimation_free << "/"
       << m.instances << " matrix instances (exact)";
    all &= report(2, m.underestimation_free == m.instances, d2.str());

    GreedyStress gs = run_greedy_stress();
    std::ostringstream d3;
    d3 << "every greedy round repairs its pair to error <= 2*r_hat: "
       << m.rounds_in_bound << "/" << m.rounds_seen
       << " rounds in matrix builds (idle there: bound 16*r_hat is met "
          "pre-greedy), plus "
       << gs.rounds_in_bound << "/" << gs.rounds_seen
       << " forced rounds on " << gs.instances
       << " forest-seeded instances, " << gs.repaired
       << " certify at 2*r_hat after the sweep";
    if (!gs.first_failure.empty())
      d3 << "; first failure: " << gs.first_failure;
    const bool c3 = m.rounds_in_bound == m.rounds_seen &&
                    gs.rounds_seen > 0 &&
                    gs.rounds_in_bound == gs.rounds_seen &&
                    gs.repaired == gs.instances;
    all &= report(3, c3, d3.str());

    all &= criterion_4();
    all &= criterion_5();
    all &= criterion_6();
    all &= criterion_7();
    all &= criterion_8();

    std::ostringstream d9;
    d9 << "byte-identical artifacts on repeated builds: " << m.deterministic
       << "/" << m.instances << " matrix instances";
    all &= report(9, m.deterministic == m.instances, d9.str());

    all &= criterion_10();
  }

  if (!all) std::printf("acceptance: at least one criterion failed\n");
  return all ? 0 : 1;
}
