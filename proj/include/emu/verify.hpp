#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "emu/clustering.hpp"
#include "emu/graph.hpp"

namespace emu {

// Oracle distance routines. Deliberately separate implementations from the
// construction code paths (queue-based BFS, scan-based Dijkstra) so a shared
// bug cannot certify itself.
std::vector<Dist> oracle_bfs_distances(const Graph& g, Vertex source);
std::vector<Dist> oracle_dijkstra_distances(const WeightedGraph& h,
                                            Vertex source);

struct VerificationReport {
  Vertex n = 0;
  Dist bound = 0;
  std::int64_t pairs_checked = 0;  // same-component pairs compared
  Dist max_additive_error = 0;
  Vertex argmax_u = -1, argmax_v = -1;
  std::int64_t violating_pairs = 0;  // pairs with d_H - d_G > bound
  Vertex first_violation_u = -1, first_violation_v = -1;
  bool underestimation = false;  // any pair with d_H < d_G
  Vertex under_u = -1, under_v = -1;
  bool reachability_mismatch = false;  // reachable in one graph only
  Vertex mismatch_u = -1, mismatch_v = -1;
  std::int64_t edge_count = 0;
  double edges_per_vertex = 0.0;

  bool ok() const {
    return violating_pairs == 0 && !underestimation && !reachability_mismatch;
  }
};

// Exact dual-APSP comparison of h against g on the same vertex set. Sources
// are striped over `threads`; the report is identical for every thread
// count. Refuses n > max_n (the full APSP is quadratic per source).
VerificationReport verify_emulator(const Graph& g, const WeightedGraph& h,
                                   Dist bound, int threads = 1,
                                   Vertex max_n = 4096);

// How many pairs move to error <= threshold when `edge` is added to
// h_before. The edge must not be present yet.
std::int64_t pair_gain_diagnostic(const Graph& g,
                                  const WeightedGraph& h_before,
                                  std::tuple<Vertex, Vertex, Dist> edge,
                                  Dist threshold);

struct ClusteringCheck {
  bool coverage_ok = true;     // every vertex sits in its assigned core
  bool consistency_ok = true;  // balls/cores equal exact BFS balls
  bool radius_band_ok = true;  // r <= r_i <= r * 2^ceil(1/eps)
  bool growth_ok = true;       // uncovered ball mass <= n^eps * charged
  bool overlap_ok = true;      // sum of ball sizes <= slack * n
  double overlap_ratio = 0.0;
  double slack = 0.0;
  std::string failure;  // first failure, naming the vertex or cluster

  bool pass() const {
    return coverage_ok && consistency_ok && radius_band_ok && growth_ok &&
           overlap_ok;
  }
};
ClusteringCheck verify_clustering(const Graph& g,
                                  const ClusterDecomposition& dec,
                                  double slack);

// Maximum over reachable pairs of d_spanner / d_G; +infinity if the spanner
// disconnects a pair.
double spanner_stretch_max(const Graph& g,
                           const std::vector<std::pair<Vertex, Vertex>>& spanner_edges);

// One emulator build per size for a graph family, reporting the edge
// density |E(H)|/n column used by the linear-size check. For er the edge
// probability is degree/n; for geo the radius keeps the expected degree.
struct ProbeRow {
  std::string spec;
  Vertex n = 0;
  std::int64_t input_edges = 0;
  std::int64_t emulator_edges = 0;
  double density = 0.0;
};
std::vector<ProbeRow> size_scaling_probe(const std::string& family,
                                         double degree,
                                         const std::vector<Vertex>& sizes,
                                         int levels, double epsilon, double c,
                                         double sample_const,
                                         std::uint64_t seed);

}  // namespace emu
