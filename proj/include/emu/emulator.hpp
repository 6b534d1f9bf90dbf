#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "emu/clustering.hpp"
#include "emu/graph.hpp"

namespace emu {

// Provenance of an emulator edge.
enum class EdgeTag : std::uint8_t {
  spanner = 0,        // multiplicative-spanner edge (or base-case forest edge), weight 1
  small_cluster = 1,  // all-pairs edge between sampled vertices of a small cluster
  recursive = 2,      // edge of a recursively built emulator inside a large cluster
  greedy = 3,         // edge bought by the path-buying phase
};
inline constexpr int kTagCount = 4;
const char* edge_tag_name(EdgeTag tag);

struct EmulatorEdge {
  Vertex u, v;  // u < v
  Dist weight;
  EdgeTag tag;
};

// Weighted emulator under construction: adjacency view for distance queries
// plus a per-edge provenance registry. Edge collisions keep the minimum
// weight; the tag changes only when the weight strictly drops.
class Emulator {
 public:
  explicit Emulator(Vertex n) : h_(WeightedGraph::from_edges(n, {})) {}

  // Returns true if the edge was inserted or its weight lowered.
  bool add_edge(Vertex u, Vertex v, Dist weight, EdgeTag tag);

  const WeightedGraph& graph() const { return h_; }
  Vertex n() const { return h_.n; }
  std::int64_t edge_count() const { return h_.edge_count; }
  std::array<std::int64_t, kTagCount> tag_counts() const;
  std::vector<EmulatorEdge> edges() const;  // sorted by (u, v)

 private:
  WeightedGraph h_;
  std::map<std::pair<Vertex, Vertex>, EdgeTag> tags_;
};

// Error exponents a_0 = 1, a_{i+1} = 1/(6 - 4 a_i), decreasing toward
// the fixed point 1/(3 + sqrt 5).
struct ExponentSchedule {
  std::vector<double> a;  // a[0..levels]
};
ExponentSchedule exponent_schedule(int levels);

// max(1.0, ln n), so tiny n never zeroes a threshold or probability.
double ln_eff(Vertex n);

struct EmulatorParams {
  Vertex n = 0;
  int level = 1;
  double alpha = 1.0;  // error exponent of the emulator one level down
  double epsilon = 0.25;
  double c = 3.0;
  double sample_const = 3.0;
  Dist r = 1;      // ceil(n^{1/(6 - 4 alpha)})
  Dist r_hat = 1;  // ceil(r * n^{c * epsilon})
  std::uint64_t seed = 0;

  // level >= 1; alpha is taken from exponent_schedule(level).a[level - 1].
  static EmulatorParams derive(Vertex n, int level, double epsilon, double c,
                               double sample_const, std::uint64_t seed);
};

struct SampleSet {
  std::vector<Vertex> members;  // sorted
  double probability = 1.0;     // min(1, sample_const * ln_eff(n) / r)
  bool contains(Vertex v) const;
};
SampleSet sample_vertices(const Graph& g, const EmulatorParams& params);

// All-pairs edges between the sampled vertices of a small cluster, weighted
// with exact global distances. `dist_from` memoizes one BFS per source so
// overlapping clusters share work.
std::vector<std::tuple<Vertex, Vertex, Dist>> handle_small_cluster(
    const Graph& g, const std::vector<Vertex>& ball, const SampleSet& sample,
    std::map<Vertex, std::vector<Dist>>& dist_from);

// Recursive emulator for a large cluster: builds a (level-1)-level emulator
// of the subgraph induced by the ball and maps its edges back to the ids of
// g. Weights are distances within the induced subgraph, which dominate the
// global ones.
std::vector<std::tuple<Vertex, Vertex, Dist>> handle_large_cluster(
    const Graph& g, const std::vector<Vertex>& ball, int level,
    const EmulatorParams& params);

// Memoized single-source distances on an emulator, dropped wholesale
// whenever an edge changes.
class DistanceCache {
 public:
  explicit DistanceCache(const WeightedGraph& h) : h_(&h) {}
  const std::vector<Dist>& from(Vertex s);
  void invalidate() { memo_.clear(); }

 private:
  const WeightedGraph* h_;
  std::map<Vertex, std::vector<Dist>> memo_;
};

// Farthest vertex x on pi (a shortest path in g) such that every pair of
// vertices on the prefix pi[0..x] has emulator error at most r_hat. Binary
// search over the prefix length; x = pi[0] is always feasible. The mirrored
// operation walks from the far end.
Vertex find_prefix_frontier(const Graph& g, const WeightedGraph& h,
                            const std::vector<Vertex>& pi, Dist r_hat);
Vertex find_suffix_frontier(const Graph& g, const WeightedGraph& h,
                            const std::vector<Vertex>& pi, Dist r_hat);

struct GreedyRound {
  Vertex s, t;
  std::vector<Vertex> pi;  // shortest s-t path used
  Vertex x, y;             // frontier vertices on pi
  bool degenerate = false; // x == y, x after y, or edge already tight
  bool edge_added = false; // a weight was inserted or lowered
  Dist weight = -1;        // dist_G(x, y) when an edge was bought
  Dist pre_error = 0;      // d_H(s,t) - d_G(s,t) before; -1 if t unreachable in H
  Dist post_error = 0;     // after the round (the chain gives <= 2 r_hat)
};

// Path-buying: sweep pairs (s, t) lexicographically and, whenever
// d_H(s,t) > d_G(s,t) + greedy_constant * r_hat, buy the edge between the
// prefix and suffix frontier vertices at weight dist_G(x,y). Added edges only
// shrink emulator distances, so one sweep leaves no violating pair.
// greedy_constant must be >= 2 for the repair chain to close the loop.
std::vector<GreedyRound> greedy_phase(const Graph& g, Emulator& h, Dist r_hat,
                                      int greedy_constant = 16);

// Per-instance construction record: one entry per (component or recursive
// ball) the builder ran on, in pre-order.
struct InstanceReport {
  std::string path;  // "c<k>" for component k, then "/b<i>" per recursion
  int depth = 0;
  int level = 0;
  Vertex n = 0;
  Vertex root = 0;  // smallest global vertex id of the instance
  double alpha = 1.0;
  Dist r = 1;
  Dist r_hat_formula = 1;  // ceil(r * n^{c eps})
  Dist r_hat = 1;          // effective value after any raise
  bool r_hat_raised = false;
  int spanner_stretch = 0;
  std::int64_t spanner_edges = 0;
  std::int64_t sample_size = 0;
  double sample_probability = 1.0;
  std::int64_t clusters = 0;
  std::int64_t small_clusters = 0;
  std::int64_t large_clusters = 0;
  Dist max_cluster_radius = 0;
  double overlap_ratio = 0.0;
  bool greedy_skipped = false;  // spanner stretch already implies the bound
  std::vector<GreedyRound> rounds;
};

struct PhaseTimings {
  double spanner_ms = 0, clustering_ms = 0, small_ms = 0, recursion_ms = 0,
         greedy_ms = 0;
};

struct BuildResult {
  Emulator emulator;
  std::vector<InstanceReport> instances;
  PhaseTimings timings;

  // greedy_constant * r_hat, maximized over top-level components: the
  // loosest error bound any component was allowed to keep.
  Dist default_bound = 0;
};

// Spanner + sampling + clustering + small/large cluster handling, written
// into `out`. Requires a connected g; returns the instance reports produced
// (this instance first, recursive ones after).
struct PreprocessResult {
  ClusterDecomposition decomposition;
  SampleSet sample;
  Dist r_hat_effective = 1;
};
PreprocessResult preprocess(const Graph& g, const EmulatorParams& params,
                            Emulator& out);

// Full construction. levels = 0 builds a spanning forest (weight-1 edges);
// levels >= 1 runs preprocessing plus the greedy phase per connected
// component, with r and r_hat derived from the component size, and recurses
// one level down inside each large cluster.
Emulator build_emulator(const Graph& g, int levels, double epsilon, double c,
                        double sample_const, std::uint64_t seed);
BuildResult build_emulator_detailed(const Graph& g, int levels, double epsilon,
                                    double c, double sample_const,
                                    std::uint64_t seed,
                                    int greedy_constant = 16);

}  // namespace emu
