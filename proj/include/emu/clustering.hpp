#pragma once

#include <cstdint>
#include <vector>

#include "emu/graph.hpp"

namespace emu {

// Ball-growing decomposition: centers v_i with radii r_i in [r, r*2^ceil(1/eps)],
// cores B(v_i, r_i) covering V, clusters (outer balls) B(v_i, 2 r_i).
struct ClusterDecomposition {
  Vertex n = 0;
  Dist base_radius = 1;  // the r the decomposition was built with
  double epsilon = 0.5;

  std::vector<Vertex> centers;
  std::vector<Dist> radii;
  std::vector<std::vector<Vertex>> balls;  // B(v_i, 2 r_i), sorted
  std::vector<std::vector<Vertex>> cores;  // B(v_i, r_i), sorted
  std::vector<std::int32_t> core_of;       // vertex -> lowest-index covering cluster

  // Construction trace, for the growth-condition assertions:
  // charged[i]   = vertices newly covered when cluster i was emitted
  // uncovered_ball[i] = |U ∩ B(v_i, 2 r_i)| at emission time
  std::vector<std::int64_t> charged;
  std::vector<std::int64_t> uncovered_ball;

  std::size_t size() const { return centers.size(); }
  std::int64_t overlap_sum() const;
  double overlap_ratio() const;  // overlap_sum / n
  Dist max_radius() const;
};

// Iterative ball-growing over uncovered vertices: pick the lowest-id
// uncovered vertex, double rho starting from r while
// |U ∩ B(v, 2 rho)| > n^eps * |U ∩ B(v, rho)|, emit (v, rho), cover
// U ∩ B(v, rho). Terminates within ceil(1/eps) doublings per cluster.
// Deterministic; the seed is accepted for interface stability but the
// lowest-id tie-breaking never consults it.
ClusterDecomposition cluster_decompose(const Graph& g, Dist r, double epsilon,
                                       std::uint64_t seed);

// Index i with v in cores[i]; throws if the decomposition has a coverage hole.
std::int32_t core_of(const ClusterDecomposition& dec, Vertex v);

}  // namespace emu
