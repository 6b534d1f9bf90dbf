#include <cmath>
#include <numeric>

#include <stdexcept>

#include "doctest.h"
#include "emu/clustering.hpp"
#include "emu/generators.hpp"
#include "emu/graph.hpp"
#include "emu/verify.hpp"
#include "oracles.hpp"

using namespace emu;

TEST_CASE("star graph collapses to one cluster") {
  Graph g = oracles::star_graph(10);
  ClusterDecomposition dec = cluster_decompose(g, 1, 0.5, 0);
  CHECK(dec.size() == 1);
  CHECK(dec.centers[0] == 0);
  CHECK(dec.cores[0].size() == 10);
  for (Vertex v = 0; v < g.n; ++v) CHECK(core_of(dec, v) == 0);
}

TEST_CASE("path decomposition passes the structural verifier") {
  Graph g = oracles::path_graph(40);
  for (Dist r : {1, 2, 4}) {
    ClusterDecomposition dec = cluster_decompose(g, r, 0.4, 0);
    ClusteringCheck chk = verify_clustering(g, dec, 4.0 * std::pow(40.0, 0.4));
    INFO("r=", r, " failure=", chk.failure);
    CHECK(chk.pass());
  }
}

TEST_CASE("cluster charges partition the vertex set") {
  Graph g = cycle_graph(48);
  ClusterDecomposition dec = cluster_decompose(g, 3, 0.3, 0);
  std::int64_t total = std::accumulate(dec.charged.begin(), dec.charged.end(),
                                       std::int64_t{0});
  CHECK(total == g.n);
  for (std::size_t i = 0; i < dec.size(); ++i) CHECK(dec.charged[i] >= 1);
}

TEST_CASE("growth stops within the doubling band") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = er_graph(120, 0.05, seed);
    const double eps = 0.25;
    ClusterDecomposition dec = cluster_decompose(g, 2, eps, seed);
    // Each doubling multiplies the covered mass by more than n^eps, so at
    // most ceil(1/eps) doublings fit inside n vertices.
    const Dist cap = Dist{1} << static_cast<int>(std::ceil(1.0 / eps));
    for (std::size_t i = 0; i < dec.size(); ++i) {
      CHECK(dec.radii[i] >= 2);
      CHECK(dec.radii[i] <= 2 * cap);
    }
    ClusteringCheck chk = verify_clustering(g, dec, 4.0 * std::pow(120.0, eps));
    INFO(chk.failure);
    CHECK(chk.pass());
  }
}

TEST_CASE("balls are exactly twice-radius bfs balls") {
  Graph g = er_graph(80, 0.06, 9);
  ClusterDecomposition dec = cluster_decompose(g, 2, 0.3, 0);
  for (std::size_t i = 0; i < dec.size(); ++i) {
    CHECK(dec.cores[i] == ball(g, dec.centers[i], dec.radii[i]));
    CHECK(dec.balls[i] == ball(g, dec.centers[i], 2 * dec.radii[i]));
  }
}

TEST_CASE("assignment is the lowest covering cluster") {
  Graph g = oracles::path_graph(30);
  ClusterDecomposition dec = cluster_decompose(g, 2, 0.5, 0);
  for (Vertex v = 0; v < g.n; ++v) {
    const int assigned = dec.core_of[v];
    for (int i = 0; i < assigned; ++i)
      CHECK(!std::binary_search(dec.cores[i].begin(), dec.cores[i].end(), v));
    CHECK(std::binary_search(dec.cores[assigned].begin(),
                             dec.cores[assigned].end(), v));
  }
}

TEST_CASE("decomposition is deterministic") {
  Graph g = er_graph(100, 0.05, 4);
  ClusterDecomposition a = cluster_decompose(g, 3, 0.25, 0);
  ClusterDecomposition b = cluster_decompose(g, 3, 0.25, 99);  // seed is inert
  CHECK(a.centers == b.centers);
  CHECK(a.radii == b.radii);
  CHECK(a.core_of == b.core_of);
}

TEST_CASE("core_of lookup rejects a coverage hole") {
  Graph g = oracles::path_graph(6);
  ClusterDecomposition dec = cluster_decompose(g, 1, 0.5, 0);
  CHECK(core_of(dec, 0) >= 0);
  ClusterDecomposition broken = dec;
  broken.core_of[2] = -1;
  CHECK_THROWS_AS(core_of(broken, 2), std::runtime_error);
  CHECK_THROWS_AS(core_of(dec, -1), std::out_of_range);
  CHECK_THROWS_AS(core_of(dec, 6), std::out_of_range);
}

TEST_CASE("empty and singleton graphs decompose cleanly") {
  Graph g0;
  g0.n = 0;
  ClusterDecomposition dec0 = cluster_decompose(g0, 1, 0.5, 0);
  CHECK(dec0.size() == 0);
  Graph g1 = Graph::from_edges(1, {});
  ClusterDecomposition dec1 = cluster_decompose(g1, 1, 0.5, 0);
  CHECK(dec1.size() == 1);
  CHECK(dec1.cores[0] == std::vector<Vertex>{0});
}

TEST_CASE("verifier flags tampering") {
  Graph g = cycle_graph(24);
  ClusterDecomposition dec = cluster_decompose(g, 2, 0.4, 0);
  REQUIRE(verify_clustering(g, dec, 100.0).pass());

  ClusterDecomposition bad = dec;
  bad.core_of[5] = static_cast<std::int32_t>(bad.size()) + 4;
  CHECK(!verify_clustering(g, bad, 100.0).coverage_ok);

  ClusterDecomposition shrunk = dec;
  shrunk.balls[0].pop_back();
  CHECK(!verify_clustering(g, shrunk, 100.0).consistency_ok);

  CHECK(!verify_clustering(g, dec, 0.0).overlap_ok);
}
