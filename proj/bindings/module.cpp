#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <tuple>
#include <vector>

#include "emu/clustering.hpp"
#include "emu/emulator.hpp"
#include "emu/generators.hpp"
#include "emu/graph.hpp"
#include "emu/spanner.hpp"
#include "emu/verify.hpp"

namespace py = pybind11;

namespace {

py::dict report_dict(const emu::VerificationReport& rep) {
  py::dict d;
  d["n"] = rep.n;
  d["bound"] = rep.bound;
  d["pairs_checked"] = rep.pairs_checked;
  d["max_additive_error"] = rep.max_additive_error;
  d["argmax_pair"] = py::make_tuple(rep.argmax_u, rep.argmax_v);
  d["violating_pairs"] = rep.violating_pairs;
  d["underestimation"] = rep.underestimation;
  d["reachability_mismatch"] = rep.reachability_mismatch;
  d["edge_count"] = rep.edge_count;
  d["edges_per_vertex"] = rep.edges_per_vertex;
  d["ok"] = rep.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_emucore, m) {
  m.doc() = "additive graph emulators: construction and exact certification";

  py::class_<emu::Graph>(m, "Graph")
      .def(py::init([](emu::Vertex n,
                       const std::vector<std::pair<emu::Vertex, emu::Vertex>>& edges) {
             return emu::Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_readonly("n", &emu::Graph::n)
      .def_readonly("edge_count", &emu::Graph::edge_count)
      .def("neighbors",
           [](const emu::Graph& g, emu::Vertex v) {
             if (v < 0 || v >= g.n) throw py::index_error("vertex out of range");
             return g.adj[v];
           })
      .def("edges",
           [](const emu::Graph& g) {
             std::vector<std::pair<emu::Vertex, emu::Vertex>> out;
             out.reserve(static_cast<std::size_t>(g.edge_count));
             for (emu::Vertex u = 0; u < g.n; ++u)
               for (emu::Vertex v : g.adj[u])
                 if (u < v) out.emplace_back(u, v);
             return out;
           })
      .def("__repr__", [](const emu::Graph& g) {
        return "Graph(n=" + std::to_string(g.n) +
               ", edges=" + std::to_string(g.edge_count) + ")";
      });

  m.def("generate", &emu::generate, py::arg("spec"), py::arg("seed") = 0,
        "deterministic graph from a spec string: er:<n>:<p> grid:<w>:<h> cycle:<n> "
        "tree:<n> geo:<n>:<radius>");

  m.def(
      "exponent_schedule",
      [](int levels) { return emu::exponent_schedule(levels).a; }, py::arg("levels"),
      "fixed-point iteration a[0]=1, a[i+1]=1/(6-4a[i]) toward 1/(3+sqrt(5))");

  m.def(
      "bfs_distances",
      [](const emu::Graph& g, emu::Vertex source) {
        return emu::oracle_bfs_distances(g, source);
      },
      py::arg("g"), py::arg("source"), "exact hop distances from source; unreachable = -1");

  m.def(
      "greedy_spanner",
      [](const emu::Graph& g, int t) {
        if (t <= 0) t = emu::default_spanner_stretch(g.n);
        emu::SpannerResult res = emu::greedy_multiplicative_spanner(g, t);
        py::dict d;
        d["edges"] = res.edges;
        d["stretch_bound"] = res.stretch_bound;
        return d;
      },
      py::arg("g"), py::arg("t") = -1,
      "greedy multiplicative spanner; t defaults to 2*ceil(log2 n) - 1");

  m.def(
      "cluster",
      [](const emu::Graph& g, emu::Dist r, double epsilon, std::uint64_t seed) {
        emu::ClusterDecomposition dec = emu::cluster_decompose(g, r, epsilon, seed);
        py::dict d;
        d["centers"] = dec.centers;
        d["radii"] = dec.radii;
        d["cores"] = dec.cores;
        d["balls"] = dec.balls;
        d["core_of"] = dec.core_of;
        d["overlap_ratio"] = dec.overlap_ratio();
        d["max_radius"] = dec.max_radius();
        return d;
      },
      py::arg("g"), py::arg("r"), py::arg("epsilon") = 0.25, py::arg("seed") = 0,
      "ball-growing decomposition: cores partition-cover V, balls hold the slack");

  m.def(
      "build",
      [](const emu::Graph& g, int levels, double epsilon, double c, double sample_const,
         std::uint64_t seed, int greedy_constant) {
        emu::BuildResult res = emu::build_emulator_detailed(g, levels, epsilon, c,
                                                            sample_const, seed,
                                                            greedy_constant);
        py::list edges;
        for (const auto& e : res.emulator.edges())
          edges.append(py::make_tuple(e.u, e.v, e.weight, emu::edge_tag_name(e.tag)));
        py::dict tags;
        auto counts = res.emulator.tag_counts();
        for (int t = 0; t < emu::kTagCount; ++t)
          tags[emu::edge_tag_name(static_cast<emu::EdgeTag>(t))] = counts[t];
        py::list comps;
        std::size_t rounds = 0;
        for (const auto& rep : res.instances) {
          rounds += rep.rounds.size();
          if (rep.depth != 0) continue;
          py::dict e;
          e["root"] = rep.root;
          e["n"] = rep.n;
          e["level"] = rep.level;
          e["r"] = rep.r;
          e["r_hat"] = rep.r_hat;
          e["r_hat_raised"] = rep.r_hat_raised;
          e["clusters"] = rep.clusters;
          e["rounds"] = rep.rounds.size();
          comps.append(std::move(e));
        }
        py::dict d;
        d["n"] = res.emulator.n();
        d["edges"] = edges;
        d["edge_count"] = res.emulator.edge_count();
        d["tag_counts"] = tags;
        d["default_bound"] = res.default_bound;
        d["components"] = comps;
        d["instances"] = res.instances.size();
        d["rounds"] = rounds;
        return d;
      },
      py::arg("g"), py::arg("levels") = 3, py::arg("epsilon") = 0.25, py::arg("c") = 3.0,
      py::arg("sample_const") = 3.0, py::arg("seed") = 0,
      py::arg("greedy_constant") = 16,
      "recursive clustering + sampling + path-buying emulator; returns edges tagged by "
      "construction phase and the certified default bound");

  m.def(
      "verify",
      [](const emu::Graph& g, const py::sequence& edges, std::int64_t bound,
         int threads, int max_n) {
        // Accepts (u, v, w) triples or the (u, v, w, tag) quadruples that
        // build() returns; the tag is ignored.
        std::vector<std::tuple<emu::Vertex, emu::Vertex, emu::Dist>> plain;
        plain.reserve(static_cast<std::size_t>(edges.size()));
        for (py::handle item : edges) {
          py::sequence e = py::reinterpret_borrow<py::sequence>(item);
          if (e.size() != 3 && e.size() != 4)
            throw py::value_error(
                "verify: each edge must be (u, v, w) or (u, v, w, tag)");
          plain.emplace_back(e[0].cast<emu::Vertex>(), e[1].cast<emu::Vertex>(),
                             e[2].cast<emu::Dist>());
        }
        emu::WeightedGraph h = emu::WeightedGraph::from_edges(g.n, plain);
        return report_dict(emu::verify_emulator(g, h, bound, threads, max_n));
      },
      py::arg("g"), py::arg("edges"), py::arg("bound"), py::arg("threads") = 1,
      py::arg("max_n") = 4096,
      "exact all-pairs certification of a weighted edge set against the input graph");
}
