#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emu/emulator.hpp"
#include "emu/generators.hpp"
#include "emu/graph.hpp"
#include "emu/io.hpp"
#include "emu/verify.hpp"

namespace {

using nlohmann::json;

struct build_flags {
  std::string input;
  std::string graph_spec;
  std::string out;
  std::string report;
  int levels = 3;
  double epsilon = 0.25;
  double c = 3.0;
  double sample_const = 3.0;
  int greedy_constant = 16;
  std::uint64_t seed = 0;
  bool timings = false;
};

emu::Graph resolve_input(const std::string& input, const std::string& graph_spec,
                         std::uint64_t seed, std::string* source) {
  if (input.empty() == graph_spec.empty())
    throw std::runtime_error("exactly one of --input and --graph is required");
  if (!input.empty()) {
    *source = input;
    return emu::load_edge_list_file(input);
  }
  *source = graph_spec;
  return emu::generate(graph_spec, seed);
}

json instance_entry(const emu::InstanceReport& rep) {
  json e;
  e["root"] = rep.root;
  e["n"] = rep.n;
  e["level"] = rep.level;
  e["alpha"] = rep.alpha;
  e["r"] = rep.r;
  e["r_hat"] = rep.r_hat;
  e["r_hat_raised"] = rep.r_hat_raised;
  e["spanner_stretch"] = rep.spanner_stretch;
  e["spanner_edges"] = rep.spanner_edges;
  e["sample_size"] = rep.sample_size;
  e["clusters"] = rep.clusters;
  e["small_clusters"] = rep.small_clusters;
  e["large_clusters"] = rep.large_clusters;
  e["max_cluster_radius"] = rep.max_cluster_radius;
  e["overlap_ratio"] = rep.overlap_ratio;
  e["greedy_skipped"] = rep.greedy_skipped;
  e["rounds"] = rep.rounds.size();
  return e;
}

int run_build(const build_flags& f) {
  std::string source;
  emu::Graph g = resolve_input(f.input, f.graph_spec, f.seed, &source);
  emu::BuildResult res = emu::build_emulator_detailed(
      g, f.levels, f.epsilon, f.c, f.sample_const, f.seed, f.greedy_constant);

  emu::save_weighted_edge_list_file(res.emulator.graph(), f.out);

  json side;
  side["schema"] = 1;
  side["input"] = {{"source", source}, {"n", g.n}, {"edges", g.edge_count}};
  side["params"] = {{"levels", f.levels},
                    {"epsilon", f.epsilon},
                    {"c", f.c},
                    {"sample_const", f.sample_const},
                    {"greedy_constant", f.greedy_constant},
                    {"seed", f.seed}};
  json tags;
  auto counts = res.emulator.tag_counts();
  for (int t = 0; t < emu::kTagCount; ++t)
    tags[emu::edge_tag_name(static_cast<emu::EdgeTag>(t))] = counts[t];
  side["emulator"] = {{"n", res.emulator.n()},
                      {"edges", res.emulator.edge_count()},
                      {"tag_counts", tags}};
  side["default_bound"] = res.default_bound;

  json comps = json::array();
  std::size_t total_rounds = 0;
  std::int64_t total_raised = 0;
  for (const auto& rep : res.instances) {
    total_rounds += rep.rounds.size();
    if (rep.r_hat_raised) ++total_raised;
    if (rep.depth != 0) continue;
    json e = instance_entry(rep);
    std::size_t sub_instances = 0, sub_rounds = 0;
    const std::string prefix = rep.path + "/";
    for (const auto& other : res.instances) {
      if (other.path != rep.path && other.path.rfind(prefix, 0) != 0) continue;
      ++sub_instances;
      sub_rounds += other.rounds.size();
    }
    e["subtree_instances"] = sub_instances;
    e["subtree_rounds"] = sub_rounds;
    comps.push_back(std::move(e));
    if (rep.r_hat_raised)
      std::fprintf(stderr,
                   "warning: component at vertex %d raised r_hat %" PRId64 " -> %" PRId64
                   " to keep cluster radii inside the error budget\n",
                   rep.root, rep.r_hat_formula, rep.r_hat);
  }
  side["components"] = std::move(comps);
  side["totals"] = {{"instances", res.instances.size()},
                    {"rounds", total_rounds},
                    {"r_hat_raised", total_raised}};
  if (f.timings) {
    side["timings_ms"] = {{"spanner", res.timings.spanner_ms},
                          {"clustering", res.timings.clustering_ms},
                          {"small_clusters", res.timings.small_ms},
                          {"recursion", res.timings.recursion_ms},
                          {"greedy", res.timings.greedy_ms}};
  }
  std::string report_path = f.report.empty() ? f.out + ".json" : f.report;
  std::ofstream rf(report_path);
  if (!rf) throw std::runtime_error("cannot write report file: " + report_path);
  rf << side.dump(2) << "\n";

  std::printf("build: %s n=%d edges=%" PRId64 " -> emulator edges=%" PRId64
              " (bound %" PRId64 ") %s + %s\n",
              source.c_str(), g.n, g.edge_count, res.emulator.edge_count(),
              res.default_bound, f.out.c_str(), report_path.c_str());
  return 0;
}

struct verify_flags {
  std::string input;
  std::string graph_spec;
  std::string emulator_path;
  std::string sidecar;
  std::string out;
  std::int64_t bound = -1;
  int threads = 1;
  int max_n = 4096;
  std::uint64_t seed = 0;
};

int run_verify(const verify_flags& f) {
  std::string source;
  emu::Graph g = resolve_input(f.input, f.graph_spec, f.seed, &source);
  emu::WeightedGraph h = emu::load_weighted_edge_list_file(f.emulator_path);

  std::int64_t bound = f.bound;
  if (bound < 0) {
    if (f.sidecar.empty())
      throw std::runtime_error("need --bound or --sidecar to resolve the error bound");
    std::ifstream sf(f.sidecar);
    if (!sf) throw std::runtime_error("cannot read sidecar: " + f.sidecar);
    json side = json::parse(sf);
    if (!side.contains("default_bound"))
      throw std::runtime_error("sidecar has no default_bound field: " + f.sidecar);
    bound = side["default_bound"].get<std::int64_t>();
  }

  emu::VerificationReport rep = emu::verify_emulator(g, h, bound, f.threads, f.max_n);

  if (!f.out.empty()) {
    json j;
    j["schema"] = 1;
    j["input"] = source;
    j["n"] = rep.n;
    j["bound"] = rep.bound;
    j["pairs_checked"] = rep.pairs_checked;
    j["max_additive_error"] = rep.max_additive_error;
    j["argmax_pair"] = {rep.argmax_u, rep.argmax_v};
    j["violating_pairs"] = rep.violating_pairs;
    if (rep.violating_pairs > 0)
      j["first_violation"] = {rep.first_violation_u, rep.first_violation_v};
    j["underestimation"] = rep.underestimation;
    j["reachability_mismatch"] = rep.reachability_mismatch;
    j["edge_count"] = rep.edge_count;
    j["edges_per_vertex"] = rep.edges_per_vertex;
    j["ok"] = rep.ok();
    std::ofstream of(f.out);
    if (!of) throw std::runtime_error("cannot write report file: " + f.out);
    of << j.dump(2) << "\n";
  }

  std::printf("verify: n=%d pairs=%" PRId64 " max_error=%" PRId64 " bound=%" PRId64
              " violations=%" PRId64 " under=%d mismatch=%d -> %s\n",
              rep.n, rep.pairs_checked, rep.max_additive_error, rep.bound,
              rep.violating_pairs, rep.underestimation ? 1 : 0,
              rep.reachability_mismatch ? 1 : 0, rep.ok() ? "OK" : "FAIL");
  if (!rep.ok()) {
    if (rep.violating_pairs > 0)
      std::fprintf(stderr, "verify: pair (%d, %d) exceeds bound %" PRId64 "\n",
                   rep.first_violation_u, rep.first_violation_v, rep.bound);
    if (rep.underestimation)
      std::fprintf(stderr, "verify: pair (%d, %d) is underestimated\n", rep.under_u,
                   rep.under_v);
    if (rep.reachability_mismatch)
      std::fprintf(stderr, "verify: pair (%d, %d) differs in reachability\n",
                   rep.mismatch_u, rep.mismatch_v);
    return 1;
  }
  return 0;
}

struct bench_flags {
  std::string family = "er";
  double degree = 8.0;
  std::vector<int> sizes;
  std::string csv;
  std::string json_path;
  int levels = 3;
  double epsilon = 0.25;
  double c = 3.0;
  double sample_const = 3.0;
  std::uint64_t seed = 0;
};

int run_bench(const bench_flags& f) {
  std::vector<emu::Vertex> sizes(f.sizes.begin(), f.sizes.end());
  std::vector<emu::ProbeRow> rows = emu::size_scaling_probe(
      f.family, f.degree, sizes, f.levels, f.epsilon, f.c, f.sample_const, f.seed);

  std::printf("%-18s %8s %12s %15s %9s\n", "spec", "n", "input_edges", "emulator_edges",
              "density");
  for (const auto& row : rows)
    std::printf("%-18s %8d %12" PRId64 " %15" PRId64 " %9.4f\n", row.spec.c_str(), row.n,
                row.input_edges, row.emulator_edges, row.density);

  if (!f.csv.empty()) {
    std::ofstream cf(f.csv);
    if (!cf) throw std::runtime_error("cannot write csv file: " + f.csv);
    cf << "spec,n,input_edges,emulator_edges,density\n";
    char line[160];
    for (const auto& row : rows) {
      std::snprintf(line, sizeof line, "%s,%d,%" PRId64 ",%" PRId64 ",%.6f\n",
                    row.spec.c_str(), row.n, row.input_edges, row.emulator_edges,
                    row.density);
      cf << line;
    }
  }
  if (!f.json_path.empty()) {
    json arr = json::array();
    for (const auto& row : rows)
      arr.push_back({{"spec", row.spec},
                     {"n", row.n},
                     {"input_edges", row.input_edges},
                     {"emulator_edges", row.emulator_edges},
                     {"density", row.density}});
    json j = {{"schema", 1}, {"rows", arr}};
    std::ofstream jf(f.json_path);
    if (!jf) throw std::runtime_error("cannot write json file: " + f.json_path);
    jf << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"additive emulator toolkit: build, verify, and benchmark"};
  app.require_subcommand(1);

  std::string gen_spec, gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
  gen->add_option("--graph", gen_spec,
                  "graph spec: er:<n>:<p> grid:<w>:<h> cycle:<n> tree:<n> geo:<n>:<radius>")
      ->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output edge-list file")->required();

  build_flags bf;
  CLI::App* build = app.add_subcommand("build", "construct an additive emulator");
  build->add_option("--input", bf.input, "input edge-list file");
  build->add_option("--graph", bf.graph_spec, "generator spec instead of a file");
  build->add_option("--levels", bf.levels, "recursion levels (0 = spanning forest)");
  build->add_option("--epsilon", bf.epsilon, "error/size trade-off exponent");
  build->add_option("--c", bf.c, "cluster radius safety exponent multiplier (>= 2)");
  build->add_option("--sample-const", bf.sample_const, "sampling density constant");
  build->add_option("--greedy-constant", bf.greedy_constant,
                    "path-buying trigger multiple of r_hat (>= 2)");
  build->add_option("--seed", bf.seed, "random seed");
  build->add_option("--out", bf.out, "emulator edge-list output")->required();
  build->add_option("--report", bf.report, "sidecar json path (default: <out>.json)");
  build->add_flag("--timings", bf.timings, "include wall-clock phase timings in the sidecar");

  verify_flags vf;
  CLI::App* verify = app.add_subcommand("verify", "certify an emulator against its input");
  verify->add_option("--input", vf.input, "input edge-list file");
  verify->add_option("--graph", vf.graph_spec, "generator spec instead of a file");
  verify->add_option("--emulator", vf.emulator_path, "emulator weighted edge list")
      ->required();
  verify->add_option("--sidecar", vf.sidecar, "build sidecar json (source of default bound)");
  verify->add_option("--bound", vf.bound, "additive error bound to certify");
  verify->add_option("--out", vf.out, "verification report json path");
  verify->add_option("--threads", vf.threads, "parallel verification sweeps");
  verify->add_option("--max-n", vf.max_n, "largest n the exact oracle will accept");
  verify->add_option("--seed", vf.seed, "random seed (for --graph specs)");

  bench_flags ef;
  CLI::App* bench = app.add_subcommand("bench", "emulator size scaling across graph sizes");
  bench->add_option("--family", ef.family, "graph family: er grid cycle tree geo");
  bench->add_option("--degree", ef.degree, "target average degree");
  bench->add_option("--sizes", ef.sizes, "graph sizes to probe")
      ->required()
      ->delimiter(',');
  bench->add_option("--levels", ef.levels, "recursion levels");
  bench->add_option("--epsilon", ef.epsilon, "error/size trade-off exponent");
  bench->add_option("--c", ef.c, "cluster radius safety exponent multiplier");
  bench->add_option("--sample-const", ef.sample_const, "sampling density constant");
  bench->add_option("--seed", ef.seed, "random seed");
  bench->add_option("--csv", ef.csv, "write the table as csv");
  bench->add_option("--json", ef.json_path, "write the table as json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      emu::Graph g = emu::generate(gen_spec, gen_seed);
      emu::save_edge_list_file(g, gen_out);
      std::printf("gen: %s n=%d edges=%" PRId64 " -> %s\n", gen_spec.c_str(), g.n,
                  g.edge_count, gen_out.c_str());
      return 0;
    }
    if (build->parsed()) return run_build(bf);
    if (verify->parsed()) return run_verify(vf);
    if (bench->parsed()) return run_bench(ef);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
