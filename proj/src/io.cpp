#include "emu/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace emu {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& line, const std::string& why) {
  throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) + ": " +
                           why + " (\"" + line + "\")");
}

bool parse_long(const std::string& tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Shared line scanner; calls sink(line_no, tokens) for data lines.
template <typename Sink>
Vertex scan_lines(std::istream& in, int expected_tokens, Sink&& sink) {
  std::string line;
  int line_no = 0;
  long long declared_n = -1;
  long long max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::string rest = line.substr(start + 1);
      std::size_t eq = rest.find("n=");
      if (eq != std::string::npos) {
        long long n = 0;
        std::string num = rest.substr(eq + 2);
        // trim trailing whitespace
        while (!num.empty() && (num.back() == ' ' || num.back() == '\t' || num.back() == '\r'))
          num.pop_back();
        std::size_t ns = num.find_first_not_of(" \t");
        if (ns == std::string::npos || !parse_long(num.substr(ns), n) || n < 0)
          parse_fail(line_no, line, "bad n= header");
        if (declared_n >= 0) parse_fail(line_no, line, "duplicate n= header");
        declared_n = n;
      }
      continue;
    }
    std::istringstream tok_in(line.substr(start));
    std::vector<std::string> tokens;
    std::string tok;
    while (tok_in >> tok) tokens.push_back(tok);
    if (static_cast<int>(tokens.size()) != expected_tokens)
      parse_fail(line_no, line, "expected " + std::to_string(expected_tokens) + " tokens");
    std::vector<long long> values(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!parse_long(tokens[i], values[i]) || values[i] < 0)
        parse_fail(line_no, line, "token \"" + tokens[i] + "\" is not a nonnegative integer");
    }
    if (values[0] == values[1]) parse_fail(line_no, line, "self-loop");
    max_id = std::max({max_id, values[0], values[1]});
    sink(line_no, line, values);
  }
  long long n = declared_n >= 0 ? declared_n : max_id + 1;
  if (declared_n >= 0 && max_id >= declared_n)
    throw std::runtime_error("vertex id " + std::to_string(max_id) +
                             " exceeds declared n=" + std::to_string(declared_n));
  if (n > (1LL << 30)) throw std::runtime_error("vertex count too large");
  return static_cast<Vertex>(n);
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex n = scan_lines(in, 2, [&](int, const std::string&, const std::vector<long long>& v) {
    edges.emplace_back(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]));
  });
  return Graph::from_edges(n, edges);
}

Graph load_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
  out << "# n=" << g.n << "\n";
  for (Vertex u = 0; u < g.n; ++u) {
    for (Vertex v : g.adj[u]) {
      if (u < v) out << u << " " << v << "\n";
    }
  }
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_edge_list(g, out);
}

WeightedGraph load_weighted_edge_list(std::istream& in) {
  std::vector<std::tuple<Vertex, Vertex, Dist>> edges;
  Vertex n = scan_lines(in, 3, [&](int line_no, const std::string& line,
                                   const std::vector<long long>& v) {
    if (v[2] < 1) parse_fail(line_no, line, "weight must be >= 1");
    edges.emplace_back(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]), v[2]);
  });
  return WeightedGraph::from_edges(n, edges);
}

WeightedGraph load_weighted_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_weighted_edge_list(in);
}

void save_weighted_edge_list(const WeightedGraph& h, std::ostream& out) {
  out << "# n=" << h.n << "\n";
  for (Vertex u = 0; u < h.n; ++u) {
    for (const WeightedEdge& e : h.adj[u]) {
      if (u < e.to) out << u << " " << e.to << " " << e.weight << "\n";
    }
  }
}

void save_weighted_edge_list_file(const WeightedGraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_weighted_edge_list(h, out);
}

}  // namespace emu
