#include "emu/generators.hpp"

#include <charconv>
#include <random>
#include <stdexcept>
#include <vector>

#include "emu/rng.hpp"

namespace emu {

namespace {

// Distinct salts keep the families decorrelated under a shared user seed.
constexpr std::uint64_t kErSalt = 0xE5;
constexpr std::uint64_t kTreeSalt = 0x7E;
constexpr std::uint64_t kGeoSalt = 0x6E;

[[noreturn]] void spec_fail(const std::string& spec, const std::string& why) {
  throw std::invalid_argument("bad generator spec '" + spec + "': " + why);
}

}  // namespace

Graph er_graph(Vertex n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("er_graph: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("er_graph: p must be in [0, 1]");
  std::mt19937_64 rng(mix_seed(seed, kErSalt, static_cast<std::uint64_t>(n)));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph grid_graph(Vertex width, Vertex height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("grid_graph: dimensions must be >= 1");
  const Vertex n = width * height;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex y = 0; y < height; ++y)
    for (Vertex x = 0; x < width; ++x) {
      const Vertex v = y * width + x;
      if (x + 1 < width) edges.emplace_back(v, v + 1);
      if (y + 1 < height) edges.emplace_back(v, v + width);
    }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph tree_graph(Vertex n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree_graph: n must be >= 1");
  std::mt19937_64 rng(mix_seed(seed, kTreeSalt, static_cast<std::uint64_t>(n)));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex parent = static_cast<Vertex>(
        uniform01(rng) * static_cast<double>(v));
    edges.emplace_back(std::min(parent, v), v);
  }
  return Graph::from_edges(n, edges);
}

Graph geo_graph(Vertex n, double radius, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("geo_graph: n must be >= 0");
  if (!(radius >= 0.0))
    throw std::invalid_argument("geo_graph: radius must be >= 0");
  std::mt19937_64 rng(mix_seed(seed, kGeoSalt, static_cast<std::uint64_t>(n)));
  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    xs[static_cast<std::size_t>(v)] = uniform01(rng);
    ys[static_cast<std::size_t>(v)] = uniform01(rng);
  }
  const double r2 = radius * radius;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double dx = xs[static_cast<std::size_t>(u)] - xs[static_cast<std::size_t>(v)];
      const double dy = ys[static_cast<std::size_t>(u)] - ys[static_cast<std::size_t>(v)];
      if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
    }
  return Graph::from_edges(n, edges);
}

namespace {

std::vector<std::string> split_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(start));
      return parts;
    }
    parts.push_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
}

Vertex parse_count(const std::string& spec, const std::string& token) {
  Vertex value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
    spec_fail(spec, "'" + token + "' is not a nonnegative integer");
  return value;
}

double parse_real(const std::string& spec, const std::string& token) {
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) spec_fail(spec, "'" + token + "' is not a number");
    return value;
  } catch (const std::invalid_argument&) {
    spec_fail(spec, "'" + token + "' is not a number");
  } catch (const std::out_of_range&) {
    spec_fail(spec, "'" + token + "' is out of range");
  }
}

}  // namespace

Graph generate(const std::string& spec, std::uint64_t seed) {
  const auto parts = split_spec(spec);
  const std::string& family = parts[0];
  const std::size_t args = parts.size() - 1;
  if (family == "er") {
    if (args != 2) spec_fail(spec, "expected er:<n>:<p>");
    return er_graph(parse_count(spec, parts[1]), parse_real(spec, parts[2]), seed);
  }
  if (family == "grid") {
    if (args != 2) spec_fail(spec, "expected grid:<w>:<h>");
    return grid_graph(parse_count(spec, parts[1]), parse_count(spec, parts[2]));
  }
  if (family == "cycle") {
    if (args != 1) spec_fail(spec, "expected cycle:<n>");
    return cycle_graph(parse_count(spec, parts[1]));
  }
  if (family == "tree") {
    if (args != 1) spec_fail(spec, "expected tree:<n>");
    return tree_graph(parse_count(spec, parts[1]), seed);
  }
  if (family == "geo") {
    if (args != 2) spec_fail(spec, "expected geo:<n>:<radius>");
    return geo_graph(parse_count(spec, parts[1]), parse_real(spec, parts[2]), seed);
  }
  spec_fail(spec, "unknown family '" + family + "'");
}

}  // namespace emu
