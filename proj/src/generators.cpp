#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>

#include "forestcount/errors.hpp"
#include "forestcount/graph.hpp"
#include "forestcount/random.hpp"

namespace forestcount {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

Graph fromPairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs)
    edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  return Graph(n, std::move(edges));
}

// Skeleton of the regular dodecahedron: 20 vertices, 30 edges, 3-regular.
// Hamiltonian cycle 0..19 plus the chords of LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2.
Graph dodecahedron() {
  return fromPairs(20, {{0, 1},   {0, 10},  {0, 19},  {1, 2},   {1, 8},   {2, 3},
                        {2, 6},   {3, 4},   {3, 19},  {4, 5},   {4, 17},  {5, 6},
                        {5, 15},  {6, 7},   {7, 8},   {7, 14},  {8, 9},   {9, 10},
                        {9, 13},  {10, 11}, {11, 12}, {11, 18}, {12, 13}, {12, 16},
                        {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19}});
}

// Skeleton of the regular icosahedron: 12 vertices, 30 edges, 5-regular.
Graph icosahedron() {
  return fromPairs(12, {{0, 1},  {0, 5},  {0, 7},  {0, 8},  {0, 11}, {1, 2},
                        {1, 5},  {1, 6},  {1, 8},  {2, 3},  {2, 6},  {2, 8},
                        {2, 9},  {3, 4},  {3, 6},  {3, 9},  {3, 10}, {4, 5},
                        {4, 6},  {4, 10}, {4, 11}, {5, 6},  {5, 11}, {7, 8},
                        {7, 9},  {7, 10}, {7, 11}, {8, 9},  {9, 10}, {10, 11}});
}

}  // namespace

Graph edgeless(std::size_t n) { return Graph(n, {}); }

Graph complete(std::size_t n) {
  require(n >= 1, "complete(n) requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle(n) requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
  require(n >= 1, "path(n) requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, std::move(edges));
}

Graph star(std::size_t n) {
  require(n >= 1, "star(n) requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, std::move(edges));
}

Graph wheel(std::size_t n) {
  require(n >= 3, "wheel(n) requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= n; ++v) edges.push_back({0, v});
  for (std::size_t v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return Graph(n + 1, std::move(edges));
}

Graph completeBipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "completeBipartite(a, b) requires a, b >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, std::move(edges));
}

Graph platonic(Platonic solid) {
  switch (solid) {
    case Platonic::Tetrahedron:
      return complete(4);
    case Platonic::Octahedron: {
      // K6 minus the perfect matching of antipodal pairs {0,1},{2,3},{4,5}.
      std::vector<Edge> edges;
      for (std::size_t u = 0; u < 6; ++u)
        for (std::size_t v = u + 1; v < 6; ++v)
          if (u / 2 != v / 2) edges.push_back({u, v});
      return Graph(6, std::move(edges));
    }
    case Platonic::Cube: {
      std::vector<Edge> edges;
      for (std::size_t u = 0; u < 8; ++u)
        for (std::size_t bit = 1; bit < 8; bit <<= 1)
          if ((u & bit) == 0) edges.push_back({u, u | bit});
      return Graph(8, std::move(edges));
    }
    case Platonic::Dodecahedron:
      return dodecahedron();
    case Platonic::Icosahedron:
      return icosahedron();
  }
  throw InputError("unknown Platonic solid");
}

Graph erdosRenyi(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "erdosRenyi requires 0 <= p <= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.nextUnit() < p) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph disjointUnion(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const std::size_t shift = g.order();
  for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g.order() + h.order(), std::move(edges));
}

namespace {
constexpr std::array<std::pair<std::string_view, Platonic>, 5> kPlatonicNames{{
    {"tetrahedron", Platonic::Tetrahedron},
    {"octahedron", Platonic::Octahedron},
    {"cube", Platonic::Cube},
    {"dodecahedron", Platonic::Dodecahedron},
    {"icosahedron", Platonic::Icosahedron},
}};
}  // namespace

Platonic platonicFromName(std::string_view name) {
  for (auto [n, s] : kPlatonicNames)
    if (n == name) return s;
  throw InputError("unknown Platonic solid '" + std::string(name) + "'");
}

std::string_view platonicName(Platonic solid) {
  for (auto [n, s] : kPlatonicNames)
    if (s == solid) return n;
  return "?";
}

Graph namedExample(std::string_view name) {
  if (name == "z1-example") return fromPairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  if (name == "kite-example") return fromPairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  if (name == "tadpole-example")
    return fromPairs(5, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 4}});
  if (name == "k4plus-example")
    return fromPairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  if (name == "example6")
    return fromPairs(6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  throw InputError("unknown example graph '" + std::string(name) + "'");
}

const std::vector<std::string>& namedExampleNames() {
  static const std::vector<std::string> names{"z1-example", "kite-example", "tadpole-example",
                                              "k4plus-example", "example6"};
  return names;
}

namespace {

std::vector<std::string_view> splitArgs(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(',', pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::uint64_t parseUnsigned(std::string_view tok, std::string_view spec) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw FormatError("generator spec '" + std::string(spec) + "': bad integer '" +
                      std::string(tok) + "'");
  return v;
}

double parseReal(std::string_view tok, std::string_view spec) {
  const std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw FormatError("generator spec '" + std::string(spec) + "': bad number '" + s + "'");
  return v;
}

}  // namespace

Graph fromGeneratorSpec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::vector<std::string_view> args =
      colon == std::string_view::npos ? std::vector<std::string_view>{}
                                      : splitArgs(spec.substr(colon + 1));
  auto expectArgs = [&](std::size_t count) {
    if (args.size() != count)
      throw FormatError("generator spec '" + std::string(spec) + "': expected " +
                        std::to_string(count) + " argument(s)");
  };
  auto uarg = [&](std::size_t i) { return static_cast<std::size_t>(parseUnsigned(args[i], spec)); };

  const auto& examples = namedExampleNames();
  if (std::find(examples.begin(), examples.end(), name) != examples.end()) {
    expectArgs(0);
    return namedExample(name);
  }
  if (name == "platonic") {
    expectArgs(1);
    try {
      return platonic(platonicFromName(args[0]));
    } catch (const InputError& e) {
      throw FormatError(e.what());
    }
  }
  if (name == "bipartite") {
    expectArgs(2);
    return completeBipartite(uarg(0), uarg(1));
  }
  if (name == "er") {
    expectArgs(3);
    return erdosRenyi(uarg(0), parseReal(args[1], spec), parseUnsigned(args[2], spec));
  }
  static const std::map<std::string_view, Graph (*)(std::size_t)> unary{
      {"edgeless", edgeless}, {"complete", complete}, {"cycle", cycle},
      {"path", path},         {"star", star},         {"wheel", wheel},
  };
  if (auto it = unary.find(name); it != unary.end()) {
    expectArgs(1);
    return it->second(uarg(0));
  }
  throw FormatError("unknown generator '" + std::string(name) + "'");
}

const std::vector<NamedGraph>& builtinCatalog() {
  static const std::vector<NamedGraph> catalog = [] {
    std::vector<std::string> specs;
    for (int n = 0; n <= 5; ++n) specs.push_back("edgeless:" + std::to_string(n));
    for (int n = 1; n <= 8; ++n) specs.push_back("complete:" + std::to_string(n));
    for (int n = 1; n <= 11; ++n) specs.push_back("path:" + std::to_string(n));
    for (int n = 1; n <= 11; ++n) specs.push_back("star:" + std::to_string(n));
    for (int n = 3; n <= 12; ++n) specs.push_back("cycle:" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) specs.push_back("wheel:" + std::to_string(n));
    for (int a = 1; a <= 4; ++a)
      for (int b = a; b <= 4; ++b)
        specs.push_back("bipartite:" + std::to_string(a) + "," + std::to_string(b));
    for (auto [name, solid] : kPlatonicNames) specs.push_back("platonic:" + std::string(name));
    for (const auto& ex : namedExampleNames()) specs.push_back(ex);
    for (const char* er : {"er:5,0.5,1", "er:6,0.4,2", "er:7,0.3,3", "er:8,0.25,4", "er:8,0.5,5",
                           "er:10,0.2,6", "er:12,0.3,7", "er:16,0.2,8", "er:20,0.15,9"})
      specs.push_back(er);

    std::vector<NamedGraph> out;
    out.reserve(specs.size());
    for (auto& s : specs) {
      Graph g = fromGeneratorSpec(s);
      out.push_back({std::move(s), std::move(g)});
    }
    return out;
  }();
  return catalog;
}

}  // namespace forestcount
