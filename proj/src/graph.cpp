#include "forestcount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <optional>

#include "forestcount/errors.hpp"

namespace forestcount {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n_)
      throw InputError("edge endpoint " + std::to_string(e.v) + " >= vertex count " +
                       std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InputError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
}

bool Graph::hasEdge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph Graph::withoutEdge(std::size_t index) const {
  if (index >= edges_.size()) throw IndexError("withoutEdge: edge index out of range");
  Graph h = *this;
  h.edges_.erase(h.edges_.begin() + static_cast<std::ptrdiff_t>(index));
  return h;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --components_;
  return true;
}

void UnionFind::reset() {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  std::fill(size_.begin(), size_.end(), std::size_t{1});
  components_ = parent_.size();
}

namespace {

std::vector<std::string_view> splitSpaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos == line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::size_t parseIndex(std::string_view token, std::size_t lineNo) {
  std::size_t value = 0;
  const bool digitsOnly =
      !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (!digitsOnly || ec != std::errc{} || ptr != token.data() + token.size())
    throw FormatError("line " + std::to_string(lineNo) + ": expected a non-negative integer, got '" +
                      std::string(token) + "'");
  return value;
}

}  // namespace

Graph parseEdgeList(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::size_t maxIndex = 0;
  bool sawContent = false;
  std::size_t lineNo = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    auto tokens = splitSpaces(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "n") {
      if (sawContent)
        throw FormatError("line " + std::to_string(lineNo) +
                          ": vertex-count header must be the first non-comment line");
      if (tokens.size() != 2)
        throw FormatError("line " + std::to_string(lineNo) + ": expected 'n <count>'");
      declared = parseIndex(tokens[1], lineNo);
      sawContent = true;
      continue;
    }
    sawContent = true;
    if (tokens.size() != 2)
      throw FormatError("line " + std::to_string(lineNo) + ": expected '<u> <v>'");
    const std::size_t u = parseIndex(tokens[0], lineNo);
    const std::size_t v = parseIndex(tokens[1], lineNo);
    if (u == v) throw FormatError("line " + std::to_string(lineNo) + ": self-loop");
    if (declared && (u >= *declared || v >= *declared))
      throw FormatError("line " + std::to_string(lineNo) + ": vertex index exceeds declared n");
    maxIndex = std::max({maxIndex, u, v});
    edges.push_back({std::min(u, v), std::max(u, v)});
  }

  const std::size_t n = declared ? *declared : (edges.empty() ? 0 : maxIndex + 1);
  try {
    return Graph(n, std::move(edges));
  } catch (const InputError& e) {
    throw FormatError(e.what());
  }
}

std::string serializeEdgeList(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix l(g.order(), g.order());
  for (const auto& e : g.edges()) {
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
  }
  return l;
}

IntMatrix incidence(const Graph& g) {
  IntMatrix c(g.edgeCount(), g.order());
  for (std::size_t i = 0; i < g.edgeCount(); ++i) {
    c(i, g.edges()[i].u) = -1;
    c(i, g.edges()[i].v) = 1;
  }
  return c;
}

std::vector<std::size_t> degreeSequence(const Graph& g) {
  std::vector<std::size_t> deg(g.order(), 0);
  for (const auto& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

std::size_t edgeCount(const Graph& g) { return g.edgeCount(); }

std::size_t connectedComponents(const Graph& g) {
  UnionFind uf(g.order());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  return uf.components();
}

bool isConnected(const Graph& g) { return connectedComponents(g) == 1; }

}  // namespace forestcount
