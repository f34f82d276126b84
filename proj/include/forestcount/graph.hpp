#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "forestcount/exactmat.hpp"

namespace forestcount {

/// Undirected edge stored with u < v. The low endpoint is the tail of the
/// fixed orientation used by incidence().
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on vertices 0..order()-1 in canonical form: every
/// edge has u < v, the list is sorted and free of duplicates.
class Graph {
 public:
  Graph() = default;
  /// Canonicalizes endpoint order and sorts. Throws InputError on
  /// self-loops, duplicate edges or endpoints >= n.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool hasEdge(std::size_t u, std::size_t v) const;
  /// Copy with edge number `index` (in canonical order) removed.
  Graph withoutEdge(std::size_t index) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when x and y were already in the same set.
  bool unite(std::size_t x, std::size_t y);
  std::size_t componentSize(std::size_t x) { return size_[find(x)]; }
  std::size_t components() const noexcept { return components_; }
  void reset();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

// --- edge-list text format ------------------------------------------------

/// Parses the edge-list format:
///   # comment
///   n 5        (optional, first non-comment line only)
///   0 1
///   3 2
/// Tokens are non-negative decimal integers separated by spaces. Throws
/// FormatError on anything else, including self-loops and duplicates.
Graph parseEdgeList(std::string_view text);
std::string serializeEdgeList(const Graph& g);

// --- algebraic constructions ----------------------------------------------

/// Combinatorial Laplacian D - A.
IntMatrix laplacian(const Graph& g);
/// |E| x n signed incidence matrix, -1 at the tail u and +1 at the head v of
/// each edge (u, v). incidence(g)^T * incidence(g) == laplacian(g).
IntMatrix incidence(const Graph& g);

std::vector<std::size_t> degreeSequence(const Graph& g);  // descending
std::size_t edgeCount(const Graph& g);
std::size_t connectedComponents(const Graph& g);
/// The empty graph (n == 0) is not connected: it has no spanning tree.
bool isConnected(const Graph& g);

// --- generators -----------------------------------------------------------

enum class Platonic { Tetrahedron, Octahedron, Cube, Dodecahedron, Icosahedron };

Graph edgeless(std::size_t n);
Graph complete(std::size_t n);                         // n >= 1
Graph cycle(std::size_t n);                            // n >= 3
Graph path(std::size_t n);                             // L_n on n >= 1 vertices
Graph star(std::size_t n);                             // center 0 plus n-1 leaves, n >= 1
Graph wheel(std::size_t n);                            // hub 0 joined to a rim cycle 1..n, n >= 3
Graph completeBipartite(std::size_t a, std::size_t b);  // a, b >= 1
Graph platonic(Platonic solid);
/// G(n, p): each of the C(n,2) pairs, in lexicographic order, is kept when
/// SplitMix64(seed).nextUnit() < p. One draw per pair.
Graph erdosRenyi(std::size_t n, double p, std::uint64_t seed);
/// Vertices of h are shifted by g.order().
Graph disjointUnion(const Graph& g, const Graph& h);

Platonic platonicFromName(std::string_view name);
std::string_view platonicName(Platonic solid);

/// Hand-entered graphs whose Laplacians appear in the worked examples:
/// "z1-example", "kite-example", "tadpole-example", "k4plus-example",
/// "example6". Throws InputError for unknown names.
Graph namedExample(std::string_view name);
const std::vector<std::string>& namedExampleNames();

/// Builds a graph from a generator spec "name[:arg[,arg...]]", e.g.
/// "complete:5", "bipartite:3,3", "platonic:icosahedron", "er:8,0.5,7",
/// "kite-example". Malformed specs throw FormatError; well-formed specs with
/// out-of-range parameters throw InputError.
Graph fromGeneratorSpec(std::string_view spec);

struct NamedGraph {
  std::string name;  // generator spec that rebuilds the graph
  Graph graph;
};

/// The fixed graph collection used by verification campaigns: edgeless,
/// complete, path, star, cycle, wheel and complete bipartite families at
/// small sizes, all Platonic solids, the worked examples and a few seeded
/// Erdos-Renyi samples.
const std::vector<NamedGraph>& builtinCatalog();

}  // namespace forestcount
