#include <gtest/gtest.h>

#include <numeric>

#include "forestcount/errors.hpp"
#include "forestcount/graph.hpp"
#include "forestcount/random.hpp"

using namespace forestcount;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST(GraphType, CanonicalizesEdges) {
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.edgeCount(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
  EXPECT_TRUE(g.hasEdge(3, 1));
  EXPECT_FALSE(g.hasEdge(2, 3));
}

TEST(GraphType, RejectsNonSimple) {
  EXPECT_THROW(Graph(2, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
}

TEST(ParseEdgeList, HeaderAndEdges) {
  const Graph g = parseEdgeList("n 3\n0 1\n1 2\n0 2");
  EXPECT_EQ(g, triangle());
}

TEST(ParseEdgeList, OrderFromMaxIndex) {
  const Graph g = parseEdgeList("0 1");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.edgeCount(), 1u);
}

TEST(ParseEdgeList, CommentsBlanksSpacingAndOrder) {
  const Graph g = parseEdgeList("# a comment\n\nn 5\n# another\n  3   1 \r\n2 0\n\n");
  EXPECT_EQ(g, Graph(5, {{1, 3}, {0, 2}}));
}

TEST(ParseEdgeList, EmptyAndHeaderOnly) {
  EXPECT_EQ(parseEdgeList(""), Graph());
  EXPECT_EQ(parseEdgeList("n 4\n"), edgeless(4));
}

TEST(ParseEdgeList, Errors) {
  EXPECT_THROW(parseEdgeList("n 2\n0 0"), FormatError);         // self-loop
  EXPECT_THROW(parseEdgeList("0 1\n1 0"), FormatError);         // duplicate
  EXPECT_THROW(parseEdgeList("0 -1"), FormatError);             // negative
  EXPECT_THROW(parseEdgeList("0 x"), FormatError);              // non-numeric
  EXPECT_THROW(parseEdgeList("0 +1"), FormatError);
  EXPECT_THROW(parseEdgeList("n 2\n0 2"), FormatError);         // index >= n
  EXPECT_THROW(parseEdgeList("0 1 2"), FormatError);            // arity
  EXPECT_THROW(parseEdgeList("0 1\nn 3"), FormatError);         // late header
  EXPECT_THROW(parseEdgeList("n"), FormatError);
  EXPECT_THROW(parseEdgeList("0\t1"), FormatError);             // spaces only
  EXPECT_THROW(parseEdgeList("99999999999999999999999 1"), FormatError);
}

TEST(ParseEdgeList, RoundTripsEveryCatalogGraph) {
  for (const auto& [name, g] : builtinCatalog()) {
    ASSERT_EQ(parseEdgeList(serializeEdgeList(g)), g) << name;
  }
}

TEST(Laplacian, Triangle) {
  EXPECT_EQ(laplacian(triangle()), (IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

TEST(Laplacian, Z1Example) {
  EXPECT_EQ(laplacian(namedExample("z1-example")),
            (IntMatrix{{3, -1, -1, -1}, {-1, 2, -1, 0}, {-1, -1, 2, 0}, {-1, 0, 0, 1}}));
}

TEST(Laplacian, WorkedExampleMatrices) {
  EXPECT_EQ(laplacian(namedExample("kite-example")),
            (IntMatrix{{3, -1, -1, -1}, {-1, 2, -1, 0}, {-1, -1, 3, -1}, {-1, 0, -1, 2}}));
  EXPECT_EQ(laplacian(namedExample("tadpole-example")),
            (IntMatrix{{2, -1, 0, -1, 0},
                       {-1, 2, -1, 0, 0},
                       {0, -1, 2, -1, 0},
                       {-1, 0, -1, 3, -1},
                       {0, 0, 0, -1, 1}}));
  EXPECT_EQ(laplacian(namedExample("k4plus-example")),
            (IntMatrix{{3, -1, -1, -1, 0},
                       {-1, 3, -1, -1, 0},
                       {-1, -1, 3, -1, 0},
                       {-1, -1, -1, 4, -1},
                       {0, 0, 0, -1, 1}}));
  EXPECT_EQ(laplacian(namedExample("example6")),
            (IntMatrix{{4, -1, -1, -1, 0, -1},
                       {-1, 3, -1, -1, 0, 0},
                       {-1, -1, 3, -1, 0, 0},
                       {-1, -1, -1, 4, -1, 0},
                       {0, 0, 0, -1, 2, -1},
                       {-1, 0, 0, 0, -1, 2}}));
  EXPECT_THROW(namedExample("petersen"), InputError);
}

TEST(Laplacian, Edgeless) { EXPECT_EQ(laplacian(edgeless(3)), IntMatrix(3, 3)); }

TEST(Laplacian, InvariantsOnCatalog) {
  for (const auto& [name, g] : builtinCatalog()) {
    const IntMatrix l = laplacian(g);
    ASSERT_TRUE(l.isSymmetric()) << name;
    for (std::size_t i = 0; i < l.rows(); ++i) {
      BigInt row = 0;
      for (std::size_t j = 0; j < l.cols(); ++j) row += l(i, j);
      ASSERT_EQ(row, 0) << name;
    }
    ASSERT_EQ(l.trace(), 2 * static_cast<long>(edgeCount(g))) << name;
  }
}

TEST(Incidence, PathAndTriangle) {
  EXPECT_EQ(incidence(path(2)), (IntMatrix{{-1, 1}}));
  EXPECT_EQ(incidence(triangle()), (IntMatrix{{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
}

TEST(Incidence, GramIsLaplacianOnSmallGenerators) {
  for (const auto& [name, g] : builtinCatalog()) {
    if (g.order() > 12) continue;
    const IntMatrix c = incidence(g);
    ASSERT_EQ(matMul(transpose(c), c), laplacian(g)) << name;
  }
}

TEST(Generators, CompleteCycleTriangle) {
  EXPECT_EQ(complete(3), triangle());
  EXPECT_EQ(cycle(3), triangle());
  EXPECT_EQ(complete(6).edgeCount(), 15u);
}

TEST(Generators, WheelThreeIsK4) {
  const Graph w = wheel(3);
  EXPECT_EQ(w.order(), 4u);
  EXPECT_EQ(w.edgeCount(), 6u);
  EXPECT_EQ(w, complete(4));  // every pair present, so equal as labelled graphs
  EXPECT_EQ(degreeSequence(wheel(6)), (std::vector<std::size_t>{6, 3, 3, 3, 3, 3, 3}));
}

TEST(Generators, DisjointUnionShiftsVertices) {
  EXPECT_EQ(disjointUnion(path(2), path(2)), Graph(4, {{0, 1}, {2, 3}}));
}

TEST(Generators, StarPathBipartite) {
  EXPECT_EQ(star(1), edgeless(1));
  EXPECT_EQ(star(2), path(2));
  EXPECT_EQ(path(1).edgeCount(), 0u);
  const Graph k23 = completeBipartite(2, 3);
  EXPECT_EQ(k23.order(), 5u);
  EXPECT_EQ(k23.edgeCount(), 6u);
  EXPECT_EQ(completeBipartite(2, 2).edgeCount(), cycle(4).edgeCount());
}

TEST(Generators, ParameterErrors) {
  EXPECT_THROW(cycle(2), InputError);
  EXPECT_THROW(wheel(2), InputError);
  EXPECT_THROW(complete(0), InputError);
  EXPECT_THROW(path(0), InputError);
  EXPECT_THROW(star(0), InputError);
  EXPECT_THROW(completeBipartite(0, 3), InputError);
  EXPECT_THROW(erdosRenyi(5, 1.5, 1), InputError);
  EXPECT_THROW(erdosRenyi(5, -0.1, 1), InputError);
}

TEST(Generators, PlatonicSkeletons) {
  struct Expect {
    Platonic solid;
    std::size_t n, m, degree;
  };
  for (auto [solid, n, m, d] : {Expect{Platonic::Tetrahedron, 4, 6, 3},
                                Expect{Platonic::Octahedron, 6, 12, 4},
                                Expect{Platonic::Cube, 8, 12, 3},
                                Expect{Platonic::Dodecahedron, 20, 30, 3},
                                Expect{Platonic::Icosahedron, 12, 30, 5}}) {
    const Graph g = platonic(solid);
    EXPECT_EQ(g.order(), n) << platonicName(solid);
    EXPECT_EQ(g.edgeCount(), m) << platonicName(solid);
    for (auto deg : degreeSequence(g)) EXPECT_EQ(deg, d) << platonicName(solid);
    EXPECT_TRUE(isConnected(g));
  }
}

TEST(Generators, PlatonicSkeletonsHaveNoShortCycles) {
  // Triangle-free exactly for the cube and dodecahedron; the dodecahedron
  // also has no 4-cycles (girth 5).
  auto triangles = [](const Graph& g) {
    std::size_t t = 0;
    for (const auto& e : g.edges())
      for (std::size_t w = e.v + 1; w < g.order(); ++w)
        if (g.hasEdge(e.u, w) && g.hasEdge(e.v, w)) ++t;
    return t;
  };
  EXPECT_EQ(triangles(platonic(Platonic::Cube)), 0u);
  EXPECT_EQ(triangles(platonic(Platonic::Dodecahedron)), 0u);
  EXPECT_EQ(triangles(platonic(Platonic::Tetrahedron)), 4u);
  EXPECT_EQ(triangles(platonic(Platonic::Octahedron)), 8u);
  EXPECT_EQ(triangles(platonic(Platonic::Icosahedron)), 20u);

  const Graph d = platonic(Platonic::Dodecahedron);
  // A 4-cycle exists iff some vertex pair shares two neighbours.
  for (std::size_t a = 0; a < d.order(); ++a)
    for (std::size_t b = a + 1; b < d.order(); ++b) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < d.order(); ++w)
        if (d.hasEdge(a, w) && d.hasEdge(b, w)) ++common;
      EXPECT_LE(common, 1u) << a << "," << b;
    }
}

TEST(Generators, ErdosRenyiReproducible) {
  EXPECT_EQ(erdosRenyi(12, 0.4, 77), erdosRenyi(12, 0.4, 77));
  EXPECT_NE(erdosRenyi(12, 0.4, 77), erdosRenyi(12, 0.4, 78));
  EXPECT_EQ(erdosRenyi(9, 0.0, 5).edgeCount(), 0u);
  EXPECT_EQ(erdosRenyi(9, 1.0, 5), complete(9));
}

TEST(Generators, ErdosRenyiUsesOneDrawPerPair) {
  // Re-derive the edge set straight from the documented generator.
  SplitMix64 rng(2024);
  std::vector<Edge> expected;
  for (std::size_t u = 0; u < 7; ++u)
    for (std::size_t v = u + 1; v < 7; ++v)
      if (rng.nextUnit() < 0.35) expected.push_back({u, v});
  EXPECT_EQ(erdosRenyi(7, 0.35, 2024), Graph(7, expected));
}

TEST(SplitMix, ReferenceOutputs) {
  // First two outputs of the SplitMix64 reference algorithm for two seeds.
  SplitMix64 a(0);
  EXPECT_EQ(a.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(a.next(), 0x6E789E6AA1B965F4ULL);
  SplitMix64 b(1234567);
  EXPECT_EQ(b.next(), 6457827717110365317ULL);
  EXPECT_EQ(b.next(), 3203168211198807973ULL);
}

TEST(SplitMix, UniformIntStaysInRange) {
  SplitMix64 rng(5);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.uniformInt(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    ++hist[static_cast<std::size_t>(v + 3)];
  }
  for (int h : hist) EXPECT_GT(h, 800);
}

TEST(GeneratorSpec, ParsesFamilies) {
  EXPECT_EQ(fromGeneratorSpec("complete:5"), complete(5));
  EXPECT_EQ(fromGeneratorSpec("bipartite:3,3"), completeBipartite(3, 3));
  EXPECT_EQ(fromGeneratorSpec("platonic:icosahedron"), platonic(Platonic::Icosahedron));
  EXPECT_EQ(fromGeneratorSpec("er:8,0.5,7"), erdosRenyi(8, 0.5, 7));
  EXPECT_EQ(fromGeneratorSpec("kite-example"), namedExample("kite-example"));
  EXPECT_EQ(fromGeneratorSpec("edgeless:0"), Graph());
}

TEST(GeneratorSpec, Errors) {
  EXPECT_THROW(fromGeneratorSpec("complete"), FormatError);
  EXPECT_THROW(fromGeneratorSpec("complete:x"), FormatError);
  EXPECT_THROW(fromGeneratorSpec("complete:3,4"), FormatError);
  EXPECT_THROW(fromGeneratorSpec("petersen:10"), FormatError);
  EXPECT_THROW(fromGeneratorSpec("platonic:sphere"), FormatError);
  EXPECT_THROW(fromGeneratorSpec("kite-example:1"), FormatError);
  EXPECT_THROW(fromGeneratorSpec("cycle:2"), InputError);
  EXPECT_THROW(fromGeneratorSpec("er:5,2,1"), InputError);
}

TEST(Degrees, TriangleAndStar) {
  EXPECT_EQ(degreeSequence(triangle()), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(edgeCount(triangle()), 3u);
  EXPECT_EQ(degreeSequence(star(4)), (std::vector<std::size_t>{3, 1, 1, 1}));
}

TEST(Degrees, HandshakeOnCatalog) {
  for (const auto& [name, g] : builtinCatalog()) {
    const auto d = degreeSequence(g);
    ASSERT_EQ(std::accumulate(d.begin(), d.end(), std::size_t{0}), 2 * edgeCount(g)) << name;
    ASSERT_TRUE(std::is_sorted(d.rbegin(), d.rend())) << name;
  }
}

TEST(Components, CountsAndConnectivity) {
  EXPECT_EQ(connectedComponents(edgeless(4)), 4u);
  EXPECT_EQ(connectedComponents(disjointUnion(cycle(3), path(3))), 2u);
  EXPECT_TRUE(isConnected(wheel(5)));
  EXPECT_TRUE(isConnected(edgeless(1)));
  EXPECT_FALSE(isConnected(Graph()));
}

TEST(UnionFindType, UniteAndReset) {
  UnionFind uf(5);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(1, 2));
  EXPECT_FALSE(uf.unite(0, 2));
  EXPECT_EQ(uf.components(), 3u);
  EXPECT_EQ(uf.componentSize(2), 3u);
  uf.reset();
  EXPECT_EQ(uf.components(), 5u);
  EXPECT_EQ(uf.componentSize(2), 1u);
}

TEST(GraphType, WithoutEdge) {
  const Graph g = triangle().withoutEdge(1);
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW(triangle().withoutEdge(3), IndexError);
}
