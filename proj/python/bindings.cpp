#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "forestcount/errors.hpp"
#include "forestcount/forest.hpp"
#include "forestcount/graph.hpp"
#include "forestcount/oracle.hpp"
#include "forestcount/spectral.hpp"

namespace py = pybind11;
using namespace forestcount;

namespace {

// Big integers cross the boundary as decimal strings so arbitrary sizes survive.
py::int_ toPy(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt fromPy(const py::int_& v) { return BigInt{py::str(static_cast<py::handle>(v)).cast<std::string>()}; }

py::list toPy(const std::vector<BigInt>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(toPy(v));
  return out;
}

IntMatrix matrixFromPy(const std::vector<std::vector<py::int_>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = fromPy(rows[i][j]);
  }
  return out;
}

py::list matrixToPy(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(toPy(m(i, j)));
    rows.append(row);
  }
  return rows;
}

Graph makeGraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph(n, std::move(es));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rooted spanning forest counts via det(I + kL)";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_OverflowError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<IndexError>(m, "IndexError", PyExc_IndexError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&makeGraph), py::arg("n"), py::arg("edges") = std::vector<std::pair<std::size_t, std::size_t>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edgeCount)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::size_t, std::size_t>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("has_edge", &Graph::hasEdge)
      .def("without_edge", &Graph::withoutEdge, py::arg("index"))
      .def("is_connected", [](const Graph& g) { return isConnected(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edgeCount()) + ")";
      });

  m.def("from_spec", [](const std::string& spec) { return fromGeneratorSpec(spec); }, py::arg("spec"),
        "Build a graph from a generator spec such as 'complete:5' or 'platonic:cube'.");
  m.def("parse_edge_list", [](const std::string& text) { return parseEdgeList(text); }, py::arg("text"));
  m.def("serialize_edge_list", &serializeEdgeList, py::arg("graph"));
  m.def("laplacian", [](const Graph& g) { return matrixToPy(laplacian(g)); }, py::arg("graph"));

  m.def("det", [](const std::vector<std::vector<py::int_>>& rows) { return toPy(det(matrixFromPy(rows))); },
        py::arg("matrix"), "Exact determinant of a square integer matrix.");

  m.def("forest_polynomial", [](const Graph& g) { return toPy(forestPolynomial(g).coeffs); }, py::arg("graph"));
  m.def("count_rooted_forests", [](const Graph& g, std::int64_t k) { return toPy(countRootedForests(g, k)); },
        py::arg("graph"), py::arg("k") = 1);
  m.def("count_signed_forests", [](const Graph& g, std::int64_t k) { return toPy(countSignedForests(g, k)); },
        py::arg("graph"), py::arg("k") = 1);
  m.def("pseudo_determinant", [](const Graph& g) { return toPy(pseudoDeterminant(g)); }, py::arg("graph"));
  m.def("spanning_tree_count", [](const Graph& g) { return toPy(spanningTreeCount(g)); }, py::arg("graph"));

  m.def("enumerate_forests",
        [](const Graph& g, std::size_t maxEdges) { return toPy(enumerateForests(g, maxEdges).byEdgeCount); },
        py::arg("graph"), py::arg("max_edges") = kDefaultEnumerationCap,
        "Brute-force census: entry j counts rooted forests with j edges.");
  m.def("census_evaluate",
        [](const std::vector<py::int_>& buckets, const py::int_& k) {
          ForestCensus c;
          for (const auto& b : buckets) c.byEdgeCount.push_back(fromPy(b));
          return toPy(censusEvaluate(c, fromPy(k)));
        },
        py::arg("census"), py::arg("k"));

  m.def("verify_cauchy_binet",
        [](std::size_t rows, std::size_t cols, std::size_t trials, std::uint64_t seed, std::int64_t bound) {
          const IdentityTrialReport r = verifyCauchyBinet(rows, cols, trials, seed, bound);
          py::dict out;
          out["trials"] = r.trials;
          out["checks"] = r.checks;
          out["failures"] = r.failures.size();
          out["passed"] = r.passed();
          return out;
        },
        py::arg("rows"), py::arg("cols"), py::arg("trials") = 1000, py::arg("seed") = 42,
        py::arg("bound") = 3);
  m.def("poincare_scan",
        [](const Graph& g) {
          const PoincareReport r = poincareScan(g);
          py::dict out;
          out["patterns_scanned"] = r.patternsScanned;
          out["max_abs_minor"] = toPy(r.maxAbsMinor);
          out["all_unimodular"] = r.allUnimodular;
          out["det_squared_sums"] = toPy(r.detSquaredSums);
          out["sums_match"] = r.sumsMatch;
          return out;
        },
        py::arg("graph"));

  m.def("eigenvalues", [](const Graph& g) { return eigenvaluesSym(laplacian(g)).eigenvalues; }, py::arg("graph"),
        "Laplacian eigenvalues in descending order.");
  m.def("product_formula", &productFormula, py::arg("graph"), py::arg("k") = 1);
}
