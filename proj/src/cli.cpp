#include "forestcount/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "forestcount/errors.hpp"
#include "forestcount/forest.hpp"
#include "forestcount/graph.hpp"
#include "forestcount/oracle.hpp"
#include "forestcount/random.hpp"
#include "forestcount/spectral.hpp"

namespace forestcount::cli {

using Json = nlohmann::ordered_json;

namespace {

struct GraphSource {
  std::string input;  // path or "-"
  std::string gen;    // generator spec
};

struct LoadedGraph {
  std::string name;
  Graph graph;
};

std::optional<LoadedGraph> loadGraph(const GraphSource& src, std::istream& in) {
  if (!src.input.empty() && !src.gen.empty())
    throw CLI::ValidationError("give either an input path or --gen, not both");
  if (!src.gen.empty()) return LoadedGraph{src.gen, fromGeneratorSpec(src.gen)};
  if (src.input.empty()) return std::nullopt;

  std::string text;
  if (src.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(src.input, std::ios::binary);
    if (!file) throw FormatError("cannot open input file '" + src.input + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  return LoadedGraph{src.input, parseEdgeList(text)};
}

LoadedGraph requireGraph(const GraphSource& src, std::istream& in) {
  auto g = loadGraph(src, in);
  if (!g) throw CLI::ValidationError("an input path, '-' or --gen SPEC is required");
  return std::move(*g);
}

Json graphSummary(const Graph& g) {
  return Json{{"n", g.order()}, {"edgeCount", g.edgeCount()}};
}

Json decimalArray(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

Json document(const char* command) {
  return Json{{"schemaVersion", kSchemaVersion}, {"command", command}};
}

void addGraphOptions(CLI::App* sub, GraphSource& src) {
  sub->add_option("input", src.input, "Edge-list file, or '-' for stdin");
  sub->add_option("--gen", src.gen, "Generator spec, e.g. complete:5, bipartite:3,3, kite-example");
}

std::string formatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double naturalLog(const BigInt& v) {
  signed long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string mode;
  GraphSource source;
  std::size_t maxEdges = kDefaultEnumerationCap;
  std::size_t catalogEdges = 10;
  std::int64_t kMax = 3;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::int64_t bound = 3;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool json = false;
};

std::vector<NamedGraph> verifyTargets(const std::optional<LoadedGraph>& given,
                                      const std::function<bool(const Graph&)>& keep) {
  if (given) return {NamedGraph{given->name, given->graph}};
  std::vector<NamedGraph> out;
  for (const auto& ng : builtinCatalog())
    if (keep(ng.graph)) out.push_back(ng);
  return out;
}

int verifyOracle(const VerifyOptions& opt, std::istream& in, Json& doc, std::ostream& err) {
  const auto given = loadGraph(opt.source, in);
  const auto targets = verifyTargets(
      given, [&](const Graph& g) { return g.edgeCount() <= std::min(opt.catalogEdges, opt.maxEdges); });
  std::size_t failures = 0;
  Json graphs = Json::array();
  for (const auto& [name, g] : targets) {
    const ForestCensus census = enumerateForests(g, opt.maxEdges);
    const ForestPolynomial fp = forestPolynomial(g);
    bool agree = true;
    for (std::int64_t k = 0; k <= opt.kMax; ++k) {
      if (censusEvaluate(census, BigInt(static_cast<long>(k))) != countRootedForests(g, k))
        agree = false;
      if (k >= 1 &&
          censusEvaluate(census, BigInt(-static_cast<long>(k))) != countSignedForests(g, k))
        agree = false;
    }
    for (std::size_t j = 0; j < fp.coeffs.size(); ++j) {
      const BigInt bucket = j < census.byEdgeCount.size() ? census.byEdgeCount[j] : BigInt(0);
      if (bucket != fp.coeffs[j]) agree = false;
    }
    if (census.byEdgeCount.size() > fp.coeffs.size()) agree = false;
    const BigInt total = censusEvaluate(census, 1);
    if (!agree) ++failures;
    err << (agree ? "ok    " : "FAIL  ") << name << ": n=" << g.order() << " |E|=" << g.edgeCount()
        << " forests=" << total.get_str() << "\n";
    graphs.push_back(Json{{"name", name},
                          {"n", g.order()},
                          {"edgeCount", g.edgeCount()},
                          {"census", decimalArray(census.byEdgeCount)},
                          {"total", total.get_str()},
                          {"agree", agree}});
  }
  doc["graphs"] = std::move(graphs);
  doc["failures"] = failures;
  err << targets.size() << " graph(s), " << failures << " failure(s)\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

int verifyCauchyBinetMode(const VerifyOptions& opt, Json& doc, std::ostream& err) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  if (opt.rows > 0 || opt.cols > 0) {
    if (opt.rows == 0 || opt.cols == 0)
      throw CLI::ValidationError("--rows and --cols must be given together");
    shapes.emplace_back(opt.rows, opt.cols);
  } else {
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t n = 1; n <= 4; ++n) shapes.emplace_back(m, n);
  }
  std::size_t failures = 0;
  std::size_t trials = 0;
  Json shapeDocs = Json::array();
  Json details = Json::array();
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const auto [m, n] = shapes[s];
    // Distinct seed stream per shape so shapes never share matrices.
    const std::uint64_t shapeSeed = opt.seed + s * opt.trials;
    const IdentityTrialReport rep = verifyCauchyBinet(m, n, opt.trials, shapeSeed, opt.bound);
    failures += rep.failures.size();
    trials += rep.trials;
    err << (rep.passed() ? "ok    " : "FAIL  ") << m << "x" << n << ": " << rep.trials
        << " trials, " << rep.checks << " checks, " << rep.failures.size() << " failure(s)\n";
    shapeDocs.push_back(Json{{"rows", m},
                             {"cols", n},
                             {"seed", shapeSeed},
                             {"trials", rep.trials},
                             {"checks", rep.checks},
                             {"failures", rep.failures.size()}});
    for (const auto& f : rep.failures)
      details.push_back(Json{{"trialSeed", f.trialSeed},
                             {"identity", f.identity},
                             {"F", f.f.toString()},
                             {"G", f.g.toString()},
                             {"lhs", f.lhs},
                             {"rhs", f.rhs}});
  }
  doc["shapes"] = std::move(shapeDocs);
  doc["trials"] = trials;
  doc["failures"] = failures;
  doc["failureDetails"] = std::move(details);
  err << trials << " trial(s), " << failures << " failure(s)\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

int verifyPoincare(const VerifyOptions& opt, std::istream& in, Json& doc, std::ostream& err) {
  const auto given = loadGraph(opt.source, in);
  const auto targets = verifyTargets(given, [](const Graph& g) {
    return g.edgeCount() <= kPoincareMaxEdges && g.order() <= kPoincareMaxOrder;
  });
  std::size_t failures = 0;
  Json graphs = Json::array();
  for (const auto& [name, g] : targets) {
    const PoincareReport rep = poincareScan(g);
    BigInt total = 0;
    for (const auto& s : rep.detSquaredSums) total += s;
    if (!rep.passed()) ++failures;
    err << (rep.passed() ? "ok    " : "FAIL  ") << name << ": " << rep.patternsScanned
        << " minors, max |minor|=" << rep.maxAbsMinor.get_str() << ", sum det^2=" << total.get_str()
        << "\n";
    graphs.push_back(Json{{"name", name},
                          {"patternsScanned", rep.patternsScanned},
                          {"maxAbsMinor", rep.maxAbsMinor.get_str()},
                          {"allUnimodular", rep.allUnimodular},
                          {"detSquaredSums", decimalArray(rep.detSquaredSums)},
                          {"forestCoefficients", decimalArray(rep.forestCoeffs)},
                          {"sumOfSquares", total.get_str()},
                          {"sumsMatch", rep.sumsMatch}});
  }
  doc["graphs"] = std::move(graphs);
  doc["failures"] = failures;
  err << targets.size() << " graph(s), " << failures << " failure(s)\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

int verifySpectral(const VerifyOptions& opt, std::istream& in, Json& doc, std::ostream& err) {
  const auto given = loadGraph(opt.source, in);
  const auto targets = verifyTargets(given, [](const Graph& g) { return g.order() <= 20; });
  std::size_t failures = 0;
  Json graphs = Json::array();
  for (const auto& [name, g] : targets) {
    const SpectralReport rep = spectralChecks(g);
    bool ok = rep.passed();
    double worst = 0;
    for (std::int64_t k = 1; k <= opt.kMax; ++k) {
      const BigInt exact = countRootedForests(g, k);
      const double rel = std::abs(productFormula(g, k) - exact.get_d()) / exact.get_d();
      worst = std::max(worst, rel);
    }
    if (worst > 1e-8) ok = false;
    if (!ok) ++failures;
    err << (ok ? "ok    " : "FAIL  ") << name << ": lambda_1=" << formatDouble(rep.spectrum.eigenvalues.empty() ? 0.0 : rep.spectrum.eigenvalues.front())
        << " product rel.err=" << formatDouble(worst) << "\n";
    for (const auto& v : rep.violations) err << "        " << v << "\n";
    Json eig = Json::array();
    for (double l : rep.spectrum.eigenvalues) eig.push_back(l);
    graphs.push_back(Json{{"name", name},
                          {"eigenvalues", std::move(eig)},
                          {"traceOk", rep.traceOk},
                          {"degreeBoundOk", rep.degreeBoundOk},
                          {"majorizationOk", rep.majorizationOk},
                          {"semidefiniteOk", rep.semidefiniteOk},
                          {"productRelativeError", worst},
                          {"ok", ok}});
  }
  doc["graphs"] = std::move(graphs);
  doc["failures"] = failures;
  err << targets.size() << " graph(s), " << failures << " failure(s)\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

// --- random ------------------------------------------------------------------

struct RandomOptions {
  std::size_t n = 8;
  double p = 0.5;
  std::size_t samples = 100;
  std::int64_t k = 1;
  std::uint64_t seed = 0;
  std::string out;
};

void writeRandomCsv(const RandomOptions& opt, std::ostream& os) {
  os << "sampleIndex,seed,edgeCount,count,logCount\n";
  SplitMix64 master(opt.seed);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::uint64_t sampleSeed = master.next();
    const Graph g = erdosRenyi(opt.n, opt.p, sampleSeed);
    const BigInt count = countRootedForests(g, opt.k);
    os << i << ',' << sampleSeed << ',' << g.edgeCount() << ',' << count.get_str() << ','
       << formatDouble(naturalLog(count)) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact rooted spanning-forest counts via det(I + kL)", "forestcount"};
  app.require_subcommand(1);

  std::function<int()> action;

  // count
  GraphSource countSrc;
  std::int64_t countK = 1;
  bool countSigned = false;
  auto* count = app.add_subcommand("count", "Print det(I + kL), or det(I - kL) with --signed");
  addGraphOptions(count, countSrc);
  count->add_option("--k", countK, "Number of edge colors")->capture_default_str();
  count->add_flag("--signed", countSigned, "Even minus odd forests, det(I - kL)");
  count->callback([&] {
    action = [&] {
      const LoadedGraph lg = requireGraph(countSrc, in);
      const CountReport rep = makeCountReport(
          lg.graph, countSigned ? CountKind::SignedForests : CountKind::RootedForests, countK);
      Json doc = document("count");
      doc["graph"] = graphSummary(lg.graph);
      doc["k"] = rep.k;
      doc["signed"] = countSigned;
      doc["interpretation"] = countKindName(rep.interpretation);
      doc["value"] = rep.value.get_str();
      out << doc.dump(2) << "\n";
      return int{kOk};
    };
  });

  // poly
  GraphSource polySrc;
  auto* poly = app.add_subcommand("poly", "Print the coefficients of det(I + xL)");
  addGraphOptions(poly, polySrc);
  poly->callback([&] {
    action = [&] {
      const LoadedGraph lg = requireGraph(polySrc, in);
      const ForestPolynomial fp = forestPolynomial(lg.graph);
      const bool connected = isConnected(lg.graph);
      Json doc = document("poly");
      doc["graph"] = graphSummary(lg.graph);
      doc["coefficients"] = decimalArray(fp.coeffs);
      doc["pseudoDeterminant"] = pseudoDeterminant(lg.graph).get_str();
      doc["connected"] = connected;
      doc["spanningTreeCount"] =
          connected ? Json(spanningTreeCount(lg.graph).get_str()) : Json(nullptr);
      out << doc.dump(2) << "\n";
      return int{kOk};
    };
  });

  // verify
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Check exact results against brute-force oracles");
  verify->add_option("mode", vopt.mode, "oracle | cauchy-binet | poincare | spectral")
      ->required()
      ->check(CLI::IsMember({"oracle", "cauchy-binet", "poincare", "spectral"}));
  addGraphOptions(verify, vopt.source);
  verify->add_option("--max-edges", vopt.maxEdges, "Forest enumeration cap")->capture_default_str();
  verify->add_option("--catalog-edges", vopt.catalogEdges,
                     "Oracle mode: largest built-in graph (in edges) to enumerate")
      ->capture_default_str();
  verify->add_option("--k-max", vopt.kMax, "Largest color count compared")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000}))
      ->capture_default_str();
  verify->add_option("--trials", vopt.trials, "Cauchy-Binet trials per shape")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Cauchy-Binet base seed")->capture_default_str();
  verify->add_option("--bound", vopt.bound, "Cauchy-Binet entry bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--rows", vopt.rows, "Cauchy-Binet matrix rows (default: sweep 1..4)");
  verify->add_option("--cols", vopt.cols, "Cauchy-Binet matrix columns (default: sweep 1..4)");
  verify->add_flag("--json", vopt.json, "Also print a JSON report on stdout");
  verify->callback([&] {
    action = [&] {
      Json doc = document("verify");
      doc["mode"] = vopt.mode;
      int code = kOk;
      if (vopt.mode == "oracle") code = verifyOracle(vopt, in, doc, err);
      else if (vopt.mode == "cauchy-binet") code = verifyCauchyBinetMode(vopt, doc, err);
      else if (vopt.mode == "poincare") code = verifyPoincare(vopt, in, doc, err);
      else code = verifySpectral(vopt, in, doc, err);
      doc["passed"] = code == kOk;
      if (vopt.json) out << doc.dump(2) << "\n";
      return code;
    };
  });

  // random
  RandomOptions ropt;
  auto* random = app.add_subcommand("random", "Sample Erdos-Renyi graphs and write counts as CSV");
  random->add_option("--n", ropt.n, "Vertex count")->required()->check(CLI::Range(std::size_t{0}, std::size_t{200}));
  random->add_option("--p", ropt.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  random->add_option("--samples", ropt.samples, "Number of samples")->required();
  random->add_option("--k", ropt.k, "Number of edge colors")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  random->add_option("--seed", ropt.seed, "Master seed")->capture_default_str();
  random->add_option("--out", ropt.out, "CSV output path, '-' for stdout")->required();
  random->callback([&] {
    action = [&] {
      if (ropt.out == "-") {
        writeRandomCsv(ropt, out);
        return int{kOk};
      }
      std::ostringstream buffer;
      writeRandomCsv(ropt, buffer);
      std::ofstream file(ropt.out, std::ios::binary | std::ios::trunc);
      if (!file) throw FormatError("cannot write '" + ropt.out + "'");
      file << buffer.str();
      if (!file.flush()) throw FormatError("write to '" + ropt.out + "' failed");
      err << "wrote " << ropt.samples << " sample(s) to " << ropt.out << "\n";
      return int{kOk};
    };
  });

  // gen
  std::string genSpec;
  auto* gen = app.add_subcommand("gen", "Print a generated graph in edge-list format");
  gen->add_option("spec", genSpec, "Generator spec, e.g. wheel:5")->required();
  gen->callback([&] {
    action = [&] {
      out << serializeEdgeList(fromGeneratorSpec(genSpec));
      return int{kOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsageError};
  }

  try {
    return action ? action() : int{kUsageError};
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace forestcount::cli
