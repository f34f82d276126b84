#include "forestcount/oracle.hpp"

#include <algorithm>
#include <type_traits>

#include "forestcount/errors.hpp"
#include "forestcount/forest.hpp"
#include "forestcount/random.hpp"

namespace forestcount {

ForestCensus enumerateForests(const Graph& g, std::size_t maxEdges) {
  const std::size_t m = g.edgeCount();
  if (m > maxEdges || m >= 63)
    throw LimitError("enumerateForests: " + std::to_string(m) + " edges exceeds cap of " +
                     std::to_string(std::min<std::size_t>(maxEdges, 62)));
  const std::size_t n = g.order();
  std::vector<BigInt> buckets(m + 1);
  UnionFind uf(n);
  const auto& edges = g.edges();

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    uf.reset();
    bool acyclic = true;
    for (std::size_t e = 0; e < m && acyclic; ++e)
      if (mask & (std::uint64_t{1} << e)) acyclic = uf.unite(edges[e].u, edges[e].v);
    if (!acyclic) continue;
    // Roots: one per component, chosen among its vertices.
    std::uint64_t rootings = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (uf.find(v) == v) rootings *= uf.componentSize(v);
    buckets[static_cast<std::size_t>(__builtin_popcountll(mask))] += rootings;
  }

  while (buckets.size() > 1 && buckets.back() == 0) buckets.pop_back();
  return ForestCensus{n, std::move(buckets)};
}

BigInt censusEvaluate(const ForestCensus& census, const BigInt& k) {
  BigInt acc = 0;
  for (auto it = census.byEdgeCount.rbegin(); it != census.byEdgeCount.rend(); ++it)
    acc = acc * k + *it;
  return acc;
}

IntPolynomial minorSumPolynomial(const IntMatrix& f, const IntMatrix& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw DimensionError("minorSumPolynomial: F and G differ in shape");
  const std::size_t maxSize = std::min(f.rows(), f.cols());
  if (maxSize > 6) throw LimitError("minorSumPolynomial: min(rows, cols) exceeds 6");

  std::vector<BigInt> coeffs(maxSize + 1);
  coeffs[0] = 1;
  Pattern p;
  for (std::size_t size = 1; size <= maxSize; ++size) {
    forEachSubset(f.rows(), size, [&](const std::vector<std::size_t>& rows) {
      p.rows = rows;
      forEachSubset(f.cols(), size, [&](const std::vector<std::size_t>& cols) {
        p.cols = cols;
        const BigInt df = minorDet(f, p);
        if (df == 0) return;
        coeffs[size] += df * minorDet(g, p);
      });
    });
  }
  return IntPolynomial(std::move(coeffs));
}

namespace {

IntMatrix drawMatrix(SplitMix64& rng, std::size_t m, std::size_t n, std::int64_t bound) {
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng.uniformInt(-bound, bound));
  return a;
}

// Coefficients of det(base + shift * x * I), recovered from the evaluations
// at x = 0..n.
IntPolynomial detShiftPolynomial(const IntMatrix& base, long shift) {
  const std::size_t n = base.rows();
  std::vector<std::pair<BigInt, BigInt>> samples;
  for (std::size_t x = 0; x <= n; ++x) {
    const long xv = static_cast<long>(x);
    samples.emplace_back(BigInt(xv), det(addScaledIdentity(base, BigInt(xv * shift))));
  }
  return interpolateIntegerPolynomial(samples);
}

IntPolynomial detOnePlusX(const IntMatrix& product) {
  // det(I + xM) sampled at x = 0..n.
  const std::size_t n = product.rows();
  std::vector<std::pair<BigInt, BigInt>> samples;
  for (std::size_t x = 0; x <= n; ++x) {
    const BigInt xv(static_cast<unsigned long>(x));
    samples.emplace_back(xv, det(addScaledIdentity(scale(product, xv), 1)));
  }
  return interpolateIntegerPolynomial(samples);
}

}  // namespace

IdentityTrialReport verifyCauchyBinet(std::size_t m, std::size_t n, std::size_t trials,
                                      std::uint64_t seed, std::int64_t entryBound) {
  if (m == 0 || n == 0) throw InputError("verifyCauchyBinet: m and n must be positive");
  if (std::min(m, n) > 5) throw LimitError("verifyCauchyBinet: min(m, n) exceeds 5");
  if (entryBound < 1) throw InputError("verifyCauchyBinet: entryBound must be >= 1");

  IdentityTrialReport report;
  report.maxDimension = {m, n};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trialSeed = seed + t;
    SplitMix64 rng(trialSeed);
    const IntMatrix f = drawMatrix(rng, m, n, entryBound);
    const IntMatrix g = drawMatrix(rng, m, n, entryBound);
    ++report.trials;

    auto check = [&](const char* identity, const auto& lhs, const auto& rhs, const IntMatrix& gUsed) {
      ++report.checks;
      if (lhs == rhs) return;
      IdentityFailure fail;
      fail.trialIndex = t;
      fail.trialSeed = trialSeed;
      fail.identity = identity;
      fail.f = f;
      fail.g = gUsed;
      if constexpr (std::is_same_v<std::decay_t<decltype(lhs)>, IntPolynomial>) {
        fail.lhs = lhs.toString();
        fail.rhs = rhs.toString();
      } else {
        fail.lhs = lhs.get_str();
        fail.rhs = rhs.get_str();
      }
      report.failures.push_back(std::move(fail));
    };

    const IntMatrix ftg = matMul(transpose(f), g);
    const IntPolynomial minorSum = minorSumPolynomial(f, g);

    check(kIdentityMinorSum, det(addScaledIdentity(ftg, 1)), minorSum.evaluate(1), g);
    check(kIdentityPolynomial, detOnePlusX(ftg), minorSum, g);

    // det(F^T G - x) has coefficient (-1)^d * c_{n-d} at x^d, where c are the
    // minor-sum coefficients (zero beyond min(m, n)).
    std::vector<BigInt> expectedChar(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
      BigInt c = minorSum.coefficient(n - d);
      expectedChar[d] = (d % 2 == 0) ? c : BigInt(-c);
    }
    check(kIdentityCharPoly, detShiftPolynomial(ftg, -1), IntPolynomial(std::move(expectedChar)), g);

    const IntMatrix ftf = matMul(transpose(f), f);
    const IntPolynomial squares = minorSumPolynomial(f, f);
    check(kIdentityPythagoras, det(addScaledIdentity(ftf, 1)), squares.evaluate(1), f);
    check(kIdentityWeighted, det(addScaledIdentity(scale(ftf, 2), 1)), squares.evaluate(2), f);
  }
  return report;
}

PoincareReport poincareScan(const Graph& g) {
  if (g.edgeCount() > kPoincareMaxEdges || g.order() > kPoincareMaxOrder)
    throw LimitError("poincareScan: graph exceeds " + std::to_string(kPoincareMaxEdges) +
                     " edges or " + std::to_string(kPoincareMaxOrder) + " vertices");
  const IntMatrix c = incidence(g);
  const std::size_t maxSize = std::min(c.rows(), c.cols());

  PoincareReport r;
  r.detSquaredSums.assign(maxSize + 1, 0);
  Pattern p;
  for (std::size_t size = 0; size <= maxSize; ++size) {
    forEachSubset(c.rows(), size, [&](const std::vector<std::size_t>& rows) {
      p.rows = rows;
      forEachSubset(c.cols(), size, [&](const std::vector<std::size_t>& cols) {
        p.cols = cols;
        const BigInt d = minorDet(c, p);
        ++r.patternsScanned;
        const BigInt a = abs(d);
        if (a > r.maxAbsMinor) r.maxAbsMinor = a;
        if (a > 1) r.allUnimodular = false;
        r.detSquaredSums[size] += d * d;
      });
    });
  }

  r.forestCoeffs = forestPolynomial(g).coeffs;
  r.sumsMatch = true;
  for (std::size_t j = 0; j < r.forestCoeffs.size(); ++j) {
    const BigInt scanned = j < r.detSquaredSums.size() ? r.detSquaredSums[j] : BigInt(0);
    if (scanned != r.forestCoeffs[j]) r.sumsMatch = false;
  }
  for (std::size_t j = r.forestCoeffs.size(); j < r.detSquaredSums.size(); ++j)
    if (r.detSquaredSums[j] != 0) r.sumsMatch = false;
  return r;
}

}  // namespace forestcount
