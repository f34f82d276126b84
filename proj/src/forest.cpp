#include "forestcount/forest.hpp"

#include <utility>

#include "forestcount/errors.hpp"

namespace forestcount {

BigInt ForestPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string_view countKindName(CountKind kind) {
  switch (kind) {
    case CountKind::RootedForests:
      return "rootedForests";
    case CountKind::SignedForests:
      return "signedForests";
    case CountKind::SpanningTrees:
      return "spanningTrees";
    case CountKind::PseudoDeterminant:
      return "pseudoDeterminant";
  }
  return "?";
}

namespace {

BigInt detIdentityPlus(const IntMatrix& lap, const BigInt& k) {
  return det(addScaledIdentity(scale(lap, k), 1));
}

}  // namespace

ForestPolynomial forestPolynomial(const Graph& g) {
  const std::size_t n = g.order();
  const IntMatrix lap = laplacian(g);
  std::vector<std::pair<BigInt, BigInt>> samples;
  samples.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const BigInt x(static_cast<unsigned long>(k));
    samples.emplace_back(x, detIdentityPlus(lap, x));
  }
  const IntPolynomial p = interpolateIntegerPolynomial(samples);
  if (p.degree() > n) throw ConsistencyError("forest polynomial degree exceeds graph order");

  ForestPolynomial fp;
  fp.graphOrder = n;
  fp.coeffs.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) fp.coeffs[j] = p.coefficient(j);
  if (fp.coeffs[0] != 1) throw ConsistencyError("forest polynomial constant term is not 1");
  return fp;
}

BigInt countRootedForests(const Graph& g, std::int64_t k) {
  if (k < 0) throw InputError("countRootedForests requires k >= 0");
  return detIdentityPlus(laplacian(g), BigInt(static_cast<long>(k)));
}

BigInt countSignedForests(const Graph& g, std::int64_t k) {
  if (k < 1) throw InputError("countSignedForests requires k >= 1");
  return detIdentityPlus(laplacian(g), BigInt(-static_cast<long>(k)));
}

BigInt pseudoDeterminant(const Graph& g) {
  const ForestPolynomial fp = forestPolynomial(g);
  for (auto it = fp.coeffs.rbegin(); it != fp.coeffs.rend(); ++it)
    if (*it != 0) return *it;
  return 1;  // unreachable: coeffs[0] == 1
}

BigInt spanningTreeCount(const Graph& g) {
  if (!isConnected(g)) throw DomainError("spanningTreeCount: graph is not connected");
  const std::size_t n = g.order();
  const BigInt n2 = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
  IntMatrix m = scale(laplacian(g), n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += 1;
  const BigInt numerator = det(m);
  BigInt denominator;
  mpz_pow_ui(denominator.get_mpz_t(), n2.get_mpz_t(), n);
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw ConsistencyError("spanningTreeCount: scaled Google determinant not divisible");
  return numerator / denominator;
}

CountReport makeCountReport(const Graph& g, CountKind kind, std::int64_t k) {
  CountReport r;
  r.k = k;
  r.interpretation = kind;
  switch (kind) {
    case CountKind::RootedForests:
      r.value = countRootedForests(g, k);
      break;
    case CountKind::SignedForests:
      r.value = countSignedForests(g, k);
      break;
    case CountKind::SpanningTrees:
      r.value = spanningTreeCount(g);
      break;
    case CountKind::PseudoDeterminant:
      r.value = pseudoDeterminant(g);
      break;
  }
  return r;
}

BoundsReport checkBounds(const Graph& g, std::int64_t k) {
  if (k < 1) throw InputError("checkBounds requires k >= 1");
  BoundsReport r;
  r.k = k;
  r.value = countRootedForests(g, k);
  const std::size_t n = g.order();
  if (n == 0) {
    r.upper = 1;
  } else {
    const BigInt base = 1 + BigInt(static_cast<long>(k)) * static_cast<unsigned long>(n);
    mpz_pow_ui(r.upper.get_mpz_t(), base.get_mpz_t(), n - 1);
  }
  r.holds = r.lower <= r.value && r.value <= r.upper;
  r.lowerTight = r.value == r.lower;
  r.upperTight = r.value == r.upper;
  return r;
}

}  // namespace forestcount
