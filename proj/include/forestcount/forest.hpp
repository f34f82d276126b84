#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "forestcount/exactmat.hpp"
#include "forestcount/graph.hpp"

namespace forestcount {

/// Coefficients of det(I + xL) for a graph of order n, padded to n + 1
/// entries. coeffs[j] is the number of rooted spanning forests with exactly
/// j edges, so coeffs[0] == 1 and coeffs[j] == 0 once j exceeds
/// n - components.
struct ForestPolynomial {
  std::size_t graphOrder = 0;
  std::vector<BigInt> coeffs;

  BigInt evaluate(const BigInt& x) const;
  IntPolynomial asPolynomial() const { return IntPolynomial(coeffs); }
};

enum class CountKind { RootedForests, SignedForests, SpanningTrees, PseudoDeterminant };

std::string_view countKindName(CountKind kind);

struct CountReport {
  std::int64_t k = 1;
  BigInt value;
  CountKind interpretation = CountKind::RootedForests;
};

/// Evaluates det(I + kL) at k = 0..n and interpolates.
ForestPolynomial forestPolynomial(const Graph& g);

/// det(I + kL): rooted spanning forests whose edges carry one of k colors.
/// k = 1 gives the plain rooted-forest count. Negative k throws InputError;
/// use countSignedForests for the alternating count.
BigInt countRootedForests(const Graph& g, std::int64_t k = 1);

/// det(I - kL): even-edge minus odd-edge k-colored rooted spanning forests.
/// Requires k >= 1.
BigInt countSignedForests(const Graph& g, std::int64_t k = 1);

/// Det(L), the product of the nonzero Laplacian eigenvalues: the top nonzero
/// forest-polynomial coefficient. For connected graphs this is the number of
/// rooted spanning trees, n times the spanning-tree count. 1 when edgeless.
BigInt pseudoDeterminant(const Graph& g);

/// Spanning trees via det(J + n^2 L) / n^(2n), the integer scaling of
/// det(E + L) with E = J / n^2. DomainError unless g is connected.
BigInt spanningTreeCount(const Graph& g);

CountReport makeCountReport(const Graph& g, CountKind kind, std::int64_t k = 1);

struct BoundsReport {
  std::int64_t k = 1;
  BigInt value;
  BigInt lower = 1;
  BigInt upper;  // (1 + k n)^(n - 1), or 1 for the empty graph
  bool holds = false;
  bool lowerTight = false;
  bool upperTight = false;
};

/// Checks 1 <= det(I + kL) <= (1 + kn)^(n-1). Requires k >= 1.
BoundsReport checkBounds(const Graph& g, std::int64_t k = 1);

}  // namespace forestcount
