#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "forestcount/exactmat.hpp"
#include "forestcount/graph.hpp"

namespace forestcount {

/// Brute-force tally of rooted spanning forests. byEdgeCount[j] sums, over
/// every acyclic edge subset with j edges, the product of the component
/// sizes of the spanning subgraph it induces: a tree on t vertices has t
/// root choices and an isolated vertex has exactly one. Trimmed: the last
/// entry is nonzero.
struct ForestCensus {
  std::size_t graphOrder = 0;
  std::vector<BigInt> byEdgeCount;
};

inline constexpr std::size_t kDefaultEnumerationCap = 22;

/// Walks all 2^|E| edge subsets. Throws LimitError above `maxEdges`.
ForestCensus enumerateForests(const Graph& g, std::size_t maxEdges = kDefaultEnumerationCap);

/// sum_j byEdgeCount[j] * k^j. Pass a negative k for the signed count.
BigInt censusEvaluate(const ForestCensus& census, const BigInt& k);

/// Coefficient j is the sum over all j x j patterns P of det(F_P) det(G_P),
/// i.e. the right-hand side of det(I + x F^T G) expanded over minors.
/// F and G must share a shape with min(rows, cols) <= 6.
IntPolynomial minorSumPolynomial(const IntMatrix& f, const IntMatrix& g);

/// Calls fn(const std::vector<std::size_t>&) for each k-subset of {0..n-1}
/// in lexicographic order. Exactly one call (with {}) when k == 0.
template <class Fn>
void forEachSubset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct IdentityFailure {
  std::size_t trialIndex = 0;
  std::uint64_t trialSeed = 0;
  std::string identity;
  IntMatrix f;
  IntMatrix g;
  std::string lhs;
  std::string rhs;
};

struct IdentityTrialReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<IdentityFailure> failures;
  std::pair<std::size_t, std::size_t> maxDimension{0, 0};

  bool passed() const noexcept { return failures.empty(); }
};

/// Identities checked per trial, by the names recorded in failures.
inline constexpr const char* kIdentityMinorSum = "det(1+F^T G) = sum_P det(F_P) det(G_P)";
inline constexpr const char* kIdentityPolynomial = "det(1+x F^T G) coefficientwise";
inline constexpr const char* kIdentityCharPoly = "det(F^T G - x) = sum_k (-x)^(n-k) sum_|P|=k ...";
inline constexpr const char* kIdentityPythagoras = "det(1+A^T A) = sum_P det(A_P)^2";
inline constexpr const char* kIdentityWeighted = "det(1+k A^T A) = sum_P k^|P| det(A_P)^2, k=2";

/// Randomized campaign for the generalized Cauchy-Binet identities. Trial t
/// seeds SplitMix64 with seed + t and draws the m x n matrices F then G,
/// row-major, with entries uniformInt(-entryBound, entryBound). Each trial
/// checks the five identities above, the Pythagorean pair with A = F.
/// Requires m, n >= 1, min(m, n) <= 5 and entryBound >= 1.
IdentityTrialReport verifyCauchyBinet(std::size_t m, std::size_t n, std::size_t trials,
                                      std::uint64_t seed, std::int64_t entryBound);

struct PoincareReport {
  std::size_t patternsScanned = 0;
  BigInt maxAbsMinor = 0;
  bool allUnimodular = true;             // every minor in {-1, 0, 1}
  std::vector<BigInt> detSquaredSums;    // index = pattern size
  std::vector<BigInt> forestCoeffs;      // forestPolynomial(g).coeffs
  bool sumsMatch = false;

  bool passed() const noexcept { return allUnimodular && sumsMatch; }
};

inline constexpr std::size_t kPoincareMaxEdges = 7;
inline constexpr std::size_t kPoincareMaxOrder = 8;

/// Scans every square minor of incidence(g). LimitError beyond
/// kPoincareMaxEdges edges or kPoincareMaxOrder vertices.
PoincareReport poincareScan(const Graph& g);

}  // namespace forestcount
