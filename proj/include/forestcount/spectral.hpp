#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forestcount/exactmat.hpp"
#include "forestcount/graph.hpp"

namespace forestcount {

inline constexpr double kDefaultJacobiTolerance = 1e-10;

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double tolerance = kDefaultJacobiTolerance;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `tol`. Non-symmetric input throws InputError; exceeding the sweep cap
/// throws ConsistencyError.
Spectrum eigenvaluesSym(const IntMatrix& m, double tol = kDefaultJacobiTolerance);

/// prod_j (1 + k lambda_j) over the Laplacian spectrum.
double productFormula(const Graph& g, std::int64_t k);

struct SpectralReport {
  Spectrum spectrum;
  std::vector<std::size_t> degrees;  // descending
  double eigenvalueSum = 0;
  std::size_t edgeCount = 0;
  bool traceOk = true;         // sum lambda == 2|E|
  bool degreeBoundOk = true;   // max degree <= lambda_1 - 1 (when |E| >= 1)
  bool majorizationOk = true;  // partial sums of lambda dominate those of degrees
  bool semidefiniteOk = true;  // lambda_min ~ 0 and all lambda >= -tol
  std::vector<std::string> violations;

  bool passed() const noexcept {
    return traceOk && degreeBoundOk && majorizationOk && semidefiniteOk;
  }
};

SpectralReport spectralChecks(const Graph& g);

}  // namespace forestcount
