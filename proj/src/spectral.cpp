#include "forestcount/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "forestcount/errors.hpp"

namespace forestcount {

namespace {

constexpr int kMaxSweeps = 100;

double offDiagonalNorm(const std::vector<double>& a, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

Spectrum eigenvaluesSym(const IntMatrix& m, double tol) {
  if (!m.isSymmetric()) throw InputError("eigenvaluesSym: matrix is not symmetric");
  const std::size_t n = m.rows();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_d();
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  Spectrum s;
  s.tolerance = tol;
  while (offDiagonalNorm(a, n) >= tol) {
    if (s.sweeps == kMaxSweeps) throw ConsistencyError("eigenvaluesSym: Jacobi did not converge");
    ++s.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation angle zeroing a_pq (Golub & Van Loan, sym.schur2).
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - sn * aqk;
          at(q, k) = sn * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  s.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.eigenvalues[i] = at(i, i);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

double productFormula(const Graph& g, std::int64_t k) {
  const Spectrum s = eigenvaluesSym(laplacian(g));
  double prod = 1.0;
  for (double lambda : s.eigenvalues) prod *= 1.0 + static_cast<double>(k) * lambda;
  return prod;
}

SpectralReport spectralChecks(const Graph& g) {
  SpectralReport r;
  r.spectrum = eigenvaluesSym(laplacian(g));
  r.degrees = degreeSequence(g);
  r.edgeCount = g.edgeCount();
  const auto& ev = r.spectrum.eigenvalues;
  const std::size_t n = ev.size();

  // Absolute slack scaled by the largest entry the sums can reach.
  const double slack = 1e-8 * std::max(1.0, 2.0 * static_cast<double>(r.edgeCount));

  for (double lambda : ev) r.eigenvalueSum += lambda;
  if (std::abs(r.eigenvalueSum - 2.0 * static_cast<double>(r.edgeCount)) > slack) {
    r.traceOk = false;
    r.violations.push_back("sum of eigenvalues " + std::to_string(r.eigenvalueSum) +
                           " != 2|E| = " + std::to_string(2 * r.edgeCount));
  }

  if (n > 0) {
    if (std::abs(ev.back()) > slack ||
        std::any_of(ev.begin(), ev.end(), [&](double l) { return l < -slack; })) {
      r.semidefiniteOk = false;
      r.violations.push_back("Laplacian spectrum not positive semidefinite with a zero eigenvalue");
    }
  }

  if (r.edgeCount > 0) {
    const double maxDegree = static_cast<double>(r.degrees.front());
    if (maxDegree > ev.front() - 1.0 + slack) {
      r.degreeBoundOk = false;
      r.violations.push_back("max degree " + std::to_string(r.degrees.front()) +
                             " exceeds lambda_1 - 1 = " + std::to_string(ev.front() - 1.0));
    }
  }

  double lambdaPartial = 0;
  double degreePartial = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lambdaPartial += ev[i];
    degreePartial += static_cast<double>(r.degrees[i]);
    if (lambdaPartial < degreePartial - slack) {
      r.majorizationOk = false;
      r.violations.push_back("majorization fails at k = " + std::to_string(i + 1));
      break;
    }
  }
  return r;
}

}  // namespace forestcount
