#include "forestcount/exactmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "forestcount/errors.hpp"

namespace forestcount {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

const BigInt& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw IndexError("IntMatrix::at: index out of range");
  return (*this)(i, j);
}

bool IntMatrix::isSymmetric() const {
  if (!isSquare()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

BigInt IntMatrix::trace() const {
  if (!isSquare()) throw DimensionError("trace: matrix not square");
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::string IntMatrix::toString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Pattern Pattern::full(std::size_t n) {
  Pattern p;
  p.rows.resize(n);
  std::iota(p.rows.begin(), p.rows.end(), std::size_t{0});
  p.cols = p.rows;
  return p;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
    : IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

BigInt IntPolynomial::coefficient(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::toString() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s + ']';
}

BigInt det(const IntMatrix& m) {
  if (!m.isSquare()) throw DimensionError("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

  int sign = 1;
  BigInt prevPivot = 1;
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swapRow = k + 1;
      while (swapRow < n && at(swapRow, k) == 0) ++swapRow;
      if (swapRow == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(swapRow, j));
      sign = -sign;
    }
    const BigInt& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij <- (a_ij * a_kk - a_ik * a_kj) / previous pivot, exact by Sylvester's identity.
        tmp = at(i, j) * pivot;
        tmp -= at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prevPivot.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prevPivot = pivot;
  }
  BigInt result = at(n - 1, n - 1);
  if (sign < 0) result = -result;
  return result;
}

namespace {

void validatePattern(const IntMatrix& m, const Pattern& p) {
  if (p.rows.size() != p.cols.size()) throw InputError("pattern is not square");
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (p.rows[i] >= m.rows() || p.cols[i] >= m.cols())
      throw IndexError("pattern index out of matrix bounds");
    if (i > 0 && (p.rows[i] <= p.rows[i - 1] || p.cols[i] <= p.cols[i - 1]))
      throw InputError("pattern indices must be strictly increasing");
  }
}

}  // namespace

IntMatrix submatrix(const IntMatrix& m, const Pattern& p) {
  validatePattern(m, p);
  const std::size_t k = p.size();
  IntMatrix s(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s(i, j) = m(p.rows[i], p.cols[j]);
  return s;
}

BigInt minorDet(const IntMatrix& m, const Pattern& p) {
  if (p.empty()) {
    validatePattern(m, p);
    return 1;
  }
  return det(submatrix(m, p));
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

IntMatrix matMul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matMul: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix addScaledIdentity(const IntMatrix& a, const BigInt& s) {
  if (!a.isSquare()) throw DimensionError("addScaledIdentity: matrix not square");
  IntMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) += s;
  return r;
}

IntMatrix scale(const IntMatrix& a, const BigInt& s) {
  IntMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= s;
  return r;
}

IntPolynomial interpolateIntegerPolynomial(std::span<const std::pair<BigInt, BigInt>> points) {
  const std::size_t n = points.size();
  if (n == 0) throw InputError("interpolate: no points");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first) throw InputError("interpolate: duplicate x");

  // Divided-difference table collapsed in place: after pass `level`,
  // dd[i] holds f[x_{i-level}, ..., x_i] for i >= level.
  std::vector<BigRational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(points[i].first - points[i - level].first);
    }
  }

  // Newton form to monomial basis, Horner style from the highest term.
  std::vector<BigRational> poly{dd[n - 1]};
  for (std::size_t step = n - 1; step-- > 0;) {
    const BigRational xi(points[step].first);
    std::vector<BigRational> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= xi * poly[d];
    }
    next[0] += dd[step];
    poly = std::move(next);
  }

  std::vector<BigInt> coeffs;
  coeffs.reserve(poly.size());
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1)
      throw ConsistencyError("interpolate: non-integer coefficient " + c.get_str());
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace forestcount
