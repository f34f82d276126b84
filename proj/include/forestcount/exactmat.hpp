#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace forestcount {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// 0x0 matrices are valid; det() of one is 1, which makes the empty minor
/// come out as 1 without special casing.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix fromRows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool isSquare() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  /// Bounds-checked access; throws IndexError.
  const BigInt& at(std::size_t i, std::size_t j) const;

  std::span<const BigInt> entries() const noexcept { return entries_; }

  bool isSymmetric() const;
  BigInt trace() const;

  std::string toString() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Selects a square submatrix: rows[i] pairs with cols[i]. Both index lists
/// are strictly increasing and of equal length. The empty pattern is legal.
struct Pattern {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const noexcept { return rows.size(); }
  bool empty() const noexcept { return rows.empty(); }

  static Pattern full(std::size_t n);
};

/// Integer polynomial, coeffs[d] is the coefficient of x^d. Kept trimmed:
/// no trailing zeros, and the zero polynomial is exactly {0}.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// 0 for constants, including the zero polynomial.
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool isZero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Coefficient of x^d; zero past the degree.
  BigInt coefficient(std::size_t d) const;
  BigInt evaluate(const BigInt& x) const;

  std::string toString() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws DimensionError for non-square input.
BigInt det(const IntMatrix& m);

/// Determinant of the submatrix selected by `p`. Throws IndexError when the
/// pattern leaves the matrix, InputError when it is malformed.
BigInt minorDet(const IntMatrix& m, const Pattern& p);

IntMatrix submatrix(const IntMatrix& m, const Pattern& p);

IntMatrix transpose(const IntMatrix& a);
IntMatrix matMul(const IntMatrix& a, const IntMatrix& b);
/// a + s*I for square a.
IntMatrix addScaledIdentity(const IntMatrix& a, const BigInt& s);
/// s*a.
IntMatrix scale(const IntMatrix& a, const BigInt& s);

/// Recovers the unique polynomial of degree < points.size() through the
/// given (x, y) samples, using Newton divided differences over exact
/// rationals. The caller asserts the answer has integer coefficients;
/// otherwise ConsistencyError. Duplicate abscissae throw InputError.
IntPolynomial interpolateIntegerPolynomial(std::span<const std::pair<BigInt, BigInt>> points);

}  // namespace forestcount
