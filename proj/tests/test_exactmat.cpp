#include <gtest/gtest.h>

#include "forestcount/errors.hpp"
#include "forestcount/exactmat.hpp"
#include "test_support.hpp"

using namespace forestcount;
using forestcount::testing::cofactorDet;
using forestcount::testing::randomMatrix;

TEST(Det, PathPlusIdentity) { EXPECT_EQ(det(IntMatrix{{2, -1}, {-1, 2}}), 3); }

TEST(Det, EmptyMatrixIsOne) { EXPECT_EQ(det(IntMatrix{}), 1); }

TEST(Det, TrianglePlusIdentity) {
  EXPECT_EQ(det(IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}), 16);
}

TEST(Det, NeedsRowSwap) {
  // Leading zero pivot forces a swap; one swap flips the sign.
  EXPECT_EQ(det(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(IntMatrix{{0, 2, 1}, {3, 0, 4}, {5, 6, 0}}), cofactorDet(IntMatrix{{0, 2, 1}, {3, 0, 4}, {5, 6, 0}}));
}

TEST(Det, ZeroColumnIsZero) { EXPECT_EQ(det(IntMatrix{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}), 0); }

TEST(Det, LargeEntriesStayExact) {
  // 2^70 on the diagonal overflows every fixed-width type.
  IntMatrix m = IntMatrix::identity(3);
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 70);
  m(0, 0) = big;
  m(1, 1) = big;
  m(2, 2) = 3;
  EXPECT_EQ(det(m), big * big * 3);
}

TEST(Det, NonSquareThrows) { EXPECT_THROW(det(IntMatrix(2, 3)), DimensionError); }

TEST(Det, MatchesCofactorExpansion) {
  SplitMix64 rng(20240601);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniformInt(0, 5));
    const IntMatrix m = randomMatrix(rng, n, n, 5);
    ASSERT_EQ(det(m), cofactorDet(m)) << m.toString();
  }
}

TEST(Det, SingularMatricesFromCofactorOracle) {
  // Duplicate a row so the cofactor oracle and Bareiss must both give 0.
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = randomMatrix(rng, 4, 4, 3);
    for (std::size_t j = 0; j < 4; ++j) m(3, j) = m(1, j);
    ASSERT_EQ(det(m), 0);
  }
}

TEST(Det, TransposeInvariant) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniformInt(1, 6));
    const IntMatrix m = randomMatrix(rng, n, n, 9);
    ASSERT_EQ(det(m), det(transpose(m)));
  }
}

TEST(MinorDet, SingleEntry) {
  EXPECT_EQ(minorDet(IntMatrix{{1, 2}, {3, 4}}, Pattern{{0}, {1}}), 2);
}

TEST(MinorDet, EmptyPatternIsOne) {
  EXPECT_EQ(minorDet(IntMatrix{{1, 2}, {3, 4}}, Pattern{}), 1);
  EXPECT_EQ(minorDet(IntMatrix(3, 5), Pattern{}), 1);
}

TEST(MinorDet, FullPattern) {
  EXPECT_EQ(minorDet(IntMatrix{{1, 2}, {3, 4}}, Pattern{{0, 1}, {0, 1}}), -2);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniformInt(1, 5));
    const IntMatrix m = randomMatrix(rng, n, n, 4);
    ASSERT_EQ(minorDet(m, Pattern::full(n)), det(m));
  }
}

TEST(MinorDet, RejectsBadPatterns) {
  const IntMatrix m{{1, 2}, {3, 4}};
  EXPECT_THROW(minorDet(m, Pattern{{2}, {0}}), IndexError);
  EXPECT_THROW(minorDet(m, Pattern{{0}, {5}}), IndexError);
  EXPECT_THROW(minorDet(m, Pattern{{0, 1}, {0}}), InputError);
  EXPECT_THROW(minorDet(m, Pattern{{1, 0}, {0, 1}}), InputError);
}

TEST(MatrixOps, Transpose) {
  const IntMatrix a{{1, 2, 3}, {4, 5, 6}};
  const IntMatrix t = transpose(a);
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t.cols(), 2u);
  EXPECT_EQ(t, (IntMatrix{{1, 4}, {2, 5}, {3, 6}}));
}

TEST(MatrixOps, AddScaledIdentity) {
  const IntMatrix l{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  EXPECT_EQ(addScaledIdentity(l, 1), (IntMatrix{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}));
  EXPECT_THROW(addScaledIdentity(IntMatrix(2, 3), 1), DimensionError);
}

TEST(MatrixOps, IncidenceGramIsLaplacian) {
  const IntMatrix c{{-1, 1}};
  EXPECT_EQ(matMul(transpose(c), c), (IntMatrix{{1, -1}, {-1, 1}}));
}

TEST(MatrixOps, MatMulDimensionMismatch) {
  EXPECT_THROW(matMul(IntMatrix(2, 3), IntMatrix(2, 3)), DimensionError);
}

TEST(IntPolynomialType, TrimsTrailingZeros) {
  EXPECT_EQ(IntPolynomial({1, 2, 0, 0}).coeffs().size(), 2u);
  EXPECT_TRUE(IntPolynomial({0, 0}).isZero());
  EXPECT_EQ(IntPolynomial(std::vector<BigInt>{}).coeffs().size(), 1u);
  EXPECT_EQ(IntPolynomial({1, 6, 9}).evaluate(1), 16);
}

TEST(Interpolate, LinearFit) {
  const std::vector<std::pair<BigInt, BigInt>> pts{{0, 1}, {1, 3}, {2, 5}};
  EXPECT_EQ(interpolateIntegerPolynomial(pts), IntPolynomial({1, 2}));
}

TEST(Interpolate, TriangleForestPolynomial) {
  // (1 + 3x)^2 from the triangle spectrum {0, 3, 3}.
  const std::vector<std::pair<BigInt, BigInt>> pts{{0, 1}, {1, 16}, {2, 49}, {3, 100}};
  EXPECT_EQ(interpolateIntegerPolynomial(pts), IntPolynomial({1, 6, 9}));
}

TEST(Interpolate, Constant) {
  const std::vector<std::pair<BigInt, BigInt>> pts{{0, 5}};
  EXPECT_EQ(interpolateIntegerPolynomial(pts), IntPolynomial({5}));
}

TEST(Interpolate, DuplicateAbscissaThrows) {
  const std::vector<std::pair<BigInt, BigInt>> pts{{1, 1}, {1, 2}};
  EXPECT_THROW(interpolateIntegerPolynomial(pts), InputError);
}

TEST(Interpolate, NonIntegerResultTrapped) {
  // x^2/2 - x/2 passes through these points; its coefficients are halves.
  const std::vector<std::pair<BigInt, BigInt>> pts{{0, 0}, {1, 0}, {3, 3}};
  EXPECT_THROW(interpolateIntegerPolynomial(pts), ConsistencyError);
}

TEST(Interpolate, RecoversRandomPolynomials) {
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const auto degree = static_cast<std::size_t>(rng.uniformInt(0, 8));
    std::vector<BigInt> coeffs(degree + 1);
    for (auto& c : coeffs) c = static_cast<long>(rng.uniformInt(-1000, 1000));
    const IntPolynomial p(coeffs);
    // Unordered, negative and sparse abscissae.
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (std::size_t i = 0; i <= degree; ++i) {
      const BigInt x(static_cast<long>(3 * i) - 7);
      pts.emplace_back(x, p.evaluate(x));
    }
    std::swap(pts.front(), pts.back());
    ASSERT_EQ(interpolateIntegerPolynomial(pts), p) << p.toString();
  }
}
