// Gamma matrices of Cl(4,4), the B matrix and the vector <-> matrix maps.

#include <sot/clifford.hpp>

#include <gtest/gtest.h>

#include <array>
#include <complex>
#include <random>
#include <stdexcept>

namespace {

using sot::Rational;
using C = std::complex<double>;
using Dense = std::array<std::array<C, 16>, 16>;

constexpr int kMetric[8] = {1, 1, 1, 1, -1, -1, -1, -1};

Dense dense(const sot::ComplexMatrix16<Rational>& m) {
  Dense d{};
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) d[r][c] = {sot::to_double(m(r, c).re), sot::to_double(m(r, c).im)};
  return d;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out{};
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t k = 0; k < 16; ++k)
      for (std::size_t j = 0; j < 16; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

class CliffordTest : public ::testing::Test {};

// ---------------------------------------------------------------------------
// Alpha blocks

TEST_F(CliffordTest, AlphaOneIsIUnit) {
  const auto a = sot::alpha(1);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      EXPECT_EQ(a(r, c), r == c ? sot::Complex<Rational>(0, 1) : sot::Complex<Rational>()) << r << ',' << c;
}

TEST_F(CliffordTest, AlphaZeroDiagonal) {
  const auto a = sot::alpha(0);
  const int diag[8] = {-1, 1, 1, 1, -1, -1, -1, 1};
  for (std::size_t r = 0; r < 8; ++r) EXPECT_EQ(a(r, r), sot::Complex<Rational>(diag[r]));
  EXPECT_EQ(a.nonzero_count(), 8u);
}

TEST_F(CliffordTest, EachAlphaIsSignedPermutationTimesUnit) {
  for (std::size_t mu = 0; mu < 8; ++mu) {
    const auto a = sot::alpha(mu);
    EXPECT_EQ(a.nonzero_count(), 8u);
    EXPECT_EQ(a * a.adjoint(), sot::ComplexMatrix8<Rational>::identity()) << "alpha_" << mu;
  }
}

// ---------------------------------------------------------------------------
// Clifford relations

TEST_F(CliffordTest, AnticommutatorsIndependentlyRecomputed) {
  std::array<Dense, 8> g;
  for (std::size_t mu = 0; mu < 8; ++mu) g[mu] = dense(sot::gamma(mu));
  for (std::size_t mu = 0; mu < 8; ++mu)
    for (std::size_t nu = 0; nu < 8; ++nu) {
      const Dense ab = dense_mul(g[mu], g[nu]), ba = dense_mul(g[nu], g[mu]);
      for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 16; ++c) {
          const C want = (r == c && mu == nu) ? C(2.0 * kMetric[mu]) : C(0.0);
          EXPECT_EQ(ab[r][c] + ba[r][c], want) << mu << ',' << nu << " at " << r << ',' << c;
        }
    }
}

TEST_F(CliffordTest, VerifyCliffordReportsAll64Pairs) {
  const auto exact = sot::verify_clifford<Rational>();
  EXPECT_EQ(exact.cases(), 64u);
  EXPECT_TRUE(exact.passed());
  const auto approx = sot::verify_clifford<double>(1e-12);
  EXPECT_EQ(approx.cases(), 64u);
  EXPECT_TRUE(approx.passed());
}

TEST_F(CliffordTest, GammasAreOffDiagonal) {
  for (std::size_t mu = 0; mu < 8; ++mu) {
    const auto& G = sot::gamma(mu);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) {
        EXPECT_TRUE(G(r, c).is_zero());
        EXPECT_TRUE(G(r + 8, c + 8).is_zero());
      }
  }
}

TEST_F(CliffordTest, IndexOutOfRangeThrows) {
  EXPECT_THROW(sot::gamma(8), std::out_of_range);
  EXPECT_THROW(sot::alpha(9), std::out_of_range);
  EXPECT_THROW(sot::Vector8<Rational>::basis(8), std::out_of_range);
}

// ---------------------------------------------------------------------------
// Vectors as matrices

TEST_F(CliffordTest, QuadraticFormOnRandomIntegerVectors) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int n = 0; n < 50; ++n) {
    sot::Vector8<Rational> x;
    for (std::size_t i = 0; i < 8; ++i) x[i] = d(rng);
    const auto X = sot::vector_to_matrix(x);
    EXPECT_EQ(X * X, sot::ComplexMatrix16<Rational>::identity() * sot::quadratic_form(x));
  }
}

TEST_F(CliffordTest, VectorMatrixRoundTrip) {
  sot::Vector8<Rational> x;
  x[0] = 1;
  x[7] = 2;
  EXPECT_EQ(sot::matrix_to_vector(sot::vector_to_matrix(x)), x);
  EXPECT_EQ(sot::quadratic_form(x), Rational(1 - 4));

  sot::Vector8<Rational> y(std::array<Rational, 8>{Rational(1, 2), -3, 0, 7, Rational(-5, 3), 2, 1, -1});
  EXPECT_EQ(sot::matrix_to_vector(sot::vector_to_matrix(y)), y);
}

TEST_F(CliffordTest, NonVectorMatrixIsRejected) {
  EXPECT_THROW(sot::matrix_to_vector(sot::ComplexMatrix16<Rational>::identity()), sot::NotGradeOneError);
  EXPECT_THROW(sot::matrix_to_vector(sot::bivector<Rational>(0, 1)), sot::NotGradeOneError);
  EXPECT_THROW(sot::matrix_to_vector(sot::ComplexMatrix16<double>::identity()), sot::NotGradeOneError);
}

// ---------------------------------------------------------------------------
// B

TEST_F(CliffordTest, BProperties) {
  const auto& B = sot::b_matrix();
  EXPECT_TRUE(B.is_real());
  EXPECT_EQ(B * B, sot::ComplexMatrix16<Rational>::identity());
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) {
      const Rational v = B(r, c).re;
      EXPECT_TRUE(v == 0 || v == 1 || v == -1);
    }
  for (std::size_t mu = 0; mu < 8; ++mu) EXPECT_EQ(sot::gamma(mu).transpose(), B * sot::gamma(mu) * B) << mu;
}

TEST_F(CliffordTest, BIsBlockDiagonal) { EXPECT_TRUE(sot::is_block_diagonal(sot::b_matrix())); }

TEST_F(CliffordTest, FloatGammasMatchExact) {
  for (std::size_t mu = 0; mu < 8; ++mu) {
    const auto& e = sot::gamma<Rational>(mu);
    const auto& f = sot::gamma<double>(mu);
    for (std::size_t r = 0; r < 16; ++r)
      for (std::size_t c = 0; c < 16; ++c) {
        EXPECT_EQ(f(r, c).re, sot::to_double(e(r, c).re));
        EXPECT_EQ(f(r, c).im, sot::to_double(e(r, c).im));
      }
  }
}

}  // namespace
