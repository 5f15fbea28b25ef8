// Randomized properties on general (non-basis) elements.

#include <sot/identities.hpp>
#include <sot/triality.hpp>

#include <gtest/gtest.h>

#include <random>

namespace {

using sot::Rational;
using Oct = sot::SplitOctonion<Rational>;

class PropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240601};
  std::uniform_int_distribution<int> digit{-7, 7};

  std::array<Rational, 8> draw() {
    std::array<Rational, 8> c;
    for (auto& v : c) v = digit(rng);
    return c;
  }
  Oct oct() { return Oct(draw()); }

  // Rational half-angle pairs from Pythagorean-like triples.
  sot::Rotor<Rational> rational_rotor() {
    std::uniform_int_distribution<std::size_t> idx(0, 7);
    std::size_t mu = idx(rng), nu = idx(rng);
    while (nu == mu) nu = idx(rng);
    std::uniform_int_distribution<int> pq(1, 6);
    const int p = pq(rng), q = pq(rng);
    if (sot::Metric::compact_plane(mu, nu)) {
      // ((p^2 - q^2), 2pq) / (p^2 + q^2) on the unit circle
      const Rational n(p * p + q * q);
      return sot::rotor_from_half_angle<Rational>(mu, nu, Rational(p * p - q * q) / n, Rational(2 * p * q) / n);
    }
    // ((p^2 + q^2), 2pq) / (p^2 - q^2) on the unit hyperbola, p != q
    const int pp = p + q;
    const Rational n(pp * pp - q * q);
    return sot::rotor_from_half_angle<Rational>(mu, nu, Rational(pp * pp + q * q) / n, Rational(2 * pp * q) / n);
  }
};

TEST_F(PropertyTest, Alternativity) {
  for (int n = 0; n < 200; ++n) {
    const Oct x = oct(), y = oct();
    EXPECT_EQ((x * x) * y, x * (x * y));
    EXPECT_EQ((y * x) * x, y * (x * x));
    EXPECT_EQ((x * y) * x, x * (y * x));
  }
}

TEST_F(PropertyTest, MoufangOnGeneralElements) {
  for (int n = 0; n < 100; ++n) {
    const Oct x = oct(), y = oct(), z = oct();
    EXPECT_EQ((x * y) * (z * x), x * ((y * z) * x));
    EXPECT_EQ(((z * y) * z) * x, z * (y * (z * x)));
  }
}

TEST_F(PropertyTest, AssociatorIsAlternating) {
  for (int n = 0; n < 100; ++n) {
    const Oct x = oct(), y = oct(), z = oct();
    EXPECT_EQ(sot::associator(x, y, z), -sot::associator(y, x, z));
    EXPECT_EQ(sot::associator(x, y, z), sot::associator(y, z, x));
  }
}

TEST_F(PropertyTest, ExactRotorInvariance) {
  for (int n = 0; n < 100; ++n) {
    const auto r = rational_rotor();
    const sot::Vector8<Rational> x(draw());
    const sot::Spinor16<Rational> eta(draw(), draw());
    EXPECT_EQ(sot::quadratic_form(sot::rotate_vector(x, r)), sot::quadratic_form(x));
    EXPECT_EQ(sot::spinor_invariant(sot::rotate_spinor(eta, r)), sot::spinor_invariant(eta));
  }
}

TEST_F(PropertyTest, ExactTrilinearInvarianceUnderRotorWords) {
  for (int n = 0; n < 30; ++n) {
    const auto L = rational_rotor().transform() * rational_rotor().transform();
    const auto phi = sot::Spinor16<Rational>::left(draw());
    const auto psi = sot::Spinor16<Rational>::right(draw());
    const sot::Vector8<Rational> x(draw());
    const Rational before = sot::trilinear_matrix(phi, x, psi);
    const Rational after =
        sot::trilinear_matrix(sot::rotate_spinor(phi, L), sot::rotate_vector(x, L), sot::rotate_spinor(psi, L));
    EXPECT_EQ(after, before);
    EXPECT_EQ(sot::pinned_dictionary().evaluate(phi, x, psi), before);
  }
}

TEST_F(PropertyTest, FloatRotorInvarianceSuite) {
  const auto r = sot::rotor_invariance_check(77, 300);
  EXPECT_TRUE(r.passed());
  EXPECT_LE(r.max_residual(), 1e-12);
}

TEST_F(PropertyTest, ExactAndFloatSuitesAgreeOnDifferentSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_TRUE(sot::correspondence_check<Rational>(50, seed).passed()) << seed;
    EXPECT_TRUE(sot::dictionary_check<Rational>(sot::pinned_dictionary(), 50, seed).passed()) << seed;
  }
}

}  // namespace
