// Rebuilding the multiplication table from J1, J2, J3.

#include <sot/basis_generation.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

namespace {

using sot::Rational;
using Z = sot::ZornMatrix<Rational>;

std::string dump(const sot::StructureConstants& sc) {
  std::ostringstream os;
  for (auto a : sot::kAllUnits) {
    for (auto b : sot::kAllUnits) os << (sc(a, b).sign > 0 ? '+' : '-') << sot::name(sc(a, b).unit) << ' ';
    os << '\n';
  }
  return os.str();
}

Z random_zorn(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  Z z;
  z.a = d(rng);
  z.b = d(rng);
  for (int i = 0; i < 3; ++i) {
    z.u[i] = d(rng);
    z.v[i] = d(rng);
  }
  return z;
}

Rational zorn_det(const Z& z) { return z.a * z.b - (z.u[0] * z.v[0] + z.u[1] * z.v[1] + z.u[2] * z.v[2]); }

class BasisGenerationTest : public ::testing::Test {};

TEST_F(BasisGenerationTest, ReproducesHardCodedTable) {
  const auto generated = sot::generate_basis_from_J();
  EXPECT_EQ(generated, sot::structure_constants());
  EXPECT_EQ(dump(generated), dump(sot::structure_constants()));
}

TEST_F(BasisGenerationTest, ReproducesRelationTable) {
  EXPECT_EQ(dump(sot::generate_basis_from_J()), dump(sot::StructureConstants::from_relations()));
}

// The Zorn model must itself be a composition algebra for the derivation to
// mean anything.
TEST_F(BasisGenerationTest, ZornModelIsAlternativeWithMultiplicativeNorm) {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const Z x = random_zorn(rng), y = random_zorn(rng);
    EXPECT_EQ((x * x) * y, x * (x * y));
    EXPECT_EQ((y * x) * x, y * (x * x));
    EXPECT_EQ(zorn_det(x * y), zorn_det(x) * zorn_det(y));
  }
}

TEST_F(BasisGenerationTest, ZornModelIsNotAssociative) {
  std::mt19937_64 rng(5);
  int non_associative = 0;
  for (int n = 0; n < 20; ++n) {
    const Z x = random_zorn(rng), y = random_zorn(rng), z = random_zorn(rng);
    if (!((x * y) * z == x * (y * z))) ++non_associative;
  }
  EXPECT_GT(non_associative, 0);
}

}  // namespace
