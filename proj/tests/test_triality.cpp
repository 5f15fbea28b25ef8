// Generator tables, role swap, the trilinear dictionary and the
// matrix/octonion correspondence.

#include <sot/identities.hpp>
#include <sot/triality.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>

namespace {

using sot::Rational;

template <sot::Scalar T>
std::array<T, 8> ints(std::array<int, 8> v) {
  std::array<T, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = T(v[i]);
  return out;
}

bool has_note(const sot::VerificationReport& r, const std::string& note) {
  for (const auto& n : r.notes)
    if (n == note) return true;
  return false;
}

class TrialityTest : public ::testing::Test {};

// ---------------------------------------------------------------------------
// Octonionic side

TEST_F(TrialityTest, ComponentsToOctonion) {
  const auto s = sot::oct_from_components(ints<Rational>({1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(s.w(), Rational(1));
  EXPECT_EQ(s.x(1), Rational(2));
  EXPECT_EQ(s.t(), Rational(5));
  EXPECT_EQ(s.lambda(3), Rational(8));
}

TEST_F(TrialityTest, BasisVectorsMatchOctonionNorm) {
  // e0 has X^2 = +1 and conj(1) 1 = 1; e4 has X^2 = -1 and conj(I) I = -1.
  for (std::size_t mu = 0; mu < 8; ++mu) {
    const auto x = sot::Vector8<Rational>::basis(mu);
    const auto o = sot::oct_from_components(x.x);
    EXPECT_EQ(sot::norm_sq(o), sot::quadratic_form(x)) << mu;
  }
}

TEST_F(TrialityTest, OctonionTrilinearOnUnits) {
  const auto one = sot::SplitOctonion<Rational>::scalar(1);
  EXPECT_EQ(sot::trilinear_oct(one, one, one), Rational(-1));
  const auto I = sot::unit<Rational>(sot::BasisUnit::I);
  // -inner(conj(I), I * 1) = -inner(-I, I) = norm_sq(I) = -1
  EXPECT_EQ(sot::trilinear_oct(I, I, one), Rational(-1));
}

// ---------------------------------------------------------------------------
// Trilinear dictionary

TEST_F(TrialityTest, OracleFindsIdentityDictionary) {
  const auto& map = sot::pinned_dictionary();
  EXPECT_TRUE(map.is_identity());
  EXPECT_EQ(map.scale, 1);
  EXPECT_EQ(map.basis_triples, 512u);
  EXPECT_EQ(map.max_residual, 0.0);
}

TEST_F(TrialityTest, BothTrilinearFormsAgreeExactly) {
  const auto r = sot::dictionary_check<Rational>(sot::pinned_dictionary(), 200, 99);
  EXPECT_EQ(r.cases, 200u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.max_residual, 0.0);
}

TEST_F(TrialityTest, WrongDictionaryIsRejected) {
  auto map = sot::pinned_dictionary();
  std::swap(map.x[1], map.x[2]);
  const auto r = sot::dictionary_check<Rational>(map, 50, 1);
  EXPECT_GT(r.failures, 0u);
}

TEST_F(TrialityTest, TrilinearInvariantUnderRotorWords) {
  const auto r = sot::trilinear_invariance_check(5, 100);
  EXPECT_TRUE(r.passed()) << r.identities.front().first_failure.value_or("");
}

// ---------------------------------------------------------------------------
// Generator tables

TEST_F(TrialityTest, AlgebraicGeneratorsEqualTablesExactly) {
  const auto l01 = sot::algebraic_generators(sot::rotor_generator(0, 1));
  EXPECT_EQ(sot::generator_distance(l01.x, sot::l01_table().x), 0.0);
  EXPECT_EQ(sot::generator_distance(l01.phi, sot::l01_table().phi), 0.0);
  EXPECT_EQ(sot::generator_distance(l01.psi, sot::l01_table().psi), 0.0);

  const auto l04 = sot::algebraic_generators(sot::rotor_generator(0, 4));
  EXPECT_EQ(sot::generator_distance(l04.x, sot::l04_table().x), 0.0);
  EXPECT_EQ(sot::generator_distance(l04.phi, sot::l04_table().phi), 0.0);
  EXPECT_EQ(sot::generator_distance(l04.psi, sot::l04_table().psi), 0.0);

  const auto swap = sot::algebraic_generators(sot::triality_generator());
  EXPECT_EQ(sot::generator_distance(swap.x, sot::role_swap_table().x), 0.0);
  EXPECT_EQ(sot::generator_distance(swap.phi, sot::role_swap_table().phi), 0.0);
  EXPECT_EQ(sot::generator_distance(swap.psi, sot::role_swap_table().psi), 0.0);
}

TEST_F(TrialityTest, FiniteDifferenceGeneratorsMatchTables) {
  double leak = 1.0;
  const auto g = sot::finite_difference_generators([](double t) { return sot::rotor(0, 1, t).transform(); }, 1e-6, &leak);
  EXPECT_LT(sot::generator_distance(g.x, sot::l01_table().x), 1e-8);
  EXPECT_LT(sot::generator_distance(g.phi, sot::l01_table().phi), 1e-8);
  EXPECT_LT(sot::generator_distance(g.psi, sot::l01_table().psi), 1e-8);
  EXPECT_LT(leak, 1e-12);
}

TEST_F(TrialityTest, VectorGeneratorOfL01RotatesInPlane) {
  const auto& x = sot::l01_table().x;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const bool in_plane = (r == 0 && c == 1) || (r == 1 && c == 0);
      EXPECT_EQ(x[r][c] != 0, in_plane) << r << ',' << c;
    }
  EXPECT_EQ(x[0][1], -x[1][0]);
}

TEST_F(TrialityTest, BoostTouchesDiagonalPlanes) {
  const auto r = sot::boost_table_check(0.5);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(has_note(r, "phi boost planes: (0,4) (1,5) (2,6) (3,7)"));
  EXPECT_TRUE(has_note(r, "psi boost planes: (0,4) (1,5) (2,6) (3,7)"));
}

TEST_F(TrialityTest, CompactTableCheckPasses) { EXPECT_TRUE(sot::compact_table_check().passed()); }

TEST_F(TrialityTest, RoleSwap) {
  const auto r = sot::role_swap_check();
  for (const auto& i : r.identities) EXPECT_TRUE(i.passed()) << i.name << ": " << i.first_failure.value_or("");
  // Vector generator equals the spinor pattern of L01, psi generator is a
  // full-angle rotation in (0,1).
  EXPECT_EQ(sot::generator_distance(sot::role_swap_table().x, sot::l01_table().phi), 0.0);
  const auto& psi = sot::role_swap_table().psi;
  EXPECT_EQ(psi[0][1], -psi[1][0]);
  EXPECT_EQ(std::abs(sot::to_double(psi[0][1])), 1.0);
}

TEST_F(TrialityTest, RoleSwapRotorAtZeroIsIdentity) {
  const auto L = sot::triality_rotor(0.0);
  EXPECT_EQ(max_abs_diff(L.matrix(), sot::ComplexMatrix16<double>::identity()), 0.0);
  EXPECT_EQ(sot::triality_rotor_word(1.0).size(), 4u);
}

TEST_F(TrialityTest, DoubleCover) {
  const auto r = sot::double_cover_check();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases(), 36u);
}

// ---------------------------------------------------------------------------
// Correspondence

TEST_F(TrialityTest, CorrespondenceExact) {
  const auto r = sot::correspondence_check<Rational>(100, 3);
  for (const auto& i : r.identities) EXPECT_TRUE(i.passed()) << i.name;
  EXPECT_TRUE(has_note(r, "xi convention: xi^T B xi"));
}

TEST_F(TrialityTest, CorrespondenceFloat) {
  const auto r = sot::correspondence_check<double>(100, 3, 1e-9);
  EXPECT_TRUE(r.passed());
}

TEST_F(TrialityTest, SpinorInvariantMatchesOctonionNorm) {
  const auto phi = sot::Spinor16<Rational>::left(ints<Rational>({1, -2, 3, 0, 5, -1, 2, 7}));
  EXPECT_EQ(sot::spinor_invariant(phi), sot::norm_sq(sot::oct_from_components(phi.phi)));
}

TEST_F(TrialityTest, ZeroSamplesRejected) {
  EXPECT_THROW(sot::correspondence_check<Rational>(0), sot::Error);
}

}  // namespace
