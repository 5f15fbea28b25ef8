#pragma once

// Vectors and both chiral spinors side by side: octonionic forms, the
// role-swapping rotor, infinitesimal generator tables, the matrix/octonion
// correspondence, and the oracle that pins the trilinear-form dictionary.

#include <sot/octonion.hpp>
#include <sot/random.hpp>
#include <sot/report.hpp>
#include <sot/rotor.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace sot {

// ---------------------------------------------------------------------------
// Octonionic representation

/// x0 + x1 j1 + x2 j2 + x3 j3 + x4 I + x5 J1 + x6 J2 + x7 J3.
template <Scalar T>
SplitOctonion<T> oct_from_components(const std::array<T, 8>& c) {
  return SplitOctonion<T>(c);
}

template <Scalar T>
struct OctTriple {
  SplitOctonion<T> X;
  SplitOctonion<T> Phi;
  SplitOctonion<T> Psi;

  static OctTriple from(const Spinor16<T>& phi, const Vector8<T>& x, const Spinor16<T>& psi) {
    return {oct_from_components(x.x), oct_from_components(phi.phi), oct_from_components(psi.psi)};
  }
};

/// -inner(conj(Phi), X Psi).
template <Scalar T>
T trilinear_oct(const SplitOctonion<T>& Phi, const SplitOctonion<T>& X, const SplitOctonion<T>& Psi) {
  return -inner(conj(Phi), mul(X, Psi));
}

// ---------------------------------------------------------------------------
// Infinitesimal generators

/// d(component r)/d theta at theta = 0 for input basis vector c, on each of
/// the three 8-dimensional objects.
template <Scalar T>
struct GeneratorSet {
  using Matrix = std::array<std::array<T, 8>, 8>;
  Matrix x{};
  Matrix phi{};
  Matrix psi{};

  GeneratorSet() {
    for (auto* m : {&x, &phi, &psi})
      for (auto& row : *m) row.fill(T(0));
  }
};

/// Largest |a - b| over all entries of two generator matrices.
template <Scalar A, Scalar B>
double generator_distance(const std::array<std::array<A, 8>, 8>& a, const std::array<std::array<B, 8>, 8>& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) worst = std::max(worst, std::abs(to_double(a[r][c]) - to_double(b[r][c])));
  return worst;
}

namespace detail {

inline Spinor16<double> spinor_basis(bool left, std::size_t i) {
  std::array<double, 8> e{};
  e[i] = 1.0;
  return left ? Spinor16<double>::left(e) : Spinor16<double>::right(e);
}

}  // namespace detail

/// Generators of a one-parameter family theta -> L(theta) by central finite
/// differences. `leak` receives the largest wrong-chirality component seen.
inline GeneratorSet<double> finite_difference_generators(const std::function<SpinTransform<double>(double)>& family,
                                                         double h = 1e-6, double* leak = nullptr) {
  GeneratorSet<double> g;
  const SpinTransform<double> plus = family(h), minus = family(-h);
  double worst_leak = 0.0;
  for (std::size_t c = 0; c < 8; ++c) {
    const auto e = Vector8<double>::basis(c);
    const auto xp = rotate_vector(e, plus), xm = rotate_vector(e, minus);
    const auto pp = rotate_spinor(detail::spinor_basis(true, c), plus);
    const auto pm = rotate_spinor(detail::spinor_basis(true, c), minus);
    const auto qp = rotate_spinor(detail::spinor_basis(false, c), plus);
    const auto qm = rotate_spinor(detail::spinor_basis(false, c), minus);
    for (std::size_t r = 0; r < 8; ++r) {
      g.x[r][c] = (xp[r] - xm[r]) / (2 * h);
      g.phi[r][c] = (pp.phi[r] - pm.phi[r]) / (2 * h);
      g.psi[r][c] = (qp.psi[r] - qm.psi[r]) / (2 * h);
      worst_leak = std::max({worst_leak, std::abs(pp.psi[r]), std::abs(pm.psi[r]), std::abs(qp.phi[r]),
                             std::abs(qm.phi[r])});
    }
  }
  if (leak) *leak = worst_leak;
  return g;
}

/// Exact generators of exp(theta K) for a Gamma-basis element K: the vector
/// generator is [K, X] read back as a vector, the spinor one is K in real
/// chiral coordinates.
template <Scalar T = Rational>
GeneratorSet<T> algebraic_generators(const ComplexMatrix16<T>& K) {
  GeneratorSet<T> g;
  for (std::size_t c = 0; c < 8; ++c) {
    const auto X = vector_to_matrix(Vector8<T>::basis(c));
    const auto dx = matrix_to_vector(ComplexMatrix16<T>(K * X - X * K));
    for (std::size_t r = 0; r < 8; ++r) g.x[r][c] = dx[r];
  }
  const auto R = to_spinor_coordinates(K);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      if constexpr (is_exact_v<T>) {
        if (!R(r, c).is_real() || !R(r + 8, c + 8).is_real() || !R(r, c + 8).is_zero() || !R(r + 8, c).is_zero())
          throw Error("generator is not real and block diagonal in chiral coordinates");
      }
      g.phi[r][c] = R(r, c).re;
      g.psi[r][c] = R(r + 8, c + 8).re;
    }
  return g;
}

/// d/dtheta of L_mu_nu(theta) at 0: -Gamma_mu Gamma_nu / 2.
template <Scalar T = Rational>
ComplexMatrix16<T> rotor_generator(std::size_t mu, std::size_t nu) {
  return bivector<T>(mu, nu) * T(Rational(-1, 2));
}

// ---------------------------------------------------------------------------
// Reference tables

namespace detail {

struct TableEntry {
  std::size_t row;
  std::size_t col;
  int twice;  // coefficient times two
};

// One entry per row: row r picks up (sign / 2) * theta * component col.
struct HalfRow {
  std::size_t col;
  int sign;
};

inline void fill(std::array<std::array<Rational, 8>, 8>& m, std::initializer_list<TableEntry> entries) {
  for (const auto& e : entries) m[e.row][e.col] = Rational(e.twice, 2);
}

inline void fill_half_rows(std::array<std::array<Rational, 8>, 8>& m, const std::array<HalfRow, 8>& rows) {
  for (std::size_t r = 0; r < 8; ++r) m[r][rows[r].col] = Rational(rows[r].sign, 2);
}

}  // namespace detail

/// Infinitesimal L_01: x0' = x0 - theta x1, x1' = x1 + theta x0; spinors at
/// half angle in four planes each.
inline const GeneratorSet<Rational>& l01_table() {
  static const GeneratorSet<Rational> t = [] {
    GeneratorSet<Rational> g;
    detail::fill(g.x, {{0, 1, -2}, {1, 0, 2}});
    detail::fill_half_rows(g.phi, {{{1, +1}, {0, -1}, {3, -1}, {2, +1}, {5, -1}, {4, +1}, {7, +1}, {6, -1}}});
    detail::fill_half_rows(g.psi, {{{1, +1}, {0, -1}, {3, +1}, {2, -1}, {5, +1}, {4, -1}, {7, -1}, {6, +1}}});
    return g;
  }();
  return t;
}

/// Infinitesimal boost L_04: x0' = x0 + theta x4, x4' = x4 + theta x0;
/// spinors at half rapidity in the planes (0,4), (1,5), (2,6), (3,7).
inline const GeneratorSet<Rational>& l04_table() {
  static const GeneratorSet<Rational> t = [] {
    GeneratorSet<Rational> g;
    detail::fill(g.x, {{0, 4, 2}, {4, 0, 2}});
    detail::fill_half_rows(g.phi, {{{4, -1}, {5, -1}, {6, -1}, {7, -1}, {0, -1}, {1, -1}, {2, -1}, {3, -1}}});
    detail::fill_half_rows(g.psi, {{{4, -1}, {5, +1}, {6, +1}, {7, +1}, {0, -1}, {1, +1}, {2, +1}, {3, +1}}});
    return g;
  }();
  return t;
}

/// Infinitesimal L_10(t/2) L_23(t/2) L_54(t/2) L_67(t/2): x and phi move at
/// half angle in four planes, psi rotates at full angle in (0,1) only.
inline const GeneratorSet<Rational>& role_swap_table() {
  static const GeneratorSet<Rational> t = [] {
    GeneratorSet<Rational> g;
    detail::fill_half_rows(g.x, {{{1, +1}, {0, -1}, {3, -1}, {2, +1}, {5, -1}, {4, +1}, {7, +1}, {6, -1}}});
    detail::fill_half_rows(g.phi, {{{1, +1}, {0, -1}, {3, +1}, {2, -1}, {5, +1}, {4, -1}, {7, -1}, {6, +1}}});
    detail::fill(g.psi, {{0, 1, -2}, {1, 0, 2}});
    return g;
  }();
  return t;
}

// ---------------------------------------------------------------------------
// The role-swapping rotor

inline std::vector<Rotor<double>> triality_rotor_word(double theta) {
  return {rotor(1, 0, theta / 2), rotor(2, 3, theta / 2), rotor(5, 4, theta / 2), rotor(6, 7, theta / 2)};
}

/// L_10(theta/2) L_23(theta/2) L_54(theta/2) L_67(theta/2).
inline SpinTransform<double> triality_rotor(double theta) { return compose(triality_rotor_word(theta)); }

/// Exact generator of triality_rotor.
inline ComplexMatrix16<Rational> triality_generator() {
  return (bivector(1, 0) + bivector(2, 3) + bivector(5, 4) + bivector(6, 7)) * Rational(-1, 4);
}

// ---------------------------------------------------------------------------
// Generator checks

namespace detail {

/// One case per table row (24 in total), comparing a measured generator
/// against a reference.
inline IdentityResult compare_generator_rows(const std::string& name, const GeneratorSet<double>& got,
                                             const GeneratorSet<Rational>& want, double tolerance) {
  IdentitySweep sweep(name, tolerance);
  const std::array<std::pair<const char*, std::pair<const GeneratorSet<double>::Matrix*,
                                                    const GeneratorSet<Rational>::Matrix*>>,
                   3>
      objects = {{{"x", {&got.x, &want.x}}, {"phi", {&got.phi, &want.phi}}, {"psi", {&got.psi, &want.psi}}}};
  for (const auto& [label, mats] : objects)
    for (std::size_t r = 0; r < 8; ++r) {
      double worst = 0.0;
      std::size_t at = 0;
      for (std::size_t c = 0; c < 8; ++c) {
        const double d = std::abs((*mats.first)[r][c] - to_double((*mats.second)[r][c]));
        if (d > worst) {
          worst = d;
          at = c;
        }
      }
      sweep.measure(worst, [&, label = label, r, at] {
        std::ostringstream os;
        os << label << r << "' coefficient of " << label << at << ": got " << (*mats.first)[r][at] << ", want "
           << to_string((*mats.second)[r][at]);
        return os.str();
      });
    }
  return std::move(sweep).finish();
}

/// Index pairs (r < c) where a generator matrix is non-zero.
inline std::vector<std::pair<std::size_t, std::size_t>> touched_planes(const GeneratorSet<double>::Matrix& m,
                                                                       double threshold = 1e-8) {
  std::vector<std::pair<std::size_t, std::size_t>> planes;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = r + 1; c < 8; ++c)
      if (std::abs(m[r][c]) > threshold || std::abs(m[c][r]) > threshold) planes.emplace_back(r, c);
  return planes;
}

inline std::string format_planes(const std::vector<std::pair<std::size_t, std::size_t>>& planes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < planes.size(); ++i)
    os << (i ? " " : "") << '(' << planes[i].first << ',' << planes[i].second << ')';
  return os.str();
}

inline IdentityResult leak_check(const std::string& name, double leak) {
  IdentitySweep sweep(name, 0.0);
  sweep.measure(leak, [&] { return "wrong-chirality component " + std::to_string(leak); });
  return std::move(sweep).finish();
}

}  // namespace detail

/// Finite-difference L_01 generators against the compact-rotation table.
inline VerificationReport compact_table_check(double h = 1e-6, double tolerance = 1e-8) {
  VerificationReport report;
  report.suite = "triality.L01";
  report.mode = "float";
  double leak = 0.0;
  const auto g = finite_difference_generators([](double t) { return rotor(0, 1, t).transform(); }, h, &leak);
  report.identities.push_back(detail::compare_generator_rows("L01 generator table (x, phi, psi)", g, l01_table(), tolerance));
  report.identities.push_back(detail::leak_check("L01 keeps chiral blocks apart", leak));
  return report;
}

/// L_04 at finite rapidity on x, the infinitesimal table on (x, phi, psi),
/// and the set of spinor planes the boost touches.
inline VerificationReport boost_table_check(double theta, double h = 1e-6, double tolerance = 1e-8) {
  VerificationReport report;
  report.suite = "triality.L04";
  report.mode = "float";

  const auto L = rotor(0, 4, theta).transform();
  IdentitySweep finite("L04 finite boost x0' = x0 cosh + x4 sinh, x4' = x4 cosh + x0 sinh", 1e-12);
  for (std::size_t b = 0; b < 8; ++b) {
    const auto got = rotate_vector(Vector8<double>::basis(b), L);
    Vector8<double> want = Vector8<double>::basis(b);
    if (b == 0) {
      want[0] = std::cosh(theta);
      want[4] = std::sinh(theta);
    } else if (b == 4) {
      want[4] = std::cosh(theta);
      want[0] = std::sinh(theta);
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < 8; ++r) worst = std::max(worst, std::abs(got[r] - want[r]));
    finite.measure(worst / std::max(1.0, std::cosh(theta)), [&] {
      return "x = e" + std::to_string(b) + " residual " + std::to_string(worst);
    });
  }
  report.identities.push_back(std::move(finite).finish());

  double leak = 0.0;
  const auto g = finite_difference_generators([](double t) { return rotor(0, 4, t).transform(); }, h, &leak);
  report.identities.push_back(detail::compare_generator_rows("L04 generator table (x, phi, psi)", g, l04_table(), tolerance));
  report.identities.push_back(detail::leak_check("L04 keeps chiral blocks apart", leak));

  const std::vector<std::pair<std::size_t, std::size_t>> isotropic = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
  IdentitySweep planes("L04 spinor generator touches exactly (0,4) (1,5) (2,6) (3,7)", 0.0);
  for (const auto& [label, m] : {std::pair{"phi", &g.phi}, std::pair{"psi", &g.psi}}) {
    const auto found = detail::touched_planes(*m);
    report.notes.push_back(std::string(label) + " boost planes: " + detail::format_planes(found));
    planes.check(found == isotropic, [&, label = label] {
      return std::string(label) + " touches " + detail::format_planes(found);
    });
  }
  report.identities.push_back(std::move(planes).finish());
  return report;
}

/// The composite rotor: generator table, x mimicking the L_01 phi action,
/// phi mimicking the L_01 psi action, and psi confined to a full-angle (0,1)
/// rotation.
inline VerificationReport role_swap_check(double h = 1e-6, double tolerance = 1e-8) {
  VerificationReport report;
  report.suite = "triality.role_swap";
  report.mode = "float";
  double leak = 0.0;
  const auto g = finite_difference_generators(triality_rotor, h, &leak);
  report.identities.push_back(
      detail::compare_generator_rows("role-swap generator table (x, phi, psi)", g, role_swap_table(), tolerance));
  report.identities.push_back(detail::leak_check("role-swap keeps chiral blocks apart", leak));

  const auto& l01 = l01_table();
  IdentitySweep swap("role-swap x generator = L01 phi generator, phi generator = L01 psi generator", tolerance);
  swap.measure(generator_distance(g.x, l01.phi), [] { return std::string("x generator differs"); });
  swap.measure(generator_distance(g.phi, l01.psi), [] { return std::string("phi generator differs"); });
  report.identities.push_back(std::move(swap).finish());

  IdentitySweep psi("role-swap psi generator = full-angle (0,1) rotation", tolerance);
  GeneratorSet<Rational>::Matrix full{};
  for (auto& row : full) row.fill(Rational(0));
  full[0][1] = -1;
  full[1][0] = 1;
  psi.measure(generator_distance(g.psi, full), [] { return std::string("psi generator is not the (0,1) rotation"); });
  report.identities.push_back(std::move(psi).finish());
  return report;
}

// ---------------------------------------------------------------------------
// Finite-angle checks

namespace detail {

template <std::size_t N>
std::array<double, N> to_doubles(const std::array<int, N>& v) {
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = v[i];
  return out;
}

inline std::array<double, 8> first_half(const std::array<int, 16>& v) {
  std::array<double, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = v[i];
  return out;
}

inline double euclidean_sq(const Vector8<double>& v) {
  double s = 0;
  for (double c : v.x) s += c * c;
  return s;
}

inline double euclidean_sq(const Spinor16<double>& s) {
  double n = 0;
  for (double c : s.phi) n += c * c;
  for (double c : s.psi) n += c * c;
  return n;
}

/// |a - b| relative to the magnitude of the terms that were summed.
inline double scaled_residual(double a, double b, double scale) { return std::abs(a - b) / std::max(1.0, scale); }

}  // namespace detail

/// Every compact plane: theta = 2 pi fixes vectors and negates spinors,
/// theta = 4 pi fixes both.
inline VerificationReport double_cover_check(std::uint64_t seed = kDefaultSeed, double tolerance = 1e-12) {
  VerificationReport report;
  report.suite = "triality.double_cover";
  report.mode = "float";
  report.seed = seed;
  Rng rng(seed);
  IdentitySweep vec2("compact rotor at 2 pi fixes vectors", tolerance);
  IdentitySweep spin2("compact rotor at 2 pi negates spinors", tolerance);
  IdentitySweep both4("compact rotor at 4 pi fixes vectors and spinors", tolerance);
  for (std::size_t mu = 0; mu < 8; ++mu)
    for (std::size_t nu = mu + 1; nu < 8; ++nu) {
      if (!Metric::compact_plane(mu, nu)) continue;
      const Vector8<double> x(detail::to_doubles(random_components<8>(rng)));
      const auto eta = Spinor16<double>::from_column(detail::to_doubles(random_components<16>(rng)));
      const auto where = [&] { return "plane (" + std::to_string(mu) + "," + std::to_string(nu) + ")"; };
      const auto r2 = rotor(mu, nu, 2 * std::numbers::pi), r4 = rotor(mu, nu, 4 * std::numbers::pi);

      auto vec_dev = [&](const Vector8<double>& got) {
        double w = 0;
        for (std::size_t i = 0; i < 8; ++i) w = std::max(w, std::abs(got[i] - x[i]));
        return w;
      };
      auto spin_dev = [&](const Spinor16<double>& got, double sign) {
        double w = 0;
        for (std::size_t i = 0; i < 8; ++i)
          w = std::max({w, std::abs(got.phi[i] - sign * eta.phi[i]), std::abs(got.psi[i] - sign * eta.psi[i])});
        return w;
      };
      vec2.measure(vec_dev(rotate_vector(x, r2)), where);
      spin2.measure(spin_dev(rotate_spinor(eta, r2), -1.0), where);
      both4.measure(std::max(vec_dev(rotate_vector(x, r4)), spin_dev(rotate_spinor(eta, r4), 1.0)), where);
    }
  for (auto* s : {&vec2, &spin2, &both4}) report.identities.push_back(std::move(*s).finish());
  return report;
}

/// Random plane, |theta| <= max_angle: Q(x) and eta^T B eta are preserved
/// and spinor chiral blocks never mix. Residuals are relative to the squared
/// Euclidean size of the transformed object.
inline VerificationReport rotor_invariance_check(std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000,
                                                 double tolerance = 1e-12, double max_angle = 3.0) {
  VerificationReport report;
  report.suite = "triality.rotor_invariance";
  report.mode = "float";
  report.seed = seed;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> plane(0, 7);
  std::uniform_real_distribution<double> angle(-max_angle, max_angle);
  IdentitySweep vec("Q(rotate_vector(x, L)) = Q(x)", tolerance);
  IdentitySweep spin("spinor_invariant(rotate_spinor(eta, L)) = spinor_invariant(eta)", tolerance);
  IdentitySweep chiral("rotate_spinor keeps wrong-block components zero", 0.0);
  std::size_t compact = 0, boosts = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t mu = plane(rng), nu = plane(rng);
    while (nu == mu) nu = plane(rng);
    const double theta = angle(rng);
    (Metric::compact_plane(mu, nu) ? compact : boosts)++;
    const auto L = rotor(mu, nu, theta).transform();
    const auto where = [&] {
      std::ostringstream os;
      os << "sample " << i << " plane (" << mu << "," << nu << ") theta " << theta;
      return os.str();
    };

    const Vector8<double> x(detail::to_doubles(random_components<8>(rng)));
    const auto x2 = rotate_vector(x, L);
    vec.measure(detail::scaled_residual(quadratic_form(x2), quadratic_form(x), detail::euclidean_sq(x2)), where);

    const auto eta = Spinor16<double>::from_column(detail::to_doubles(random_components<16>(rng)));
    const auto eta2 = rotate_spinor(eta, L);
    spin.measure(
        detail::scaled_residual(spinor_invariant(eta2), spinor_invariant(eta), detail::euclidean_sq(eta2)), where);

    const auto left = Spinor16<double>::left(eta.phi), right = Spinor16<double>::right(eta.psi);
    chiral.check(rotate_spinor(left, L).is_left() && rotate_spinor(right, L).is_right(), where);
  }
  for (auto* s : {&vec, &spin, &chiral}) report.identities.push_back(std::move(*s).finish());
  report.notes.push_back("planes sampled: " + std::to_string(compact) + " compact, " + std::to_string(boosts) +
                         " boost");
  return report;
}

/// Random rotor words of length 1..max_length with |theta| <= max_angle act
/// on (phi, x, psi) together; the matrix trilinear form must not move.
inline VerificationReport trilinear_invariance_check(std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000,
                                                     double tolerance = 1e-12, std::size_t max_length = 8,
                                                     double max_angle = 2.0) {
  VerificationReport report;
  report.suite = "triality.trilinear_invariance";
  report.mode = "float";
  report.seed = seed;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> plane(0, 7), length(1, max_length);
  std::uniform_real_distribution<double> angle(-max_angle, max_angle);
  IdentitySweep sweep("phi^T B X psi invariant under simultaneous rotor words", tolerance);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Rotor<double>> word;
    const std::size_t n = length(rng);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t mu = plane(rng), nu = plane(rng);
      while (nu == mu) nu = plane(rng);
      word.push_back(rotor(mu, nu, angle(rng)));
    }
    const auto L = compose(word);
    const auto phi = Spinor16<double>::left(detail::to_doubles(random_components<8>(rng)));
    const Vector8<double> x(detail::to_doubles(random_components<8>(rng)));
    const auto psi = Spinor16<double>::right(detail::to_doubles(random_components<8>(rng)));
    const auto phi2 = rotate_spinor(phi, L);
    const auto x2 = rotate_vector(x, L);
    const auto psi2 = rotate_spinor(psi, L);
    const double before = trilinear_matrix(phi, x, psi);
    const double after = trilinear_matrix(phi2, x2, psi2);
    const double scale =
        std::sqrt(detail::euclidean_sq(phi2) * detail::euclidean_sq(x2) * detail::euclidean_sq(psi2));
    sweep.measure(detail::scaled_residual(after, before, scale), [&] {
      std::ostringstream os;
      os << "sample " << i << " word length " << n << ": " << before << " -> " << after;
      return os.str();
    });
  }
  report.identities.push_back(std::move(sweep).finish());
  return report;
}

// ---------------------------------------------------------------------------
// Matrix / octonion correspondence

/// conj(X) X against the matrix quadratic form, and conj(Phi) Phi,
/// conj(Psi) Psi against the spinor invariant, on random integer inputs.
template <Scalar T = Rational>
VerificationReport correspondence_check(std::size_t n_samples = 1000, std::uint64_t seed = kDefaultSeed,
                                        double tolerance = 1e-12) {
  if (n_samples == 0) throw Error("correspondence_check needs at least one sample");
  const double tol = is_exact_v<T> ? 0.0 : tolerance;
  VerificationReport report;
  report.suite = "correspondence";
  report.mode = ScalarTraits<T>::mode;
  report.seed = seed;

  const auto convention = pin_xi_convention();
  IdentitySweep pinned("xi convention oracle pins a unique candidate", 0.0);
  pinned.check(convention.pinned.has_value(), [] { return std::string("no unique convention"); });
  report.identities.push_back(std::move(pinned).finish());
  if (convention.pinned) report.notes.push_back("xi convention: " + to_string(*convention.pinned));

  IdentitySweep xi("M M^dagger = 2 Id (xi basis change invertible)", 0.0);
  const auto MMd = xi_matrix<T>() * xi_matrix<T>().adjoint();
  xi.measure(max_abs_diff(MMd, ComplexMatrix16<T>::identity() * T(2)), [] { return std::string("M M^dagger != 2 Id"); });
  report.identities.push_back(std::move(xi).finish());

  auto load = [](const std::array<int, 8>& v) {
    std::array<T, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = T(v[i]);
    return out;
  };

  Rng rng(seed);
  IdentitySweep vec("conj(X) X = X^2 (matrix quadratic form)", tol);
  IdentitySweep left("conj(Phi) Phi = phi^T B phi", tol);
  IdentitySweep right("conj(Psi) Psi = psi^T B psi", tol);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto where = [i] { return "sample " + std::to_string(i); };
    {
      const Vector8<T> x(load(random_components<8>(rng)));
      const auto Xm = vector_to_matrix(x);
      const auto sq = Xm * Xm;
      const T q = sq(0, 0).re;
      const auto oct = mul(conj(oct_from_components(x.x)), oct_from_components(x.x));
      const double d = std::max(max_abs_diff(sq, ComplexMatrix16<T>::identity() * q),
                                max_abs_diff(oct, SplitOctonion<T>::scalar(q)));
      vec.measure(d, [&] { return where() + ": octonion " + to_string(oct[0]) + ", matrix " + to_string(q); });
    }
    {
      const auto phi = Spinor16<T>::left(load(random_components<8>(rng)));
      const T q = spinor_invariant(phi);
      const auto oct = mul(conj(oct_from_components(phi.phi)), oct_from_components(phi.phi));
      left.measure(max_abs_diff(oct, SplitOctonion<T>::scalar(q)),
                   [&] { return where() + ": octonion " + to_string(oct[0]) + ", matrix " + to_string(q); });
    }
    {
      const auto psi = Spinor16<T>::right(load(random_components<8>(rng)));
      const T q = spinor_invariant(psi);
      const auto oct = mul(conj(oct_from_components(psi.psi)), oct_from_components(psi.psi));
      right.measure(max_abs_diff(oct, SplitOctonion<T>::scalar(q)),
                    [&] { return where() + ": octonion " + to_string(oct[0]) + ", matrix " + to_string(q); });
    }
  }
  for (auto* s : {&vec, &left, &right}) report.identities.push_back(std::move(*s).finish());
  return report;
}

// ---------------------------------------------------------------------------
// Trilinear dictionary oracle

struct SlotEntry {
  std::size_t index = 0;
  int sign = 1;
  friend bool operator==(const SlotEntry&, const SlotEntry&) = default;
};

/// F_matrix(phi, x, psi) = scale * F_oct(P_phi phi, P_x x, P_psi psi), where
/// each P sends matrix-side component a to octonion coefficient
/// slot[a].index with sign slot[a].sign.
struct CorrespondenceMap {
  std::array<SlotEntry, 8> phi{};
  std::array<SlotEntry, 8> x{};
  std::array<SlotEntry, 8> psi{};
  int scale = 1;
  double max_residual = 0.0;
  std::size_t basis_triples = 0;

  template <Scalar T>
  static std::array<T, 8> apply(const std::array<SlotEntry, 8>& slot, const std::array<T, 8>& v) {
    std::array<T, 8> out;
    out.fill(T(0));
    for (std::size_t a = 0; a < 8; ++a) out[slot[a].index] += T(slot[a].sign) * v[a];
    return out;
  }

  bool is_identity() const {
    for (const auto* s : {&phi, &x, &psi})
      for (std::size_t a = 0; a < 8; ++a)
        if ((*s)[a].index != a || (*s)[a].sign != 1) return false;
    return scale == 1;
  }

  /// The octonionic form evaluated through the dictionary.
  template <Scalar T>
  T evaluate(const Spinor16<T>& p, const Vector8<T>& v, const Spinor16<T>& q) const {
    return T(scale) * trilinear_oct(oct_from_components(apply(phi, p.phi)), oct_from_components(apply(x, v.x)),
                                    oct_from_components(apply(psi, q.psi)));
  }
};

class OracleError : public Error {
 public:
  using Error::Error;
};

namespace detail {

using Tensor512 = std::array<std::array<std::array<Rational, 8>, 8>, 8>;

inline Tensor512 matrix_tensor() {
  Tensor512 t;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      for (std::size_t c = 0; c < 8; ++c) {
        std::array<Rational, 8> ea, ec;
        ea.fill(Rational(0));
        ec.fill(Rational(0));
        ea[a] = 1;
        ec[c] = 1;
        t[a][b][c] = trilinear_matrix(Spinor16<Rational>::left(ea), Vector8<Rational>::basis(b),
                                      Spinor16<Rational>::right(ec));
      }
  return t;
}

inline Tensor512 octonion_tensor() {
  Tensor512 t;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      for (std::size_t c = 0; c < 8; ++c)
        t[a][b][c] = trilinear_oct(unit<Rational>(unit_at(a)), unit<Rational>(unit_at(b)), unit<Rational>(unit_at(c)));
  return t;
}

// Constraint search over signed permutations of the three slots. Two
// assigned slots of a non-zero matrix entry force the third whenever the
// octonion side has a unique candidate; everything else is branched on.
class DictionarySearch {
 public:
  DictionarySearch(const Tensor512& m, const Tensor512& o) : m_(m), o_(o) {}

  std::optional<CorrespondenceMap> run() {
    for (int scale : {1, -1}) {
      State s;
      s.scale = scale;
      if (!propagate(s)) continue;
      if (auto done = search(s)) return done;
    }
    return std::nullopt;
  }

  std::string best_partial() const {
    std::ostringstream os;
    os << "deepest consistent partial dictionary (" << best_.assigned() << "/24 slots, scale " << best_.scale << "):";
    const char* names[] = {"phi", "x", "psi"};
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t i = 0; i < 8; ++i)
        if (best_.map[s][i]) os << ' ' << names[s] << i << "->" << (best_.map[s][i]->sign > 0 ? '+' : '-') << best_.map[s][i]->index;
    return os.str();
  }

 private:
  struct State {
    std::array<std::array<std::optional<SlotEntry>, 8>, 3> map{};
    std::array<std::array<bool, 8>, 3> used{};
    int scale = 1;
    std::size_t assigned() const {
      std::size_t n = 0;
      for (const auto& slot : map)
        for (const auto& e : slot) n += e.has_value();
      return n;
    }
  };

  const Rational& oct(const State& s, std::size_t a, std::size_t b, std::size_t c) const {
    return o_[s.map[0][a]->index][s.map[1][b]->index][s.map[2][c]->index];
  }

  bool assign(State& s, std::size_t slot, std::size_t i, SlotEntry e) const {
    if (s.map[slot][i]) return *s.map[slot][i] == e;
    if (s.used[slot][e.index]) return false;
    s.map[slot][i] = e;
    s.used[slot][e.index] = true;
    return true;
  }

  bool consistent(const State& s) const {
    for (std::size_t a = 0; a < 8; ++a) {
      if (!s.map[0][a]) continue;
      for (std::size_t b = 0; b < 8; ++b) {
        if (!s.map[1][b]) continue;
        for (std::size_t c = 0; c < 8; ++c) {
          if (!s.map[2][c]) continue;
          const int sign = s.scale * s.map[0][a]->sign * s.map[1][b]->sign * s.map[2][c]->sign;
          if (m_[a][b][c] != Rational(sign) * oct(s, a, b, c)) return false;
        }
      }
    }
    return true;
  }

  // Forces the one open slot of (a, b, c); false on contradiction.
  bool force(State& s, const std::array<std::size_t, 3>& idx, std::size_t open, bool& changed) const {
    const Rational& want = m_[idx[0]][idx[1]][idx[2]];
    if (want == 0) return true;
    std::optional<SlotEntry> hit;
    std::size_t candidates = 0;
    for (std::size_t t = 0; t < 8; ++t) {
      std::array<std::size_t, 3> target;
      int sign = s.scale;
      for (std::size_t k = 0; k < 3; ++k) {
        if (k == open) {
          target[k] = t;
        } else {
          target[k] = s.map[k][idx[k]]->index;
          sign *= s.map[k][idx[k]]->sign;
        }
      }
      const Rational& have = o_[target[0]][target[1]][target[2]];
      if (have == 0) continue;
      ++candidates;
      const Rational ratio = want / (Rational(sign) * have);
      if (ratio == 1 || ratio == -1) hit = SlotEntry{t, ratio == 1 ? 1 : -1};
    }
    if (candidates != 1) return candidates > 0;
    if (!hit) return false;
    if (s.map[open][idx[open]]) return *s.map[open][idx[open]] == *hit;
    if (!assign(s, open, idx[open], *hit)) return false;
    changed = true;
    return true;
  }

  bool propagate(State& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
          for (std::size_t c = 0; c < 8; ++c) {
            const std::array<bool, 3> known = {s.map[0][a].has_value(), s.map[1][b].has_value(),
                                               s.map[2][c].has_value()};
            const int count = known[0] + known[1] + known[2];
            if (count != 2) continue;
            const std::size_t open = !known[0] ? 0 : !known[1] ? 1 : 2;
            if (!force(s, {a, b, c}, open, changed)) return false;
          }
    }
    return consistent(s);
  }

  std::optional<CorrespondenceMap> search(const State& s) {
    if (s.assigned() > best_.assigned()) best_ = s;
    for (std::size_t slot = 0; slot < 3; ++slot)
      for (std::size_t i = 0; i < 8; ++i) {
        if (s.map[slot][i]) continue;
        for (std::size_t t = 0; t < 8; ++t) {
          if (s.used[slot][t]) continue;
          for (int sign : {1, -1}) {
            State next = s;
            if (!assign(next, slot, i, {t, sign}) || !propagate(next)) continue;
            if (auto done = search(next)) return done;
          }
        }
        return std::nullopt;
      }
    CorrespondenceMap out;
    for (std::size_t i = 0; i < 8; ++i) {
      out.phi[i] = *s.map[0][i];
      out.x[i] = *s.map[1][i];
      out.psi[i] = *s.map[2][i];
    }
    out.scale = s.scale;
    return out;
  }

  const Tensor512& m_;
  const Tensor512& o_;
  State best_;
};

}  // namespace detail

/// Evaluates both trilinear forms on all 512 basis triples and searches
/// signed permutations of each slot, plus a global sign, for a dictionary
/// under which they agree identically. Throws OracleError with the best
/// partial candidate if none exists.
inline CorrespondenceMap trilinear_equivalence_oracle() {
  const auto m = detail::matrix_tensor();
  const auto o = detail::octonion_tensor();
  detail::DictionarySearch search(m, o);
  auto found = search.run();
  if (!found) {
    double identity_residual = 0.0;
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b)
        for (std::size_t c = 0; c < 8; ++c)
          identity_residual = std::max(identity_residual, residual(m[a][b][c], o[a][b][c]));
    throw OracleError("no signed-permutation dictionary makes the trilinear forms agree; " + search.best_partial() +
                      "; identity dictionary residual " + std::to_string(identity_residual));
  }
  CorrespondenceMap map = *found;
  map.basis_triples = 512;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      for (std::size_t c = 0; c < 8; ++c) {
        std::array<Rational, 8> ea, ec;
        ea.fill(Rational(0));
        ec.fill(Rational(0));
        ea[a] = 1;
        ec[c] = 1;
        const Rational via = map.evaluate(Spinor16<Rational>::left(ea), Vector8<Rational>::basis(b),
                                          Spinor16<Rational>::right(ec));
        map.max_residual = std::max(map.max_residual, residual(m[a][b][c], via));
      }
  if (map.max_residual != 0.0) throw OracleError("oracle dictionary does not reproduce the basis tensor");
  return map;
}

/// The oracle result, computed once.
inline const CorrespondenceMap& pinned_dictionary() {
  static const CorrespondenceMap map = trilinear_equivalence_oracle();
  return map;
}

/// Applies `map` to random integer triples and compares both forms.
template <Scalar T = Rational>
IdentityResult dictionary_check(const CorrespondenceMap& map, std::size_t samples = 1000,
                                std::uint64_t seed = kDefaultSeed, double tolerance = 1e-12) {
  IdentitySweep sweep("phi^T B X psi = scale * -inner(conj(Phi), X Psi) through the dictionary",
                      is_exact_v<T> ? 0.0 : tolerance);
  Rng rng(seed);
  auto load = [](const std::array<int, 8>& v) {
    std::array<T, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = T(v[i]);
    return out;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const auto phi = Spinor16<T>::left(load(random_components<8>(rng)));
    const Vector8<T> x(load(random_components<8>(rng)));
    const auto psi = Spinor16<T>::right(load(random_components<8>(rng)));
    const T lhs = trilinear_matrix(phi, x, psi);
    const T rhs = map.evaluate(phi, x, psi);
    sweep.measure(residual(lhs, rhs), [&] {
      return "sample " + std::to_string(i) + ": matrix " + to_string(lhs) + ", octonion " + to_string(rhs);
    });
  }
  return std::move(sweep).finish();
}

// ---------------------------------------------------------------------------
// Exact Clifford-side properties used by the triality suite

/// (sum x_mu Gamma_mu)^2 = Q(x) Id on random integer vectors.
template <Scalar T = Rational>
IdentityResult quadratic_form_check(std::size_t samples = 1000, std::uint64_t seed = kDefaultSeed,
                                    double tolerance = 1e-12) {
  IdentitySweep sweep("(sum x_mu Gamma_mu)^2 = Q(x) Id", is_exact_v<T> ? 0.0 : tolerance);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto ints = random_components<8>(rng);
    Vector8<T> x;
    for (std::size_t k = 0; k < 8; ++k) x[k] = T(ints[k]);
    const auto X = vector_to_matrix(x);
    const auto want = ComplexMatrix16<T>::identity() * quadratic_form(x);
    sweep.measure(max_abs_diff(X * X, want), [&] { return "sample " + std::to_string(i); });
  }
  return std::move(sweep).finish();
}

/// B real, B^2 = Id, Gamma_mu^T = B Gamma_mu B for every mu.
template <Scalar T = Rational>
IdentityResult b_matrix_check(double tolerance = 1e-12) {
  IdentitySweep sweep("B real, B^2 = Id, Gamma_mu^T = B Gamma_mu B", is_exact_v<T> ? 0.0 : tolerance);
  const auto& B = b_matrix<T>();
  sweep.check(B.is_real(), [] { return std::string("B has an imaginary entry"); });
  sweep.measure(max_abs_diff(B * B, ComplexMatrix16<T>::identity()), [] { return std::string("B^2 != Id"); });
  for (std::size_t mu = 0; mu < 8; ++mu)
    sweep.measure(max_abs_diff(gamma<T>(mu).transpose(), B * gamma<T>(mu) * B),
                  [mu] { return "Gamma_" + std::to_string(mu) + "^T != B Gamma B"; });
  return std::move(sweep).finish();
}

/// Everything that ties vectors and spinors together. Algebraic parts run in
/// T; rotor checks with continuous angles always run in binary64.
template <Scalar T = Rational>
VerificationReport verify_triality(std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000,
                                   double tolerance = 1e-12) {
  VerificationReport report;
  report.suite = "triality";
  report.mode = ScalarTraits<T>::mode;
  report.seed = seed;
  report.identities.push_back(quadratic_form_check<T>(samples, seed, tolerance));
  report.identities.push_back(b_matrix_check<T>(tolerance));

  report.append(rotor_invariance_check(seed, samples, tolerance));
  report.append(compact_table_check());
  report.append(boost_table_check(1.0));
  report.append(role_swap_check());
  report.append(double_cover_check(seed, tolerance));

  const auto& map = pinned_dictionary();
  IdentitySweep oracle("trilinear oracle: exact agreement on 512 basis triples", 0.0);
  oracle.measure(map.max_residual, [] { return std::string("basis tensor mismatch"); });
  report.identities.push_back(std::move(oracle).finish());
  report.notes.push_back(std::string("trilinear dictionary: ") + (map.is_identity() ? "identity" : "signed permutation") +
                         ", scale " + std::to_string(map.scale));
  report.identities.push_back(dictionary_check<T>(map, samples, seed, tolerance));
  report.append(trilinear_invariance_check(seed, samples, tolerance));
  return report;
}

}  // namespace sot
