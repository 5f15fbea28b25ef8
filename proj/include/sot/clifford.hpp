#pragma once

// Complex 16x16 representation of Cl(4,4).
//
// Gamma_mu = A_mu for mu = 0..3 and i A_mu for mu = 4..7, with
// A_mu = [[0, alpha_mu], [alpha_mu^dagger, 0]]. The alpha tables are data;
// the anticommutation sweep is what certifies them.

#include <sot/matrix.hpp>
#include <sot/report.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sot {

class NotGradeOneError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kVectorDim = 8;

/// Diagonal metric (+,+,+,+,-,-,-,-).
struct Metric {
  static constexpr std::array<int, 8> g = {1, 1, 1, 1, -1, -1, -1, -1};
  static constexpr int at(std::size_t mu, std::size_t nu) { return mu == nu ? g[mu] : 0; }
  static constexpr bool compact_plane(std::size_t mu, std::size_t nu) { return g[mu] * g[nu] > 0; }
};

inline void check_index(std::size_t mu) {
  if (mu >= kVectorDim) throw std::out_of_range("Clifford index " + std::to_string(mu) + " outside 0..7");
}

/// x_0 .. x_7 of a (4+4)-vector.
template <Scalar T>
struct Vector8 {
  std::array<T, 8> x{};

  Vector8() { x.fill(T(0)); }
  explicit Vector8(std::array<T, 8> c) : x(std::move(c)) {}

  static Vector8 basis(std::size_t mu) {
    check_index(mu);
    Vector8 v;
    v.x[mu] = T(1);
    return v;
  }

  const T& operator[](std::size_t i) const { return x[i]; }
  T& operator[](std::size_t i) { return x[i]; }

  friend Vector8 operator+(Vector8 a, const Vector8& b) {
    for (std::size_t i = 0; i < 8; ++i) a.x[i] += b.x[i];
    return a;
  }
  friend bool operator==(const Vector8&, const Vector8&) = default;
};

/// x0^2 + x1^2 + x2^2 + x3^2 - x4^2 - x5^2 - x6^2 - x7^2.
template <Scalar T>
T quadratic_form(const Vector8<T>& v) {
  T q(0);
  for (std::size_t i = 0; i < 8; ++i) q += T(Metric::g[i]) * v[i] * v[i];
  return q;
}

namespace detail {

enum class GaussianUnit { one, minus_one, i, minus_i };

struct AlphaEntry {
  std::size_t col;
  GaussianUnit value;
};

using AlphaTable = std::array<AlphaEntry, 8>;  // one nonzero per row

inline constexpr GaussianUnit P = GaussianUnit::one;
inline constexpr GaussianUnit M = GaussianUnit::minus_one;
inline constexpr GaussianUnit Pi = GaussianUnit::i;
inline constexpr GaussianUnit Mi = GaussianUnit::minus_i;

// clang-format off
inline constexpr std::array<AlphaTable, 8> kAlpha = {{
    {{{0, M}, {1, P}, {2, P}, {3, P}, {4, M}, {5, M}, {6, M}, {7, P}}},
    {{{0, Pi}, {1, Pi}, {2, Pi}, {3, Pi}, {4, Pi}, {5, Pi}, {6, Pi}, {7, Pi}}},
    {{{1, P}, {0, P}, {4, M}, {5, M}, {2, M}, {3, M}, {7, P}, {6, P}}},
    {{{1, Mi}, {0, Pi}, {4, Pi}, {5, Pi}, {2, Mi}, {3, Mi}, {7, Mi}, {6, Pi}}},
    {{{2, P}, {4, P}, {0, P}, {6, M}, {1, P}, {7, M}, {3, M}, {5, M}}},
    {{{2, Pi}, {4, Pi}, {0, Mi}, {6, Mi}, {1, Mi}, {7, Mi}, {3, Pi}, {5, Pi}}},
    {{{3, P}, {5, P}, {6, P}, {0, P}, {7, P}, {1, P}, {2, P}, {4, P}}},
    {{{3, Mi}, {5, Mi}, {6, Mi}, {0, Pi}, {7, Mi}, {1, Pi}, {2, Pi}, {4, Pi}}},
}};
// clang-format on

template <Scalar T>
Complex<T> gaussian(GaussianUnit g) {
  switch (g) {
    case GaussianUnit::one: return {T(1), T(0)};
    case GaussianUnit::minus_one: return {T(-1), T(0)};
    case GaussianUnit::i: return {T(0), T(1)};
    case GaussianUnit::minus_i: return {T(0), T(-1)};
  }
  return {};
}

template <Scalar T>
ComplexMatrix16<T> build_gamma(std::size_t mu);

}  // namespace detail

/// The 8x8 alpha_mu block; entries in {0, +-1, +-i}.
template <Scalar T = Rational>
ComplexMatrix8<T> alpha(std::size_t mu) {
  check_index(mu);
  ComplexMatrix8<T> m;
  for (std::size_t r = 0; r < 8; ++r) {
    const auto& e = detail::kAlpha[mu][r];
    m(r, e.col) = detail::gaussian<T>(e.value);
  }
  return m;
}

namespace detail {

template <Scalar T>
ComplexMatrix16<T> build_gamma(std::size_t mu) {
  const ComplexMatrix8<T> a = alpha<T>(mu);
  ComplexMatrix16<T> A = off_diagonal_blocks(a, a.adjoint());
  if (mu >= 4) A *= Complex<T>::i();
  return A;
}

/// 2 g_{mu nu} Id - (Gamma_mu Gamma_nu + Gamma_nu Gamma_mu), empty string if zero.
template <Scalar T>
std::string anticommutator_defect(const ComplexMatrix16<T>& gm, const ComplexMatrix16<T>& gn, std::size_t mu,
                                  std::size_t nu, double* worst) {
  const auto lhs = gm * gn + gn * gm;
  const auto rhs = ComplexMatrix16<T>::identity() * T(2 * Metric::at(mu, nu));
  const double d = max_abs_diff(lhs, rhs);
  if (worst) *worst = d;
  if (lhs == rhs) return {};
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c)
      if (!(lhs(r, c) == rhs(r, c))) {
        std::ostringstream os;
        os << "pair (" << mu << ',' << nu << ") entry (" << r << ',' << c << "): got " << lhs(r, c) << ", want "
           << rhs(r, c);
        return os.str();
      }
  return {};
}

}  // namespace detail

/// All eight Gamma matrices, built and certified once. Throws Error naming
/// the first failing pair if the alpha tables violate the Clifford relations.
template <Scalar T = Rational>
const std::array<ComplexMatrix16<T>, 8>& gammas() {
  static const std::array<ComplexMatrix16<T>, 8> table = [] {
    std::array<ComplexMatrix16<T>, 8> g;
    for (std::size_t mu = 0; mu < 8; ++mu) g[mu] = detail::build_gamma<T>(mu);
    if constexpr (is_exact_v<T>) {
      for (std::size_t mu = 0; mu < 8; ++mu)
        for (std::size_t nu = mu; nu < 8; ++nu)
          if (auto defect = detail::anticommutator_defect(g[mu], g[nu], mu, nu, nullptr); !defect.empty())
            throw Error("Clifford relations violated: " + defect);
    } else {
      gammas<Rational>();
    }
    return g;
  }();
  return table;
}

template <Scalar T = Rational>
const ComplexMatrix16<T>& gamma(std::size_t mu) {
  check_index(mu);
  return gammas<T>()[mu];
}

/// Gamma_mu Gamma_nu.
template <Scalar T = Rational>
ComplexMatrix16<T> bivector(std::size_t mu, std::size_t nu) {
  return gamma<T>(mu) * gamma<T>(nu);
}

/// Gamma_mu Gamma_nu + Gamma_nu Gamma_mu = 2 g_{mu nu} Id on all 64 ordered pairs.
template <Scalar T = Rational>
VerificationReport verify_clifford(double tolerance = 0.0) {
  VerificationReport report;
  report.suite = "clifford";
  report.mode = ScalarTraits<T>::mode;
  IdentitySweep sweep("Gamma_mu Gamma_nu + Gamma_nu Gamma_mu = 2 g_mu_nu Id", is_exact_v<T> ? 0.0 : tolerance);
  std::array<ComplexMatrix16<T>, 8> g;
  for (std::size_t mu = 0; mu < 8; ++mu) g[mu] = detail::build_gamma<T>(mu);
  for (std::size_t mu = 0; mu < 8; ++mu)
    for (std::size_t nu = 0; nu < 8; ++nu) {
      double worst = 0.0;
      const std::string defect = detail::anticommutator_defect(g[mu], g[nu], mu, nu, &worst);
      if constexpr (is_exact_v<T>)
        sweep.check(defect.empty(), [&] { return defect; });
      else
        sweep.measure(worst, [&] { return defect; });
    }
  report.identities.push_back(std::move(sweep).finish());
  return report;
}

/// Sum_beta x_beta Gamma_beta.
template <Scalar T>
ComplexMatrix16<T> vector_to_matrix(const Vector8<T>& v) {
  ComplexMatrix16<T> X;
  for (std::size_t b = 0; b < 8; ++b) {
    if (is_zero(v[b])) continue;
    const auto& G = gamma<T>(b);
    for (std::size_t r = 0; r < 16; ++r)
      for (std::size_t c = 0; c < 16; ++c)
        if (!G(r, c).is_zero()) X(r, c) += G(r, c) * v[b];
  }
  return X;
}

/// Inverse of vector_to_matrix via x_mu = g_mu_mu tr(Gamma_mu X) / 16.
/// Throws NotGradeOneError when X is not in the span of the Gammas (exactly
/// in rational mode, beyond `tolerance` times the largest entry of X in float
/// mode).
template <Scalar T>
Vector8<T> matrix_to_vector(const ComplexMatrix16<T>& X, double tolerance = 1e-10) {
  Vector8<T> v;
  double imag_part = 0.0;
  for (std::size_t mu = 0; mu < 8; ++mu) {
    const Complex<T> tr = (gamma<T>(mu) * X).trace();
    v[mu] = tr.re * T(Metric::g[mu]) / T(16);
    imag_part = std::max(imag_part, std::abs(to_double(tr.im)) / 16.0);
    if constexpr (is_exact_v<T>) {
      if (!tr.is_real()) throw NotGradeOneError("matrix has a non-real Gamma coefficient");
    }
  }
  const double defect = max_abs_diff(X, vector_to_matrix(v));
  if constexpr (is_exact_v<T>) {
    if (defect != 0.0 || !(X == vector_to_matrix(v))) throw NotGradeOneError("matrix is not a grade-1 element");
  } else {
    const double scale = std::max(1.0, max_abs_diff(X, ComplexMatrix16<T>{}));
    if (defect > tolerance * scale || imag_part > tolerance * scale)
      throw NotGradeOneError("matrix is not a grade-1 element (residual " + std::to_string(std::max(defect, imag_part)) +
                             ")");
  }
  return v;
}

/// B = -Gamma_1 Gamma_3 Gamma_5 Gamma_7. Real, squares to Id, and
/// X^T = B X B for every grade-1 X.
template <Scalar T = Rational>
const ComplexMatrix16<T>& b_matrix() {
  static const ComplexMatrix16<T> B = -(gamma<T>(1) * gamma<T>(3) * gamma<T>(5) * gamma<T>(7));
  return B;
}

}  // namespace sot
