#pragma once

// Chiral spinors of Cl(4,4).
//
// A Spinor16 holds real coordinates (phi_0..phi_7, psi_0..psi_7). The Gamma
// matrices act on the complex column
//
//   xi = M eta / sqrt(2),
//
// where M is a fixed Gaussian-integer matrix with M M^dagger = 2 Id. Only the
// unscaled M eta is ever materialized; every bilinear in xi carries exactly
// one factor 1/2, so all spinor arithmetic stays rational.

#include <sot/clifford.hpp>
#include <sot/random.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sot {

class ChiralityError : public Error {
 public:
  using Error::Error;
};

template <Scalar T>
struct Spinor16 {
  std::array<T, 8> phi{};
  std::array<T, 8> psi{};

  Spinor16() {
    phi.fill(T(0));
    psi.fill(T(0));
  }
  Spinor16(std::array<T, 8> p, std::array<T, 8> q) : phi(std::move(p)), psi(std::move(q)) {}

  /// Pure phi-chirality spinor.
  static Spinor16 left(std::array<T, 8> p) {
    Spinor16 s;
    s.phi = std::move(p);
    return s;
  }
  /// Pure psi-chirality spinor.
  static Spinor16 right(std::array<T, 8> q) {
    Spinor16 s;
    s.psi = std::move(q);
    return s;
  }
  static Spinor16 from_column(const std::array<T, 16>& c) {
    Spinor16 s;
    for (std::size_t i = 0; i < 8; ++i) {
      s.phi[i] = c[i];
      s.psi[i] = c[i + 8];
    }
    return s;
  }
  /// phi block above psi block.
  std::array<T, 16> column() const {
    std::array<T, 16> c;
    for (std::size_t i = 0; i < 8; ++i) {
      c[i] = phi[i];
      c[i + 8] = psi[i];
    }
    return c;
  }

  bool is_left() const {
    for (const auto& v : psi)
      if (!is_zero(v)) return false;
    return true;
  }
  bool is_right() const {
    for (const auto& v : phi)
      if (!is_zero(v)) return false;
    return true;
  }

  friend Spinor16 operator+(Spinor16 a, const Spinor16& b) {
    for (std::size_t i = 0; i < 8; ++i) {
      a.phi[i] += b.phi[i];
      a.psi[i] += b.psi[i];
    }
    return a;
  }
  friend Spinor16 operator*(const T& s, Spinor16 a) {
    for (std::size_t i = 0; i < 8; ++i) {
      a.phi[i] *= s;
      a.psi[i] *= s;
    }
    return a;
  }
  friend bool operator==(const Spinor16&, const Spinor16&) = default;
};

namespace detail {

// Row r of M: sign_re * eta[re] + i * sign_im * eta[im]; indices are local
// to the row's chiral block.
struct XiRow {
  std::size_t re;
  int sign_re;
  std::size_t im;
  int sign_im;
};

// clang-format off
inline constexpr std::array<XiRow, 16> kXiRows = {{
    {2, -1, 3, +1}, {0, +1, 1, -1}, {7, -1, 6, -1}, {5, -1, 4, +1},
    {5, -1, 4, -1}, {7, +1, 6, -1}, {0, -1, 1, -1}, {2, -1, 3, -1},
    {2, +1, 3, -1}, {0, -1, 1, -1}, {7, -1, 6, -1}, {5, -1, 4, +1},
    {5, +1, 4, +1}, {7, -1, 6, +1}, {0, -1, 1, +1}, {2, -1, 3, -1},
}};
// clang-format on

}  // namespace detail

/// The Gaussian-integer matrix M; the basis change itself is M / sqrt(2).
template <Scalar T = Rational>
const ComplexMatrix16<T>& xi_matrix() {
  static const ComplexMatrix16<T> M = [] {
    ComplexMatrix16<T> m;
    for (std::size_t r = 0; r < 16; ++r) {
      const auto& row = detail::kXiRows[r];
      const std::size_t off = r < 8 ? 0 : 8;
      m(r, off + row.re) += Complex<T>(T(row.sign_re), T(0));
      m(r, off + row.im) += Complex<T>(T(0), T(row.sign_im));
    }
    return m;
  }();
  return M;
}

/// Components of xi = M eta / sqrt(2). `unscaled` holds M eta.
template <Scalar T>
struct XiSpinor {
  std::array<Complex<T>, 16> unscaled{};

  /// The true complex components, with the 1/sqrt(2) applied.
  std::array<Complex<double>, 16> values() const {
    std::array<Complex<double>, 16> v;
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 16; ++i) v[i] = {to_double(unscaled[i].re) * s, to_double(unscaled[i].im) * s};
    return v;
  }
};

template <Scalar T>
XiSpinor<T> xi_basis_change(const Spinor16<T>& eta) {
  const auto col = eta.column();
  std::array<Complex<T>, 16> in;
  for (std::size_t i = 0; i < 16; ++i) in[i] = Complex<T>(col[i]);
  return {xi_matrix<T>().apply(in)};
}

/// Inverse basis change: eta = M^dagger (M eta) / 2. Throws if the result
/// has an imaginary part, i.e. `xi` did not come from a real spinor.
template <Scalar T>
Spinor16<T> xi_inverse(const XiSpinor<T>& xi) {
  const auto back = xi_matrix<T>().adjoint().apply(xi.unscaled);
  std::array<T, 16> c;
  for (std::size_t i = 0; i < 16; ++i) {
    if constexpr (is_exact_v<T>) {
      if (!back[i].is_real()) throw Error("xi components do not describe a real spinor");
    }
    c[i] = back[i].re / T(2);
  }
  return Spinor16<T>::from_column(c);
}

/// Candidate ways of evaluating the spinor quadratic form in the xi basis.
enum class XiConvention {
  transpose,          // xi^T B xi
  adjoint,            // xi^dagger B xi
  transpose_rebased,  // xi^T (S^-1 B S) xi, S = M / sqrt(2)
  adjoint_rebased,    // xi^dagger (S^-1 B S) xi
};

inline constexpr std::array<XiConvention, 4> kXiConventions = {
    XiConvention::transpose, XiConvention::adjoint, XiConvention::transpose_rebased, XiConvention::adjoint_rebased};

inline std::string to_string(XiConvention c) {
  switch (c) {
    case XiConvention::transpose: return "xi^T B xi";
    case XiConvention::adjoint: return "xi^dagger B xi";
    case XiConvention::transpose_rebased: return "xi^T (S^-1 B S) xi";
    case XiConvention::adjoint_rebased: return "xi^dagger (S^-1 B S) xi";
  }
  return "?";
}

namespace detail {

/// S^-1 B S with S = M / sqrt(2).
template <Scalar T>
const ComplexMatrix16<T>& rebased_b() {
  static const ComplexMatrix16<T> form = xi_matrix<T>().adjoint() * b_matrix<T>() * xi_matrix<T>() * T(Rational(1, 2));
  return form;
}

}  // namespace detail

/// Quadratic form of `eta` under convention `c`. Complex in general.
template <Scalar T>
Complex<T> xi_quadratic(const Spinor16<T>& eta, XiConvention c) {
  const bool rebased = c == XiConvention::transpose_rebased || c == XiConvention::adjoint_rebased;
  const ComplexMatrix16<T>& form = rebased ? detail::rebased_b<T>() : b_matrix<T>();
  const auto xi = xi_basis_change(eta).unscaled;
  const auto Bxi = form.apply(xi);
  const bool dagger = c == XiConvention::adjoint || c == XiConvention::adjoint_rebased;
  Complex<T> acc;
  for (std::size_t i = 0; i < 16; ++i) acc += (dagger ? xi[i].conj() : xi[i]) * Bxi[i];
  return acc * T(Rational(1, 2));
}

/// phi0^2 + .. + phi3^2 - phi4^2 - .. - phi7^2 plus the same in psi.
template <Scalar T>
T split_spinor_form(const Spinor16<T>& eta) {
  T q(0);
  for (std::size_t i = 0; i < 8; ++i) q += T(Metric::g[i]) * (eta.phi[i] * eta.phi[i] + eta.psi[i] * eta.psi[i]);
  return q;
}

/// Outcome of the convention oracle.
struct XiConventionResult {
  std::optional<XiConvention> pinned;
  std::array<std::size_t, 4> failures{};  // per candidate, in kXiConventions order
  std::size_t samples = 0;
};

/// Tries every candidate convention on the 16 basis spinors, their pairwise
/// sums, and `samples` random integer spinors; pins the unique candidate that
/// reproduces split_spinor_form exactly.
inline XiConventionResult pin_xi_convention(std::size_t samples = 100, std::uint64_t seed = kDefaultSeed) {
  std::vector<Spinor16<Rational>> probes;
  for (std::size_t i = 0; i < 16; ++i) {
    std::array<Rational, 16> c;
    c.fill(Rational(0));
    c[i] = 1;
    probes.push_back(Spinor16<Rational>::from_column(c));
    for (std::size_t j = i + 1; j < 16; ++j) {
      c[j] = 1;
      probes.push_back(Spinor16<Rational>::from_column(c));
      c[j] = 0;
    }
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto ints = random_components<16>(rng);
    std::array<Rational, 16> c;
    for (std::size_t i = 0; i < 16; ++i) c[i] = ints[i];
    probes.push_back(Spinor16<Rational>::from_column(c));
  }

  XiConventionResult result;
  result.samples = probes.size();
  std::size_t passing = 0;
  for (std::size_t k = 0; k < kXiConventions.size(); ++k) {
    for (const auto& eta : probes)
      if (!(xi_quadratic(eta, kXiConventions[k]) == Complex<Rational>(split_spinor_form(eta)))) ++result.failures[k];
    if (result.failures[k] == 0) {
      ++passing;
      if (!result.pinned) result.pinned = kXiConventions[k];
    }
  }
  if (passing != 1) result.pinned.reset();
  return result;
}

/// The convention every spinor bilinear in this library uses. Resolved once
/// by the oracle; throws if the oracle cannot pin a unique candidate.
inline XiConvention pinned_xi_convention() {
  static const XiConvention c = [] {
    const auto r = pin_xi_convention();
    if (!r.pinned) throw Error("no unique xi-basis convention reproduces the split spinor form");
    return *r.pinned;
  }();
  return c;
}

/// eta^T B eta evaluated in the xi basis under the pinned convention.
template <Scalar T>
T spinor_invariant(const Spinor16<T>& eta) {
  const Complex<T> q = xi_quadratic(eta, pinned_xi_convention());
  return q.re;
}

/// The real 16x16 action on (phi, psi) coordinates of a Gamma-basis
/// operator L: M^dagger L M / 2.
template <Scalar T>
ComplexMatrix16<T> to_spinor_coordinates(const ComplexMatrix16<T>& L) {
  const auto& M = xi_matrix<T>();
  return M.adjoint() * L * M * T(Rational(1, 2));
}

/// Applies a real-coordinate operator to a spinor. Imaginary residue must
/// vanish (exactly, or within `tolerance` in float mode).
template <Scalar T>
Spinor16<T> apply_real(const ComplexMatrix16<T>& R, const Spinor16<T>& eta, double tolerance = 1e-9) {
  const auto col = eta.column();
  std::array<Complex<T>, 16> in;
  for (std::size_t i = 0; i < 16; ++i) in[i] = Complex<T>(col[i]);
  const auto out = R.apply(in);
  std::array<T, 16> re;
  for (std::size_t i = 0; i < 16; ++i) {
    if constexpr (is_exact_v<T>) {
      if (!out[i].is_real()) throw Error("spinor operator produced a complex component");
    } else {
      if (std::abs(out[i].im) > tolerance * std::max(1.0, std::abs(out[i].re)))
        throw Error("spinor operator produced a complex component");
    }
    re[i] = out[i].re;
  }
  return Spinor16<T>::from_column(re);
}

}  // namespace sot
