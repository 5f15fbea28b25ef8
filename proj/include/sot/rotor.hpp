#pragma once

// Plane rotors L_mu_nu(theta) = exp(-theta/2 Gamma_mu Gamma_nu) in closed
// form, and their action on vectors, chiral spinors and the trilinear form.
//
// (Gamma_mu Gamma_nu)^2 = -g_mu_mu g_nu_nu Id, so the exponential is
//   cos(theta/2) Id - sin(theta/2) Gamma_mu Gamma_nu     compact plane
//   cosh(theta/2) Id - sinh(theta/2) Gamma_mu Gamma_nu   boost plane.

#include <sot/spinor.hpp>

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sot {

template <Scalar T>
class SpinTransform;

/// A single-plane rotor. `even` and `odd` are the half-angle pair
/// (cos, sin) or (cosh, sinh); `theta` is kept when the rotor was built from
/// an angle.
template <Scalar T>
struct Rotor {
  std::size_t mu = 0;
  std::size_t nu = 1;
  T even{1};
  T odd{0};
  std::optional<double> theta;

  bool compact() const { return Metric::compact_plane(mu, nu); }

  ComplexMatrix16<T> matrix() const {
    return ComplexMatrix16<T>::identity() * even - bivector<T>(mu, nu) * odd;
  }

  /// L_mu_nu(theta)^-1 = L_nu_mu(theta).
  Rotor inverse() const { return Rotor{nu, mu, even, odd, theta}; }

  SpinTransform<T> transform() const;
};

/// Rotor from an angle (compact plane) or rapidity (boost plane).
inline Rotor<double> rotor(std::size_t mu, std::size_t nu, double theta) {
  check_index(mu);
  check_index(nu);
  if (mu == nu) throw Error("rotor plane needs two distinct indices, got (" + std::to_string(mu) + "," +
                            std::to_string(nu) + ")");
  const double h = theta / 2;
  if (Metric::compact_plane(mu, nu)) return {mu, nu, std::cos(h), std::sin(h), theta};
  return {mu, nu, std::cosh(h), std::sinh(h), theta};
}

/// Rotor from an explicit half-angle pair. The pair must satisfy
/// even^2 + odd^2 = 1 (compact) or even^2 - odd^2 = 1 (boost); exactly in
/// rational mode, to 1e-12 in float mode.
template <Scalar T>
Rotor<T> rotor_from_half_angle(std::size_t mu, std::size_t nu, const T& even, const T& odd) {
  check_index(mu);
  check_index(nu);
  if (mu == nu) throw Error("rotor plane needs two distinct indices");
  const T norm = Metric::compact_plane(mu, nu) ? T(even * even + odd * odd) : T(even * even - odd * odd);
  if (residual(norm, T(1)) > (is_exact_v<T> ? 0.0 : 1e-12))
    throw Error("half-angle pair does not lie on the unit " +
                std::string(Metric::compact_plane(mu, nu) ? "circle" : "hyperbola"));
  return {mu, nu, even, odd, std::nullopt};
}

/// A spin transformation L together with L^-1; words of rotors compose here.
template <Scalar T>
class SpinTransform {
 public:
  SpinTransform() : m_(ComplexMatrix16<T>::identity()), inv_(ComplexMatrix16<T>::identity()) {}
  SpinTransform(ComplexMatrix16<T> m, ComplexMatrix16<T> inv) : m_(std::move(m)), inv_(std::move(inv)) {}

  const ComplexMatrix16<T>& matrix() const { return m_; }
  const ComplexMatrix16<T>& inverse_matrix() const { return inv_; }
  SpinTransform inverse() const { return {inv_, m_}; }

  /// (a * b) acts as b first, then a.
  friend SpinTransform operator*(const SpinTransform& a, const SpinTransform& b) {
    return {a.m_ * b.m_, b.inv_ * a.inv_};
  }

 private:
  ComplexMatrix16<T> m_;
  ComplexMatrix16<T> inv_;
};

template <Scalar T>
SpinTransform<T> Rotor<T>::transform() const {
  return {matrix(), inverse().matrix()};
}

/// Product r[0] r[1] ... r[n-1].
template <Scalar T>
SpinTransform<T> compose(const std::vector<Rotor<T>>& word) {
  SpinTransform<T> out;
  for (const auto& r : word) out = out * r.transform();
  return out;
}

/// X' = L X L^-1, read back as a vector.
template <Scalar T>
Vector8<T> rotate_vector(const Vector8<T>& x, const SpinTransform<T>& L) {
  return matrix_to_vector(L.matrix() * vector_to_matrix(x) * L.inverse_matrix());
}

template <Scalar T>
Vector8<T> rotate_vector(const Vector8<T>& x, const Rotor<T>& r) {
  return rotate_vector(x, r.transform());
}

/// eta' = L eta in real chiral coordinates. The two chiral blocks are
/// transformed separately, so wrong-block components stay exactly zero.
template <Scalar T>
Spinor16<T> rotate_spinor(const Spinor16<T>& eta, const SpinTransform<T>& L) {
  return apply_real(to_spinor_coordinates(L.matrix()), eta);
}

template <Scalar T>
Spinor16<T> rotate_spinor(const Spinor16<T>& eta, const Rotor<T>& r) {
  return rotate_spinor(eta, r.transform());
}

/// phi^T B X psi with phi, psi taken through the xi basis. phi must be pure
/// left-chirality and psi pure right-chirality.
template <Scalar T>
T trilinear_matrix(const Spinor16<T>& phi, const Vector8<T>& x, const Spinor16<T>& psi) {
  if (!phi.is_left()) throw ChiralityError("first spinor has non-zero psi components");
  if (!psi.is_right()) throw ChiralityError("second spinor has non-zero phi components");
  const auto a = xi_basis_change(phi).unscaled;
  const auto b = xi_basis_change(psi).unscaled;
  const auto BXb = (b_matrix<T>() * vector_to_matrix(x)).apply(b);
  Complex<T> acc;
  for (std::size_t i = 0; i < 16; ++i) acc += a[i] * BXb[i];
  acc *= T(Rational(1, 2));
  if constexpr (is_exact_v<T>) {
    if (!acc.is_real()) throw Error("trilinear form came out complex");
  }
  return acc.re;
}

}  // namespace sot
