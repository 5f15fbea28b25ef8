#pragma once

// Split-octonion arithmetic over the basis {1, j1, j2, j3, I, J1, J2, J3}.
//
// Coefficient k of an octonion lines up with component x_k of an
// (4+4)-vector, so the slot order below is load-bearing.

#include <sot/scalar.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sot {

enum class BasisUnit : std::size_t { e = 0, j1, j2, j3, I, J1, J2, J3 };

inline constexpr std::size_t kOctonionDim = 8;

inline constexpr std::array<BasisUnit, 8> kAllUnits = {BasisUnit::e,  BasisUnit::j1, BasisUnit::j2, BasisUnit::j3,
                                                       BasisUnit::I,  BasisUnit::J1, BasisUnit::J2, BasisUnit::J3};

/// The seven hyper-complex units.
inline constexpr std::array<BasisUnit, 7> kImaginaryUnits = {BasisUnit::j1, BasisUnit::j2, BasisUnit::j3, BasisUnit::I,
                                                             BasisUnit::J1, BasisUnit::J2, BasisUnit::J3};

constexpr std::size_t index(BasisUnit u) { return static_cast<std::size_t>(u); }

constexpr BasisUnit unit_at(std::size_t i) { return static_cast<BasisUnit>(i); }

/// jn for n = 1..3.
constexpr BasisUnit small_j(int n) { return unit_at(static_cast<std::size_t>(n)); }
/// Jn for n = 1..3.
constexpr BasisUnit big_J(int n) { return unit_at(static_cast<std::size_t>(4 + n)); }

constexpr std::string_view name(BasisUnit u) {
  constexpr std::array<std::string_view, 8> names = {"1", "j1", "j2", "j3", "I", "J1", "J2", "J3"};
  return names[index(u)];
}

inline std::optional<BasisUnit> parse_unit(std::string_view s) {
  for (BasisUnit u : kAllUnits)
    if (name(u) == s) return u;
  return std::nullopt;
}

/// Totally antisymmetric symbol on {1,2,3}, eps(1,2,3) = +1.
constexpr int epsilon(int n, int m, int k) {
  if (n == m || m == k || n == k) return 0;
  return ((m - n + 3) % 3 == 1) ? 1 : -1;
}

constexpr int delta(int n, int m) { return n == m ? 1 : 0; }

/// Product of two basis units: sign * unit.
struct SignedUnit {
  BasisUnit unit = BasisUnit::e;
  int sign = 1;

  friend constexpr bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

/// Unit-by-unit multiplication table.
class StructureConstants {
 public:
  using Table = std::array<std::array<SignedUnit, 8>, 8>;

  constexpr StructureConstants() = default;
  constexpr explicit StructureConstants(const Table& t) : table_(t) {}

  constexpr const SignedUnit& operator()(BasisUnit a, BasisUnit b) const { return table_[index(a)][index(b)]; }
  constexpr SignedUnit& operator()(BasisUnit a, BasisUnit b) { return table_[index(a)][index(b)]; }
  constexpr const Table& table() const { return table_; }

  friend constexpr bool operator==(const StructureConstants&, const StructureConstants&) = default;

  /// Table assembled from the epsilon/delta relations
  ///   JmJn = eps_mnk jk + d_mn      JnI = -IJn = jn
  ///   jmjn = eps_mnk jk - d_mn      jnI = -Ijn = Jn
  ///   jmJn = -eps_mnk Jk - d_mn I   I^2 = 1
  /// with JnJm, Jn jm and friends filled in by anti-commutation.
  static StructureConstants from_relations();

 private:
  Table table_{};
};

namespace detail {

using U = BasisUnit;
constexpr SignedUnit p(U u) { return {u, 1}; }
constexpr SignedUnit m(U u) { return {u, -1}; }

// Rows: left factor, columns: right factor, both in canonical order.
inline constexpr StructureConstants::Table kProductTable = {{
    {p(U::e), p(U::j1), p(U::j2), p(U::j3), p(U::I), p(U::J1), p(U::J2), p(U::J3)},
    {p(U::j1), m(U::e), p(U::j3), m(U::j2), p(U::J1), m(U::I), m(U::J3), p(U::J2)},
    {p(U::j2), m(U::j3), m(U::e), p(U::j1), p(U::J2), p(U::J3), m(U::I), m(U::J1)},
    {p(U::j3), p(U::j2), m(U::j1), m(U::e), p(U::J3), m(U::J2), p(U::J1), m(U::I)},
    {p(U::I), m(U::J1), m(U::J2), m(U::J3), p(U::e), m(U::j1), m(U::j2), m(U::j3)},
    {p(U::J1), p(U::I), m(U::J3), p(U::J2), p(U::j1), p(U::e), p(U::j3), m(U::j2)},
    {p(U::J2), p(U::J3), p(U::I), m(U::J1), p(U::j2), m(U::j3), p(U::e), p(U::j1)},
    {p(U::J3), m(U::J2), p(U::J1), p(U::I), p(U::j3), p(U::j2), m(U::j1), p(U::e)},
}};

}  // namespace detail

inline StructureConstants StructureConstants::from_relations() {
  StructureConstants sc;
  for (BasisUnit u : kAllUnits) {
    sc(BasisUnit::e, u) = {u, 1};
    sc(u, BasisUnit::e) = {u, 1};
  }
  sc(BasisUnit::I, BasisUnit::I) = {BasisUnit::e, 1};
  for (int m = 1; m <= 3; ++m) {
    sc(big_J(m), BasisUnit::I) = {small_j(m), 1};
    sc(BasisUnit::I, big_J(m)) = {small_j(m), -1};
    sc(small_j(m), BasisUnit::I) = {big_J(m), 1};
    sc(BasisUnit::I, small_j(m)) = {big_J(m), -1};
    for (int n = 1; n <= 3; ++n) {
      if (m == n) {
        sc(big_J(m), big_J(n)) = {BasisUnit::e, 1};
        sc(small_j(m), small_j(n)) = {BasisUnit::e, -1};
        sc(small_j(m), big_J(n)) = {BasisUnit::I, -1};
        sc(big_J(n), small_j(m)) = {BasisUnit::I, 1};
        continue;
      }
      const int k = 6 - m - n;
      const int e = epsilon(m, n, k);
      sc(big_J(m), big_J(n)) = {small_j(k), e};
      sc(small_j(m), small_j(n)) = {small_j(k), e};
      sc(small_j(m), big_J(n)) = {big_J(k), -e};
      sc(big_J(n), small_j(m)) = {big_J(k), e};
    }
  }
  return sc;
}

/// The hard-coded table, checked once against the relation-built table.
inline const StructureConstants& structure_constants() {
  static const StructureConstants table = [] {
    StructureConstants literal(detail::kProductTable);
    if (literal != StructureConstants::from_relations())
      throw Error("split-octonion product table disagrees with its defining relations");
    return literal;
  }();
  return table;
}

/// w + lambda^n Jn + x^n jn + t I, stored in canonical slot order.
template <Scalar T>
class SplitOctonion {
 public:
  using Coefficients = std::array<T, 8>;

  SplitOctonion() { c_.fill(T(0)); }
  explicit SplitOctonion(Coefficients c) : c_(std::move(c)) {}

  static SplitOctonion scalar(T w) {
    SplitOctonion s;
    s.c_[0] = std::move(w);
    return s;
  }
  static SplitOctonion unit(BasisUnit u, T coeff = T(1)) {
    SplitOctonion s;
    s.c_[index(u)] = std::move(coeff);
    return s;
  }

  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }
  const T& operator[](BasisUnit u) const { return c_[index(u)]; }
  T& operator[](BasisUnit u) { return c_[index(u)]; }
  const Coefficients& coefficients() const { return c_; }

  const T& w() const { return c_[0]; }
  const T& x(int n) const { return c_[index(small_j(n))]; }
  const T& t() const { return c_[index(BasisUnit::I)]; }
  const T& lambda(int n) const { return c_[index(big_J(n))]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!sot::is_zero(v)) return false;
    return true;
  }

  /// True when every hyper-complex coefficient vanishes.
  bool is_scalar() const {
    for (std::size_t i = 1; i < 8; ++i)
      if (!sot::is_zero(c_[i])) return false;
    return true;
  }

  SplitOctonion operator-() const {
    SplitOctonion s = *this;
    for (auto& v : s.c_) v = -v;
    return s;
  }
  SplitOctonion& operator+=(const SplitOctonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
    return *this;
  }
  SplitOctonion& operator-=(const SplitOctonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  SplitOctonion& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend SplitOctonion operator+(SplitOctonion a, const SplitOctonion& b) { return a += b; }
  friend SplitOctonion operator-(SplitOctonion a, const SplitOctonion& b) { return a -= b; }
  friend SplitOctonion operator*(SplitOctonion a, const T& s) { return a *= s; }
  friend SplitOctonion operator*(const T& s, SplitOctonion a) { return a *= s; }
  friend SplitOctonion operator*(const SplitOctonion& a, const SplitOctonion& b) { return mul(a, b); }
  friend bool operator==(const SplitOctonion&, const SplitOctonion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SplitOctonion& s) {
    bool any = false;
    for (std::size_t i = 0; i < 8; ++i) {
      if (sot::is_zero(s.c_[i])) continue;
      if (any) os << " + ";
      os << to_string(s.c_[i]);
      if (i != 0) os << '*' << name(unit_at(i));
      any = true;
    }
    if (!any) os << '0';
    return os;
  }

 private:
  Coefficients c_;
};

/// Bilinear extension of the structure constants.
template <Scalar T>
SplitOctonion<T> mul(const SplitOctonion<T>& a, const SplitOctonion<T>& b) {
  const auto& sc = structure_constants();
  SplitOctonion<T> out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (is_zero(b[j])) continue;
      const SignedUnit& p = sc(unit_at(i), unit_at(j));
      T term = a[i] * b[j];
      if (p.sign > 0)
        out[p.unit] += term;
      else
        out[p.unit] -= term;
    }
  }
  return out;
}

/// Negates the seven hyper-complex coefficients.
template <Scalar T>
SplitOctonion<T> conj(const SplitOctonion<T>& s) {
  SplitOctonion<T> out = -s;
  out[0] = s[0];
  return out;
}

/// w^2 - lambda^2 + x^2 - t^2. Zero or negative values are legitimate: the
/// algebra has zero divisors.
template <Scalar T>
T norm_sq(const SplitOctonion<T>& s) {
  T n = s.w() * s.w() - s.t() * s.t();
  for (int k = 1; k <= 3; ++k) n += s.x(k) * s.x(k) - s.lambda(k) * s.lambda(k);
  return n;
}

/// (conj(a) b + conj(b) a) / 2, always a pure scalar.
template <Scalar T>
T inner(const SplitOctonion<T>& a, const SplitOctonion<T>& b) {
  SplitOctonion<T> s = mul(conj(a), b) + mul(conj(b), a);
  return s[0] / T(2);
}

/// (xy - yx) / 2.
template <Scalar T>
SplitOctonion<T> commutator(const SplitOctonion<T>& x, const SplitOctonion<T>& y) {
  return (mul(x, y) - mul(y, x)) * (T(1) / T(2));
}

/// ((xy)z - x(yz)) / 2.
template <Scalar T>
SplitOctonion<T> associator(const SplitOctonion<T>& x, const SplitOctonion<T>& y, const SplitOctonion<T>& z) {
  return (mul(mul(x, y), z) - mul(x, mul(y, z))) * (T(1) / T(2));
}

/// ((xy)z + (yz)x + (zx)y) / 3, with plain octonion products.
template <Scalar T>
SplitOctonion<T> jacobiator(const SplitOctonion<T>& x, const SplitOctonion<T>& y, const SplitOctonion<T>& z) {
  return (mul(mul(x, y), z) + mul(mul(y, z), x) + mul(mul(z, x), y)) * (T(1) / T(3));
}

/// t^2 + lambda.lambda > x.x (strict).
template <Scalar T>
bool is_timelike_vector_part(const SplitOctonion<T>& s) {
  T timelike = s.t() * s.t();
  T spacelike(0);
  for (int k = 1; k <= 3; ++k) {
    timelike += s.lambda(k) * s.lambda(k);
    spacelike += s.x(k) * s.x(k);
  }
  return timelike > spacelike;
}

/// Single basis unit in its natural scalar type.
template <Scalar T>
SplitOctonion<T> unit(BasisUnit u) {
  return SplitOctonion<T>::unit(u);
}

/// Coefficient-wise largest |a - b|.
template <Scalar T>
double max_abs_diff(const SplitOctonion<T>& a, const SplitOctonion<T>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, residual(a[i], b[i]));
  return worst;
}

}  // namespace sot
