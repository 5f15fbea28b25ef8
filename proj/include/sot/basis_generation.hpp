#pragma once

// Rebuilds the split-octonion multiplication table from the three
// vector-like units Jn alone.
//
// The Jn need a concrete home that does not already know the table, so they
// are realized as Zorn vector matrices
//
//   [ a  u ]
//   [ v  b ]     a, b scalars, u, v in R^3,
//
// whose product is an independent model of the split octonions. jn and I
// are then derived exactly as jn = eps_nmk Jm Jk / 2 and I = -J(J1,J2,J3).

#include <sot/octonion.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sot {

class ConstructionError : public Error {
 public:
  using Error::Error;
};

template <Scalar T>
struct ZornMatrix {
  using Vec3 = std::array<T, 3>;

  T a{0};
  Vec3 u{T(0), T(0), T(0)};
  Vec3 v{T(0), T(0), T(0)};
  T b{0};

  static ZornMatrix one() { return {T(1), {}, {}, T(1)}; }

  friend bool operator==(const ZornMatrix&, const ZornMatrix&) = default;

  ZornMatrix operator-() const { return *this * T(-1); }

  friend ZornMatrix operator+(const ZornMatrix& x, const ZornMatrix& y) {
    ZornMatrix out{x.a + y.a, {}, {}, x.b + y.b};
    for (std::size_t i = 0; i < 3; ++i) {
      out.u[i] = x.u[i] + y.u[i];
      out.v[i] = x.v[i] + y.v[i];
    }
    return out;
  }

  friend ZornMatrix operator*(const ZornMatrix& x, const T& s) {
    ZornMatrix out{x.a * s, {}, {}, x.b * s};
    for (std::size_t i = 0; i < 3; ++i) {
      out.u[i] = x.u[i] * s;
      out.v[i] = x.v[i] * s;
    }
    return out;
  }

  // [a u; v b][c w; x d] = [ac + u.x,  aw + du - v^x ; cv + bx + u^w,  bd + v.w]
  friend ZornMatrix operator*(const ZornMatrix& l, const ZornMatrix& r) {
    auto dot = [](const Vec3& p, const Vec3& q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; };
    auto cross = [](const Vec3& p, const Vec3& q) {
      return Vec3{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
    };
    const Vec3 vx = cross(l.v, r.v);
    const Vec3 uw = cross(l.u, r.u);
    ZornMatrix out{l.a * r.a + dot(l.u, r.v), {}, {}, l.b * r.b + dot(l.v, r.u)};
    for (std::size_t i = 0; i < 3; ++i) {
      out.u[i] = l.a * r.u[i] + r.b * l.u[i] - vx[i];
      out.v[i] = r.a * l.v[i] + l.b * r.v[i] + uw[i];
    }
    return out;
  }
};

/// Builds the structure constants from J1, J2, J3 by breadth-first closure.
/// Throws ConstructionError if the closure does not land on exactly eight
/// units up to sign, or if some product is not +/- one of them.
inline StructureConstants generate_basis_from_J() {
  using Z = ZornMatrix<Rational>;
  const Z one = Z::one();
  std::array<Z, 3> J;
  for (std::size_t n = 0; n < 3; ++n) {
    J[n].u[n] = Rational(1);
    J[n].v[n] = Rational(1);
  }

  for (std::size_t m = 0; m < 3; ++m) {
    if (!(J[m] * J[m] == one)) throw ConstructionError("generator J" + std::to_string(m + 1) + " does not square to 1");
    for (std::size_t n = m + 1; n < 3; ++n)
      if (!(J[m] * J[n] == -(J[n] * J[m])))
        throw ConstructionError("generators J" + std::to_string(m + 1) + ", J" + std::to_string(n + 1) +
                                " do not anti-commute");
  }

  // Index of +/- x among `set`, with its sign.
  auto locate = [](const std::vector<Z>& set, const Z& x) -> std::optional<SignedUnit> {
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (set[k] == x) return SignedUnit{unit_at(k), 1};
      if (set[k] == -x) return SignedUnit{unit_at(k), -1};
    }
    return std::nullopt;
  };

  std::vector<Z> closure = {one, J[0], J[1], J[2]};
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = closure.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        const Z p = closure[i] * closure[j];
        if (locate(closure, p)) continue;
        const Z sq = p * p;
        if (!(sq == one) && !(sq == -one)) throw ConstructionError("product falls outside +/- (basis unit)");
        closure.push_back(p);
        grew = true;
        if (closure.size() > kOctonionDim)
          throw ConstructionError("closure did not terminate in " + std::to_string(kOctonionDim) + " units");
      }
  }
  if (closure.size() != kOctonionDim)
    throw ConstructionError("closure produced " + std::to_string(closure.size()) + " units instead of 8");

  // jn = eps_nmk Jm Jk / 2,  I = -J(J1, J2, J3).
  const Rational half(1, 2), third(1, 3);
  std::array<Z, 3> j;
  for (int n = 1; n <= 3; ++n) {
    Z acc = one * Rational(0);
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k)
        if (const int e = epsilon(n, m, k); e != 0) acc = acc + J[m - 1] * J[k - 1] * Rational(e);
    j[n - 1] = acc * half;
  }
  const Z jacobiator = (J[0] * J[1] * J[2] + J[1] * J[2] * J[0] + J[2] * J[0] * J[1]) * third;
  const Z I = -jacobiator;
  for (std::size_t n = 0; n < 3; ++n)
    if (!(J[n] * j[n] == I)) throw ConstructionError("Jn jn does not reproduce I for n = " + std::to_string(n + 1));

  const std::vector<Z> named = {one, j[0], j[1], j[2], I, J[0], J[1], J[2]};
  std::array<bool, 8> covered{};
  for (const Z& z : closure) {
    const auto hit = locate(named, z);
    if (!hit) throw ConstructionError("closure contains an element outside the named basis");
    covered[index(hit->unit)] = true;
  }
  for (bool c : covered)
    if (!c) throw ConstructionError("named basis element missing from the closure");

  StructureConstants sc;
  for (BasisUnit a : kAllUnits)
    for (BasisUnit b : kAllUnits) {
      const auto hit = locate(named, named[index(a)] * named[index(b)]);
      if (!hit)
        throw ConstructionError("product " + std::string(name(a)) + "*" + std::string(name(b)) +
                                " falls outside +/- (basis unit)");
      sc(a, b) = *hit;
    }
  return sc;
}

}  // namespace sot
