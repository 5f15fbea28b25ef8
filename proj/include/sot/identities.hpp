#pragma once

// Exhaustive identity sweeps over the split-octonion basis units.

#include <sot/basis_generation.hpp>
#include <sot/octonion.hpp>
#include <sot/random.hpp>
#include <sot/report.hpp>

#include <initializer_list>
#include <sstream>
#include <string>

namespace sot {

namespace detail {

inline std::string args(std::initializer_list<BasisUnit> units) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (BasisUnit u : units) {
    if (!first) os << ',';
    os << name(u);
    first = false;
  }
  os << ')';
  return os.str();
}

template <Scalar T>
std::string mismatch(const std::string& where, const SplitOctonion<T>& lhs, const SplitOctonion<T>& rhs) {
  std::ostringstream os;
  os << where << ": lhs = " << lhs << ", rhs = " << rhs;
  return os.str();
}

template <Scalar T>
double tolerance_for(double requested) {
  return is_exact_v<T> ? 0.0 : requested;
}

template <Scalar T>
SplitOctonion<T> from_ints(const std::array<int, 8>& c) {
  typename SplitOctonion<T>::Coefficients k;
  for (std::size_t i = 0; i < 8; ++i) k[i] = T(c[i]);
  return SplitOctonion<T>(k);
}

}  // namespace detail

/// Malcev bilinear product: the 1/2-normalized commutator. It coincides
/// with the plain product for distinct anti-commuting units and vanishes
/// on repeated ones.
template <Scalar T>
SplitOctonion<T> malcev_product(const SplitOctonion<T>& x, const SplitOctonion<T>& y) {
  return commutator(x, y);
}

/// Jacobiator of the Malcev product.
template <Scalar T>
SplitOctonion<T> malcev_jacobiator(const SplitOctonion<T>& x, const SplitOctonion<T>& y, const SplitOctonion<T>& z) {
  auto p = [](const SplitOctonion<T>& a, const SplitOctonion<T>& b) { return malcev_product(a, b); };
  return (p(p(x, y), z) + p(p(y, z), x) + p(p(z, x), y)) * (T(1) / T(3));
}

/// Flexible Moufang identities on all 343 ordered triples of hyper-complex
/// units plus the mild associative laws on all 49 pairs.
template <Scalar T = Rational>
VerificationReport verify_moufang(double tolerance = 0.0) {
  const double tol = detail::tolerance_for<T>(tolerance);
  VerificationReport report;
  report.suite = "moufang";
  report.mode = ScalarTraits<T>::mode;

  IdentitySweep m1("moufang (xy)(zx) = x(yz)x", tol);
  IdentitySweep m2("moufang (zyz)x = z(y(zx))", tol);
  IdentitySweep m3("moufang x(yzy) = ((xy)z)y", tol);
  for (BasisUnit a : kImaginaryUnits)
    for (BasisUnit b : kImaginaryUnits)
      for (BasisUnit c : kImaginaryUnits) {
        const auto x = unit<T>(a), y = unit<T>(b), z = unit<T>(c);
        const auto where = [&] { return detail::args({a, b, c}); };

        // The triple products x(yz)x, zyz and yzy are checked under both
        // bracketings; flexibility makes them agree.
        {
          const auto lhs = mul(mul(x, y), mul(z, x));
          const auto r1 = mul(mul(x, mul(y, z)), x);
          const auto r2 = mul(x, mul(mul(y, z), x));
          m1.measure(std::max(max_abs_diff(lhs, r1), max_abs_diff(lhs, r2)),
                     [&] { return detail::mismatch(where(), lhs, r1); });
        }
        {
          const auto rhs = mul(z, mul(y, mul(z, x)));
          const auto l1 = mul(mul(mul(z, y), z), x);
          const auto l2 = mul(mul(z, mul(y, z)), x);
          m2.measure(std::max(max_abs_diff(l1, rhs), max_abs_diff(l2, rhs)),
                     [&] { return detail::mismatch(where(), l1, rhs); });
        }
        {
          const auto rhs = mul(mul(mul(x, y), z), y);
          const auto l1 = mul(x, mul(mul(y, z), y));
          const auto l2 = mul(x, mul(y, mul(z, y)));
          m3.measure(std::max(max_abs_diff(l1, rhs), max_abs_diff(l2, rhs)),
                     [&] { return detail::mismatch(where(), l1, rhs); });
        }
      }

  IdentitySweep right_alt("mild (xy)y = xy^2", tol);
  IdentitySweep left_alt("mild x(xy) = x^2y", tol);
  IdentitySweep flexible("mild (xy)x = x(yx)", tol);
  for (BasisUnit a : kImaginaryUnits)
    for (BasisUnit b : kImaginaryUnits) {
      const auto x = unit<T>(a), y = unit<T>(b);
      const auto where = [&] { return detail::args({a, b}); };
      auto check = [&](IdentitySweep& s, const SplitOctonion<T>& l, const SplitOctonion<T>& r) {
        s.measure(max_abs_diff(l, r), [&] { return detail::mismatch(where(), l, r); });
      };
      check(right_alt, mul(mul(x, y), y), mul(x, mul(y, y)));
      check(left_alt, mul(x, mul(x, y)), mul(mul(x, x), y));
      check(flexible, mul(mul(x, y), x), mul(x, mul(y, x)));
    }

  for (auto* s : {&m1, &m2, &m3, &right_alt, &left_alt, &flexible}) report.identities.push_back(std::move(*s).finish());
  return report;
}

/// Malcev relation (both forms) on the 343 unit triples, the two
/// four-element Jacobiator identities on all 7^4 quadruples and the
/// five-element one on all 7^5 quintuples. The bilinear product throughout
/// is malcev_product and the Jacobiator is malcev_jacobiator.
template <Scalar T = Rational>
VerificationReport verify_malcev(double tolerance = 0.0) {
  const double tol = detail::tolerance_for<T>(tolerance);
  VerificationReport report;
  report.suite = "malcev";
  report.mode = ScalarTraits<T>::mode;

  auto p = [](const SplitOctonion<T>& a, const SplitOctonion<T>& b) { return malcev_product(a, b); };
  auto J = [](const SplitOctonion<T>& a, const SplitOctonion<T>& b, const SplitOctonion<T>& c) {
    return malcev_jacobiator(a, b, c);
  };

  // Jacobiators of unit triples are reused by the larger sweeps.
  std::array<std::array<std::array<SplitOctonion<T>, 8>, 8>, 8> jac;
  for (BasisUnit a : kImaginaryUnits)
    for (BasisUnit b : kImaginaryUnits)
      for (BasisUnit c : kImaginaryUnits) jac[index(a)][index(b)][index(c)] = J(unit<T>(a), unit<T>(b), unit<T>(c));
  auto jac_of = [&](BasisUnit a, BasisUnit b, BasisUnit c) -> const SplitOctonion<T>& {
    return jac[index(a)][index(b)][index(c)];
  };

  IdentitySweep relation("malcev (xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y", tol);
  IdentitySweep jacobi_form("malcev J(x,y,xz) = J(x,y,z)x", tol);
  for (BasisUnit a : kImaginaryUnits)
    for (BasisUnit b : kImaginaryUnits)
      for (BasisUnit c : kImaginaryUnits) {
        const auto x = unit<T>(a), y = unit<T>(b), z = unit<T>(c);
        const auto where = [&] { return detail::args({a, b, c}); };
        {
          const auto lhs = p(p(x, y), p(x, z));
          const auto rhs = p(p(p(x, y), z), x) + p(p(p(y, z), x), x) + p(p(p(z, x), x), y);
          relation.measure(max_abs_diff(lhs, rhs), [&] { return detail::mismatch(where(), lhs, rhs); });
        }
        {
          const auto lhs = J(x, y, p(x, z));
          const auto rhs = p(jac_of(a, b, c), x);
          jacobi_form.measure(max_abs_diff(lhs, rhs), [&] { return detail::mismatch(where(), lhs, rhs); });
        }
      }

  IdentitySweep cyclic("jacobiator J(xy,z,w) + J(yz,x,w) + J(zx,y,w) = 0", tol);
  IdentitySweep leibniz("jacobiator J(x,y,zw) = J(x,y,z)w + zJ(x,y,w)", tol);
  // Forms of the two identities above that hold in any Malcev algebra.
  IdentitySweep cyclic_fixed("jacobiator J(xy,z,w) + J(yz,x,w) + J(zx,y,w) = 2 J(x,y,z)w", tol);
  IdentitySweep leibniz_fixed("jacobiator J(x,y,zw) = J(x,y,z)w + zJ(x,y,w) - 2 J(xy,z,w)", tol);
  for (BasisUnit a : kImaginaryUnits)
    for (BasisUnit b : kImaginaryUnits)
      for (BasisUnit c : kImaginaryUnits)
        for (BasisUnit d : kImaginaryUnits) {
          const auto x = unit<T>(a), y = unit<T>(b), z = unit<T>(c), w = unit<T>(d);
          const auto where = [&] { return detail::args({a, b, c, d}); };
          {
            const auto lhs = J(p(x, y), z, w) + J(p(y, z), x, w) + J(p(z, x), y, w);
            const SplitOctonion<T> zero;
            cyclic.measure(max_abs_diff(lhs, zero), [&] { return detail::mismatch(where(), lhs, zero); });
            const auto rhs = p(jac_of(a, b, c), w) * T(2);
            cyclic_fixed.measure(max_abs_diff(lhs, rhs), [&] { return detail::mismatch(where(), lhs, rhs); });
          }
          {
            const auto lhs = J(x, y, p(z, w));
            const auto rhs = p(jac_of(a, b, c), w) + p(z, jac_of(a, b, d));
            leibniz.measure(max_abs_diff(lhs, rhs), [&] { return detail::mismatch(where(), lhs, rhs); });
            const auto fixed = rhs - J(p(x, y), z, w) * T(2);
            leibniz_fixed.measure(max_abs_diff(lhs, fixed), [&] { return detail::mismatch(where(), lhs, fixed); });
          }
        }

  IdentitySweep fundamental("jacobiator J(x,y,J(z,u,v)) = J(J(x,y,z),u,v) + J(z,J(x,y,u),v) + J(z,u,J(x,y,v))", tol);
  for (BasisUnit a : kImaginaryUnits)
    for (BasisUnit b : kImaginaryUnits)
      for (BasisUnit c : kImaginaryUnits)
        for (BasisUnit d : kImaginaryUnits)
          for (BasisUnit e : kImaginaryUnits) {
            const auto x = unit<T>(a), y = unit<T>(b), z = unit<T>(c), u = unit<T>(d), v = unit<T>(e);
            const auto lhs = J(x, y, jac_of(c, d, e));
            const auto rhs = J(jac_of(a, b, c), u, v) + J(z, jac_of(a, b, d), v) + J(z, u, jac_of(a, b, e));
            fundamental.measure(max_abs_diff(lhs, rhs),
                                [&] { return detail::mismatch(detail::args({a, b, c, d, e}), lhs, rhs); });
          }

  for (auto* s : {&relation, &jacobi_form, &cyclic, &leibniz, &cyclic_fixed, &leibniz_fixed, &fundamental})
    report.identities.push_back(std::move(*s).finish());
  return report;
}

/// Closed-form value of the associator of three imaginary units, read off
/// the six non-vanishing families
///   A(jn,jm,Jk) = -eps_nmk I - d_nk Jm + d_mk Jn    A(jn,jm,I) = eps_nmk Jk
///   A(jn,Jm,Jk) = d_nm jk - d_nk jm                 A(jn,Jm,I) = -eps_nmk jk
///   A(Jn,Jm,Jk) = -eps_nmk I                        A(Jn,Jm,I) = eps_nmk Jk
/// and extended to every ordering by total antisymmetry. Triples of types
/// jjj, jII, JII and III vanish.
template <Scalar T>
SplitOctonion<T> associator_from_families(BasisUnit a, BasisUnit b, BasisUnit c) {
  // Rank used to sort arguments into family order j < J < I.
  auto rank = [](BasisUnit u) {
    if (u == BasisUnit::I) return 2;
    return index(u) >= index(BasisUnit::J1) ? 1 : 0;
  };
  auto label = [](BasisUnit u) {
    const std::size_t i = index(u);
    return static_cast<int>(i >= index(BasisUnit::J1) ? i - 4 : i);
  };

  std::array<BasisUnit, 3> args = {a, b, c};
  int parity = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2; ++i)
      if (rank(args[i]) > rank(args[i + 1])) {
        std::swap(args[i], args[i + 1]);
        parity = -parity;
      }

  const int r0 = rank(args[0]), r1 = rank(args[1]), r2 = rank(args[2]);
  const int n = label(args[0]), m = label(args[1]), k = label(args[2]);
  SplitOctonion<T> out;
  auto add = [&](BasisUnit u, int coeff) {
    if (coeff != 0) out[u] += T(coeff);
  };
  auto eps_sum = [&](BasisUnit (*unit_of)(int), int sign) {
    for (int kk = 1; kk <= 3; ++kk) add(unit_of(kk), sign * epsilon(n, m, kk));
  };

  if (r0 == 0 && r1 == 0 && r2 == 1) {
    add(BasisUnit::I, -epsilon(n, m, k));
    add(big_J(m), -delta(n, k));
    add(big_J(n), delta(m, k));
  } else if (r0 == 0 && r1 == 0 && r2 == 2) {
    eps_sum(big_J, 1);
  } else if (r0 == 0 && r1 == 1 && r2 == 1) {
    add(small_j(k), delta(n, m));
    add(small_j(m), -delta(n, k));
  } else if (r0 == 0 && r1 == 1 && r2 == 2) {
    eps_sum(small_j, -1);
  } else if (r0 == 1 && r1 == 1 && r2 == 1) {
    add(BasisUnit::I, -epsilon(n, m, k));
  } else if (r0 == 1 && r1 == 1 && r2 == 2) {
    eps_sum(big_J, 1);
  }
  return parity > 0 ? out : -out;
}

/// Structure of the algebra: the product table, unit squares,
/// anti-commutativity, the associator families and their antisymmetric
/// closure, the associator/commutator bridge, conjugation and the norm.
template <Scalar T = Rational>
VerificationReport verify_associators(std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000,
                                      double tolerance = 0.0) {
  const double tol = detail::tolerance_for<T>(tolerance);
  VerificationReport report;
  report.suite = "associators";
  report.mode = ScalarTraits<T>::mode;
  report.seed = seed;

  const StructureConstants relations = StructureConstants::from_relations();
  IdentitySweep table("product table matches defining relations", tol);
  for (BasisUnit a : kAllUnits)
    for (BasisUnit b : kAllUnits) {
      const auto got = mul(unit<T>(a), unit<T>(b));
      const SignedUnit want_unit = relations(a, b);
      const auto want = SplitOctonion<T>::unit(want_unit.unit, T(want_unit.sign));
      table.measure(max_abs_diff(got, want), [&] { return detail::mismatch(detail::args({a, b}), got, want); });
    }

  IdentitySweep squares("unit squares Jn^2 = 1, jn^2 = -1, I^2 = 1", tol);
  for (BasisUnit u : kImaginaryUnits) {
    const bool is_small_j = index(u) >= 1 && index(u) <= 3;
    const auto got = mul(unit<T>(u), unit<T>(u));
    const auto want = SplitOctonion<T>::scalar(T(is_small_j ? -1 : 1));
    squares.measure(max_abs_diff(got, want), [&] { return detail::mismatch(detail::args({u, u}), got, want); });
  }

  IdentitySweep anti("anti-commutativity xy = -yx", tol);
  for (std::size_t i = 0; i < kImaginaryUnits.size(); ++i)
    for (std::size_t j = i + 1; j < kImaginaryUnits.size(); ++j) {
      const BasisUnit a = kImaginaryUnits[i], b = kImaginaryUnits[j];
      const auto xy = mul(unit<T>(a), unit<T>(b));
      const auto yx = mul(unit<T>(b), unit<T>(a));
      anti.measure(max_abs_diff(xy, -yx), [&] { return detail::mismatch(detail::args({a, b}), xy, -yx); });
    }

  // Each family over every index triple (n, m, k) in {1,2,3}^3.
  IdentitySweep families("associator families", tol);
  {
    using Maker = BasisUnit (*)(int);
    struct Family {
      Maker first, second;
      bool third_is_I;
      Maker third;
    };
    const Family fams[] = {
        {small_j, small_j, false, big_J}, {small_j, small_j, true, nullptr}, {small_j, big_J, false, big_J},
        {small_j, big_J, true, nullptr},  {big_J, big_J, false, big_J},      {big_J, big_J, true, nullptr},
    };
    for (const auto& f : fams)
      for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
          for (int k = 1; k <= (f.third_is_I ? 1 : 3); ++k) {
            const BasisUnit a = f.first(n), b = f.second(m), c = f.third_is_I ? BasisUnit::I : f.third(k);
            const auto got = associator(unit<T>(a), unit<T>(b), unit<T>(c));
            const auto want = associator_from_families<T>(a, b, c);
            families.measure(max_abs_diff(got, want),
                             [&] { return detail::mismatch(detail::args({a, b, c}), got, want); });
          }
  }

  IdentitySweep closure("associator table closed under antisymmetry", tol);
  IdentitySweep antisym("associator total antisymmetry", tol);
  IdentitySweep bridge("associator = ([x,[y,z]] + [y,[z,x]] + [z,[x,y]])/3", tol);
  // The nested commutators above enter with the wrong sign for an alternative
  // algebra; this is the form that holds.
  IdentitySweep bridge_fixed("associator = ([[x,y],z] + [[y,z],x] + [[z,x],y])/3", tol);
  for (BasisUnit a : kImaginaryUnits)
    for (BasisUnit b : kImaginaryUnits)
      for (BasisUnit c : kImaginaryUnits) {
        const auto x = unit<T>(a), y = unit<T>(b), z = unit<T>(c);
        const auto where = [&] { return detail::args({a, b, c}); };
        const auto A = associator(x, y, z);
        const auto fam = associator_from_families<T>(a, b, c);
        closure.measure(max_abs_diff(A, fam), [&] { return detail::mismatch(where(), A, fam); });

        const auto swap_first = -associator(y, x, z);
        const auto swap_last = -associator(x, z, y);
        antisym.measure(std::max(max_abs_diff(A, swap_first), max_abs_diff(A, swap_last)),
                        [&] { return detail::mismatch(where(), A, swap_first); });

        const auto rhs =
            (commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))) *
            (T(1) / T(3));
        bridge.measure(max_abs_diff(A, rhs), [&] { return detail::mismatch(where(), A, rhs); });

        const auto fixed =
            (commutator(commutator(x, y), z) + commutator(commutator(y, z), x) + commutator(commutator(z, x), y)) *
            (T(1) / T(3));
        bridge_fixed.measure(max_abs_diff(A, fixed), [&] { return detail::mismatch(where(), A, fixed); });
      }

  Rng rng(seed);
  IdentitySweep anti_hom("conj(ab) = conj(b) conj(a)", tol);
  IdentitySweep norm("norm_sq(s) = scalar part of s conj(s) and conj(s) s", tol);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = detail::from_ints<T>(random_components(rng));
    const auto b = detail::from_ints<T>(random_components(rng));
    const auto lhs = conj(mul(a, b));
    const auto rhs = mul(conj(b), conj(a));
    anti_hom.measure(max_abs_diff(lhs, rhs), [&] { return detail::mismatch("sample " + std::to_string(i), lhs, rhs); });

    const auto n = SplitOctonion<T>::scalar(norm_sq(a));
    const auto right = mul(a, conj(a));
    const auto left = mul(conj(a), a);
    norm.measure(std::max(max_abs_diff(n, right), max_abs_diff(n, left)),
                 [&] { return detail::mismatch("sample " + std::to_string(i), n, right); });
  }

  IdentitySweep zero_div("zero divisor: norm_sq(1 + J1) = 0", tol);
  {
    const auto s = SplitOctonion<T>::scalar(T(1)) + unit<T>(BasisUnit::J1);
    zero_div.check(!s.is_zero() && is_zero(norm_sq(s)), [] { return std::string("1 + J1 is not a zero divisor"); });
  }

  IdentitySweep generated("table regenerated from J1, J2, J3 alone matches", 0.0);
  {
    std::string why;
    bool same = false;
    try {
      same = generate_basis_from_J() == structure_constants();
      if (!same) why = "regenerated table differs";
    } catch (const ConstructionError& e) {
      why = e.what();
    }
    generated.check(same, [&] { return why; });
  }

  for (auto* s : {&table, &squares, &anti, &generated, &families, &closure, &antisym, &bridge, &bridge_fixed, &anti_hom, &norm, &zero_div})
    report.identities.push_back(std::move(*s).finish());
  return report;
}

}  // namespace sot
