// Tour of the library: octonion products, a boost on a vector and a spinor,
// and the two trilinear forms agreeing through the oracle dictionary.

#include <sot/sot.hpp>

#include <iostream>

int main() {
  using sot::BasisUnit;
  using sot::Rational;

  // J1 J2 = j3 and the Jacobiator J(J1, J2, J3) = -I.
  const auto J1 = sot::unit<Rational>(BasisUnit::J1);
  const auto J2 = sot::unit<Rational>(BasisUnit::J2);
  const auto J3 = sot::unit<Rational>(BasisUnit::J3);
  std::cout << "J1 J2       = " << J1 * J2 << '\n';
  std::cout << "J(J1,J2,J3) = " << sot::jacobiator(J1, J2, J3) << '\n';

  // 1 + J1 is a zero divisor.
  const auto s = sot::SplitOctonion<Rational>::scalar(1) + J1;
  std::cout << "norm_sq(1 + J1) = " << sot::norm_sq(s) << '\n';

  // A boost in the (0,4) plane keeps Q(x) fixed.
  const auto boost = sot::rotor(0, 4, 1.0);
  const auto x = sot::Vector8<double>::basis(0);
  const auto y = sot::rotate_vector(x, boost);
  std::cout << "L04(1) e0 -> x0 = " << y[0] << ", x4 = " << y[4] << ", Q = " << sot::quadratic_form(y) << '\n';

  // The same rotor on a left spinor never touches the psi block.
  const auto phi = sot::Spinor16<double>::left({1, 2, 0, 0, 0, 0, 0, 3});
  const auto phi2 = sot::rotate_spinor(phi, boost);
  std::cout << "spinor invariant " << sot::spinor_invariant(phi) << " -> " << sot::spinor_invariant(phi2)
            << ", still left-handed: " << std::boolalpha << phi2.is_left() << '\n';

  // phi^T B X psi equals -inner(conj(Phi), X Psi) through the dictionary.
  const auto& map = sot::pinned_dictionary();
  const auto p = sot::Spinor16<Rational>::left({1, 0, 2, 0, 0, -1, 0, 0});
  const sot::Vector8<Rational> v({0, 1, 0, 0, 3, 0, 0, 1});
  const auto q = sot::Spinor16<Rational>::right({2, 0, 0, 1, 0, 0, 1, 0});
  std::cout << "matrix form " << sot::trilinear_matrix(p, v, q) << ", octonion form " << map.evaluate(p, v, q)
            << " (dictionary is " << (map.is_identity() ? "the identity" : "a signed permutation") << ")\n";
}
