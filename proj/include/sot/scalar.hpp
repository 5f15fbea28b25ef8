#pragma once

// Scalar support for the two evaluation modes: exact rationals for identity
// sweeps and binary64 for continuous angles.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sot {

using Rational = boost::multiprecision::cpp_rational;

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode = "float";
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return v == 0.0; }
  static std::string to_string(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode = "exact";
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static std::string to_string(const Rational& v) { return v.str(); }
};

template <typename T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <Scalar T>
double to_double(const T& v) {
  return ScalarTraits<T>::to_double(v);
}

template <Scalar T>
std::string to_string(const T& v) {
  return ScalarTraits<T>::to_string(v);
}

template <Scalar T>
bool is_zero(const T& v) {
  return ScalarTraits<T>::is_zero(v);
}

/// |a - b| as a double; exact types give an exact zero when a == b.
template <Scalar T>
double residual(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    if (a == b) return 0.0;
  }
  return std::abs(to_double(T(a - b)));
}

/// Gaussian-rational or complex-binary64 number. std::complex is only
/// specified for floating-point types, hence this small struct.
template <Scalar T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return {T(0), T(1)}; }

  Complex conj() const { return {re, T(-im)}; }
  bool is_zero() const { return sot::is_zero(re) && sot::is_zero(im); }
  bool is_real() const { return sot::is_zero(im); }

  Complex operator-() const { return {T(-re), T(-im)}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    // Gamma-matrix entries are mostly purely real or purely imaginary.
    if (sot::is_zero(o.im)) return *this *= o.re;
    if (sot::is_zero(o.re)) {
      T r = -(im * o.im);
      im = re * o.im;
      re = std::move(r);
      return *this;
    }
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator*=(const T& s) {
    if (!sot::is_zero(re)) re *= s;
    if (!sot::is_zero(im)) im *= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const T& s) { return a *= s; }
  friend Complex operator*(const T& s, Complex a) { return a *= s; }
  friend bool operator==(const Complex&, const Complex&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Complex& c) {
    return os << '(' << to_string(c.re) << ',' << to_string(c.im) << ')';
  }
};

template <Scalar T>
double abs(const Complex<T>& c) {
  return std::hypot(to_double(c.re), to_double(c.im));
}

template <Scalar T>
double residual(const Complex<T>& a, const Complex<T>& b) {
  if constexpr (is_exact_v<T>) {
    if (a == b) return 0.0;
  }
  return abs(Complex<T>(a - b));
}

}  // namespace sot
