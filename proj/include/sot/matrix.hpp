#pragma once

#include <sot/scalar.hpp>

#include <algorithm>
#include <type_traits>
#include <cstddef>
#include <vector>

namespace sot {

/// Dense square complex matrix, row-major. Storage is heap-backed because
/// the rational instantiation is too large for comfortable stack copies.
template <Scalar T, std::size_t N>
class ComplexMatrix {
 public:
  using value_type = Complex<T>;
  static constexpr std::size_t dim = N;

  ComplexMatrix() : data_(N * N) {}

  static ComplexMatrix zero() { return {}; }

  static ComplexMatrix identity() {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = value_type(T(1));
    return m;
  }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(const value_type& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }
  ComplexMatrix& operator*=(const T& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  ComplexMatrix operator-() const {
    ComplexMatrix m = *this;
    for (auto& e : m.data_) e = -e;
    return m;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, const value_type& s) { return a *= s; }
  friend ComplexMatrix operator*(const value_type& s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, const T& s) { return a *= s; }
  friend ComplexMatrix operator*(const T& s, ComplexMatrix a) { return a *= s; }

  // Zero entries of the left factor are skipped; every matrix in this
  // library is sparse, which keeps the rational sweeps fast.
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const value_type& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j) {
          const value_type& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  ComplexMatrix transpose() const {
    ComplexMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  ComplexMatrix conj() const {
    ComplexMatrix m = *this;
    for (auto& e : m.data_) e = e.conj();
    return m;
  }

  ComplexMatrix adjoint() const { return transpose().conj(); }

  value_type trace() const {
    value_type t;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const value_type& e) { return e.is_real(); });
  }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const value_type& e) { return !e.is_zero(); }));
  }

  /// Largest entrywise |a - b|.
  friend double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) worst = std::max(worst, residual(a.data_[k], b.data_[k]));
    return worst;
  }

  /// Column vector product.
  template <typename Vec>
  Vec apply(const Vec& v) const {
    Vec out{};
    for (std::size_t i = 0; i < N; ++i) {
      value_type acc;
      for (std::size_t k = 0; k < N; ++k) {
        if ((*this)(i, k).is_zero()) continue;
        acc += (*this)(i, k) * value_type(v[k]);
      }
      out[i] = acc;
    }
    return out;
  }

  template <Scalar U>
  ComplexMatrix<U, N> cast() const {
    ComplexMatrix<U, N> m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) {
        const auto& e = (*this)(r, c);
        if constexpr (std::is_same_v<U, double>)
          m(r, c) = Complex<U>(to_double(e.re), to_double(e.im));
        else
          m(r, c) = Complex<U>(U(e.re), U(e.im));
      }
    return m;
  }

 private:
  std::vector<value_type> data_;
};

template <Scalar T>
using ComplexMatrix8 = ComplexMatrix<T, 8>;
template <Scalar T>
using ComplexMatrix16 = ComplexMatrix<T, 16>;

/// [[0, upper], [lower, 0]] in 8+8 blocks.
template <Scalar T>
ComplexMatrix16<T> off_diagonal_blocks(const ComplexMatrix8<T>& upper, const ComplexMatrix8<T>& lower) {
  ComplexMatrix16<T> m;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      m(r, c + 8) = upper(r, c);
      m(r + 8, c) = lower(r, c);
    }
  return m;
}

/// True when the two 8x8 off-diagonal blocks vanish.
template <Scalar T>
bool is_block_diagonal(const ComplexMatrix16<T>& m) {
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      if (!m(r, c + 8).is_zero() || !m(r + 8, c).is_zero()) return false;
  return true;
}

}  // namespace sot
