#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "permvar/errors.hpp"
#include "permvar/ring/scalar.hpp"

namespace permvar {

/// Row-major dense matrix.
template <class T>
class Dense {
 public:
  Dense() = default;
  Dense(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
  }

  Dense transpose() const {
    Dense t(cols_, rows_, a_.empty() ? T() : a_[0]);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Dense& x, const Dense& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Dense<mpq_class>;
using ZMatrix = Dense<mpz_class>;
using FpMatrix = Dense<Fp>;
using ScalarMatrix = Dense<Scalar>;

inline bool is_zero_value(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero_value(const mpz_class& x) { return sgn(x) == 0; }
inline bool is_zero_value(const Fp& x) { return x.is_zero(); }
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }

QMatrix qmatrix(const std::vector<std::vector<long>>& rows);
QMatrix to_qmatrix(const ZMatrix& m);
FpMatrix reduce_mod(const QMatrix& m, std::uint64_t p);

/// Gauss-Jordan elimination in place over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Dense<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero_value(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    T inv;
    if constexpr (std::is_same_v<T, Fp>)
      inv = m(r, c).inverse();
    else
      inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero_value(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Fraction-free (Bareiss) determinant; every division is exact, so this
/// also works over ZZ.
template <class T>
T bareiss_det(Dense<T> m, const T& zero, const T& one) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return one;
  T prev = one;
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_value(m(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero_value(m(piv, k))) ++piv;
      if (piv == n) return zero;
      m.swap_rows(k, piv);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = v / prev;
      }
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return neg ? zero - d : d;
}

std::size_t rank(const QMatrix& m);
std::size_t rank(const FpMatrix& m);
/// Over ZZ the rank is taken over QQ.
std::size_t rank(const ScalarMatrix& m);

mpq_class det(const QMatrix& m);
Scalar det(const ScalarMatrix& m);

/// Basis of the right kernel as primitive integer vectors whose first
/// nonzero entry is positive, one per free column in increasing order.
std::vector<std::vector<mpz_class>> kernel_basis(const QMatrix& m);

std::vector<mpq_class> mat_vec(const QMatrix& m, const std::vector<mpq_class>& v);

}  // namespace permvar
