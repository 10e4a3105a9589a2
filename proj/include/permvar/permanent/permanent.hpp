#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "permvar/errors.hpp"
#include "permvar/ring/linalg.hpp"
#include "permvar/ring/poly_matrix.hpp"

namespace permvar {

inline constexpr std::size_t kDefaultSymbolicPermBound = 7;

/// Permanent of a square polynomial matrix by column-subset expansion.
MPoly perm_symbolic(const PolyMatrix& m, std::size_t bound = kDefaultSymbolicPermBound);

enum class PermEngine { Ryser, Glynn };

/// Ryser's formula, subsets visited in Gray-code order so that each step
/// adds or removes one column from the running row sums.
template <class T>
T perm_ryser(const Dense<T>& a, const T& zero, const T& one) {
  if (a.rows() != a.cols()) throw StructuralError("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  if (n > 40) throw CapacityError("Ryser permanent limited to 40 columns");
  std::vector<T> rowsum(n, zero);
  T total = zero;
  std::uint64_t gray = 0;
  const std::uint64_t steps = std::uint64_t(1) << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    std::size_t j = static_cast<std::size_t>(std::countr_zero(k));
    std::uint64_t bit = std::uint64_t(1) << j;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) rowsum[i] += a(i, j);
    } else {
      for (std::size_t i = 0; i < n; ++i) rowsum[i] -= a(i, j);
    }
    T prod = rowsum[0];
    for (std::size_t i = 1; i < n && !is_zero_value(prod); ++i) prod *= rowsum[i];
    if ((n - static_cast<std::size_t>(std::popcount(gray))) & 1)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

/// Glynn's formula with Gray-code sign flips; `half` is 1/2 in T.
template <class T>
T perm_glynn(const Dense<T>& a, const T& zero, const T& one, const T& half) {
  if (a.rows() != a.cols()) throw StructuralError("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  if (n > 40) throw CapacityError("Glynn permanent limited to 40 columns");
  // colsum[j] = sum_i delta_i a(i, j), delta starts at all +1.
  std::vector<T> colsum(n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) colsum[j] += a(i, j);
  auto product = [&] {
    T p = colsum[0];
    for (std::size_t j = 1; j < n; ++j) p *= colsum[j];
    return p;
  };
  T total = product();
  std::uint64_t gray = 0;  // bit i-1 set means delta_i = -1, i >= 1
  const std::uint64_t steps = std::uint64_t(1) << (n - 1);
  for (std::uint64_t k = 1; k < steps; ++k) {
    std::size_t b = static_cast<std::size_t>(std::countr_zero(k));
    std::uint64_t bit = std::uint64_t(1) << b;
    gray ^= bit;
    std::size_t i = b + 1;
    if (gray & bit) {
      for (std::size_t j = 0; j < n; ++j) colsum[j] -= a(i, j) + a(i, j);
    } else {
      for (std::size_t j = 0; j < n; ++j) colsum[j] += a(i, j) + a(i, j);
    }
    if (std::popcount(gray) & 1)
      total -= product();
    else
      total += product();
  }
  for (std::size_t s = 1; s < n; ++s) total *= half;
  return total;
}

mpq_class perm_numeric(const QMatrix& a, PermEngine engine = PermEngine::Ryser);
Fp perm_numeric(const FpMatrix& a, PermEngine engine = PermEngine::Ryser);
Scalar perm_numeric(const ScalarMatrix& a, PermEngine engine = PermEngine::Ryser);

/// Numeric column-subset expansion along `rows`: entry S (|S| = |rows|) is
/// the permanent of the submatrix on those rows and columns S.
template <class T>
std::vector<T> subset_permanents(const Dense<T>& a, const std::vector<std::size_t>& rows, const T& zero,
                                 const T& one) {
  const std::size_t n = a.cols();
  if (n > 24) throw CapacityError("subset permanents limited to 24 columns");
  std::vector<T> dp(std::size_t(1) << n, zero);
  dp[0] = one;
  for (std::size_t t = 1; t <= rows.size(); ++t) {
    std::size_t r = rows[t - 1];
    for (auto mask : colex_subsets(n, t)) {
      T acc = zero;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        std::size_t c = static_cast<std::size_t>(std::countr_zero(rest));
        const T& sub = dp[mask & ~(std::uint64_t(1) << c)];
        if (!is_zero_value(sub) && !is_zero_value(a(r, c))) acc += a(r, c) * sub;
      }
      dp[mask] = acc;
    }
  }
  return dp;
}

/// Permanental rank: the largest h with a nonzero h x h subpermanent.
std::size_t prk(const QMatrix& a);
std::size_t prk(const FpMatrix& a);

}  // namespace permvar
