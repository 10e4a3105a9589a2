#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permvar/ring/linalg.hpp"
#include "permvar/ring/mpoly.hpp"

namespace permvar {

/// Rectangular matrix of polynomials from one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<MPoly> entries);

  /// The matrix (x_{i,j}) of the ring's grid variables.
  static PolyMatrix generic(const RingPtr& ring);
  static PolyMatrix constant(const RingPtr& ring, const QMatrix& m);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, MPoly p);
  const std::vector<MPoly>& entries() const noexcept { return e_; }

  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  PolyMatrix transpose() const;
  PolyMatrix substitute(std::span<const MPoly> images) const;

  bool is_constant() const;
  bool is_symmetric() const;
  ScalarMatrix to_scalars() const;
  /// Requires constant entries over ZZ or QQ.
  QMatrix to_rationals() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MPoly> e_;
};

inline constexpr std::size_t kDefaultSymbolicDetBound = 8;

/// Laplace expansion along rows `row_idx` (in order) over all column subsets
/// of size |row_idx|, sharing subproducts between subsets. Entry S of the
/// result (S a column bitmask with |S| = |row_idx|) is the determinant
/// (alternating) or permanent of the submatrix on those rows and columns;
/// other entries are left empty.
std::vector<MPoly> subset_expansion(const PolyMatrix& m, std::span<const std::size_t> row_idx, bool alternating);

/// Symbolic cofactor expansion for symbolic entries up to `symbolic_bound`;
/// constant matrices of any size use fraction-free elimination.
MPoly matrix_det(const PolyMatrix& m, std::size_t symbolic_bound = kDefaultSymbolicDetBound);

/// All h x h determinants (alternating) or permanents of m. Column subsets
/// in colexicographic order outermost, row subsets in colexicographic order
/// inside.
std::vector<MPoly> subexpansions(std::size_t h, const PolyMatrix& m, bool alternating);

/// All h x h minors, ordered as in `subexpansions`.
std::vector<MPoly> matrix_minors(std::size_t h, const PolyMatrix& m);

/// Rank over the coefficient field of the coefficient matrix whose rows are
/// the polynomials and whose columns are the monomials that occur.
std::size_t poly_family_rank(std::span<const MPoly> fs);

/// All h-element subsets of {0..n-1} as bitmasks, colex order.
std::vector<std::uint64_t> colex_subsets(std::size_t n, std::size_t h);
std::vector<std::size_t> mask_members(std::uint64_t mask);

}  // namespace permvar
