#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permvar/ring/poly_matrix.hpp"

namespace permvar {

enum class MatrixPattern {
  Generic,          ///< fresh variables x_i_j
  Hankel,           ///< entry (i, j) = x{i+j}, variables x0, x1, ...
  CirculantHankel,  ///< entry (i, j) = x_1_{((i+j) mod period) + 1}
};

struct GenericMatrixSpec {
  std::size_t k = 2;
  std::size_t n = 2;
  /// Permanent size; 0 means k.
  std::size_t h = 0;
  MatrixPattern pattern = MatrixPattern::Generic;
  /// Number of variables of a circulant pattern; 0 means n.
  std::size_t period = 0;

  std::size_t perm_size() const noexcept { return h ? h : k; }
};

MatrixPattern parse_pattern(const std::string& name);

/// The spec's matrix over a fresh ring with the given order and domain.
PolyMatrix pattern_matrix(const GenericMatrixSpec& spec, MonomialOrder order, CoeffDomain domain);

/// All h x h permanents of m: column subsets in colex order outermost, row
/// subsets in colex order inside. For h = k on a k x (k+1) matrix the
/// column subsets come as {1..k}, ..., {2..k+1}, so generator i omits
/// column k+1-i; use `perm_omitting_column` for the perm_j indexing.
std::vector<MPoly> permanents_of(const PolyMatrix& m, std::size_t h);

std::vector<MPoly> permanental_ideal(const GenericMatrixSpec& spec, MonomialOrder order, CoeffDomain domain);

/// Permanent of the k x k matrix obtained from a k x (k+1) matrix by
/// removing column j (0-based).
MPoly perm_omitting_column(const PolyMatrix& m, std::size_t j);

}  // namespace permvar
