#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permvar/ring/linalg.hpp"
#include "permvar/ring/poly_matrix.hpp"

namespace permvar {

/// The integer k x (k+1) Kirkup matrix. Throws InternalError if any of its
/// k x k permanents fails to vanish.
QMatrix kirkup_matrix(std::size_t k);

enum class DerivMode { B1, L };

const char* to_string(DerivMode m);
DerivMode parse_deriv_mode(const std::string& s);

/// The k of a derivative-matrix input: rows + 1 for B1, rows + 2 for L.
std::size_t deriv_k(const QMatrix& a, DerivMode mode);

/// For an r x (r+2) input: the symmetric (r+2) x (r+2) matrix whose (i, j)
/// entry is the permanent of the input without columns i and j, zero on the
/// diagonal. Mode B1 expects r = k-1, mode L expects r = k-2.
QMatrix derivative_matrix(const QMatrix& a, DerivMode mode);
FpMatrix derivative_matrix(const FpMatrix& a);

/// The same construction with polynomial entries.
PolyMatrix derivative_matrix(const PolyMatrix& a);

struct KirkupGenerators {
  RingPtr ring;
  std::vector<PolyMatrix> A;  ///< A_j, k x (k+1), column j zero
  std::vector<PolyMatrix> B;  ///< B_l, (k+1) x (k+1), symmetric
  std::vector<PolyMatrix> C;  ///< C_j = A_j without column j
  std::vector<MPoly> f;       ///< f_j = det C_j
  std::vector<MPoly> g;       ///< g_l = det B_l
};

inline constexpr std::size_t kKirkupGeneratorBound = 4;

/// Builds A_j, B_l, C_j from M_{l,i,j} = d perm_j / d x_{l,i} on the generic
/// k x (k+1) matrix and takes determinants. Indices are 0-based.
KirkupGenerators kirkup_generators(std::size_t k, MonomialOrder order, CoeffDomain domain,
                                   bool with_g = true);

}  // namespace permvar
