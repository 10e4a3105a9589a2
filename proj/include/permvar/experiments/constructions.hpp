#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permvar/ring/linalg.hpp"
#include "permvar/ring/poly_matrix.hpp"

namespace permvar {

// ---- 2 x n Hankel scheme ---------------------------------------------------

/// The 2 x 2 permanents of the 2 x n Hankel matrix on the affine chart
/// {x_chart != 0}, chart being 0 or n. The chart ring drops that variable.
std::vector<MPoly> hankel_chart_ideal(std::size_t n, std::size_t chart, MonomialOrder order, CoeffDomain domain);

struct HankelSyzygy {
  MPoly lhs;                     ///< x_{n-1}^4
  std::vector<MPoly> factors;    ///< the three chart generators
  std::vector<MPoly> cofactors;  ///< g1, g2, g3
  MPoly rhs() const;
};

/// The explicit degree-4 relation on the chart {x_n != 0}; needs n >= 3
/// and odd characteristic.
HankelSyzygy hankel_syzygy(const RingPtr& chart_ring, std::size_t n);

// ---- components of P(2, n) -------------------------------------------------

struct NamedIdeal {
  std::string name;
  std::vector<MPoly> gens;
};

/// Two row spaces and one quadric per pair of columns.
std::vector<NamedIdeal> census_components(std::size_t n, MonomialOrder order, CoeffDomain domain);

/// Line through the coordinate points of x_{i,j} and x_{l,m} (0-based),
/// as the ideal of all other coordinates.
struct CoordinateLine {
  std::size_t i, j, l, m;
  std::string name() const;
};

/// The n^2 lines: same row or same column as x_{i,j}, one line per pair.
std::vector<CoordinateLine> census_lines(std::size_t n);
std::vector<MPoly> line_ideal(const RingPtr& ring, const CoordinateLine& line);

// ---- singular locus of the k x k permanent ---------------------------------

/// All |R| x |R| permanents of the rows R (0-based) of the generic k x k
/// matrix; with `columns` the same for a column subset.
std::vector<MPoly> block_permanents(const RingPtr& ring, std::size_t k, const std::vector<std::size_t>& subset,
                                    bool columns);

/// Nonempty proper subsets containing index 0, so each unordered partition
/// appears once.
std::vector<std::vector<std::size_t>> partitions_of(std::size_t k);

/// Generic k x k matrix with the first two rows replaced by zero.
PolyMatrix two_zero_rows(const RingPtr& ring, std::size_t k);

struct SymbolicIdentity {
  std::string name;
  PolyMatrix matrix;
  MPoly expected;
};

/// The 5 x 5 matrix Q' in a, b, c, d and its determinant formula.
SymbolicIdentity q_prime_identity(CoeffDomain domain);
/// The (h+2) x (h+2) matrix S with det(S) = -2 a^h b1 b2.
SymbolicIdentity s_identity(std::size_t h, CoeffDomain domain);

// ---- the B1 scripts ---------------------------------------------------------

/// The integer matrix A used for k = 5.
QMatrix script_matrix_k5();
/// Seeded integer (k-1) x k(k-1) matrix with entries in [-lim, lim].
QMatrix seeded_script_matrix(std::size_t k, std::uint64_t seed, long lim = 9);

/// B1 of the generic k x (k+1) matrix after substituting its rows 2..k,
/// columns 2..k+1 (column-major) by the forms (x_{2,1}, ..., x_{k,1}) A.
/// Lives in the ring of those k-1 variables.
PolyMatrix script_bb(std::size_t k, const QMatrix& a, MonomialOrder order, CoeffDomain domain);

}  // namespace permvar
