#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "permvar/groebner/groebner.hpp"

namespace permvar {

struct DimensionReport {
  /// Krull dimension of the quotient; -1 for the unit ideal.
  long dim = 0;
  long codim = 0;
  std::optional<std::int64_t> degree;
  /// Variable indices independent modulo the leading-term ideal.
  std::vector<std::size_t> independent_set;

  nlohmann::json to_json() const;
};

/// Coefficients of N(t) in HS(R/I) = N(t) / (1-t)^nvars, for the monomial
/// ideal generated by `gens`.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// dim/codim from a maximum independent set; degree is filled in for
/// zero-dimensional and homogeneous ideals.
DimensionReport ideal_dimension(const GroebnerBasis& g);

/// Degree from the Hilbert series. Requires a homogeneous basis.
std::int64_t hilbert_degree(const GroebnerBasis& g);

/// dim_k of R/I for a zero-dimensional ideal.
std::int64_t quotient_degree(const GroebnerBasis& g);
/// Monomials outside the leading-term ideal, increasing in the ring order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g);

}  // namespace permvar
