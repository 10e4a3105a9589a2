#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "permvar/groebner/groebner.hpp"

namespace permvar {

/// Generators of I : f^inf. A monomial f is handled one variable at a
/// time; homogeneous input then avoids the auxiliary variable.
std::vector<MPoly> saturate(std::span<const MPoly> ideal, const MPoly& f, const GbOptions& opts = {});

/// Basis elements free of the first `front_vars` variables, computed in the
/// block order that is lex on those variables.
std::vector<MPoly> eliminate(std::span<const MPoly> ideal, std::size_t front_vars, const GbOptions& opts = {});

/// Whether f lies in the radical of I, via 1 in I + (1 - t f).
bool radical_membership(const MPoly& f, std::span<const MPoly> ideal, const GbOptions& opts = {});

/// Generators of I cap J from t I + (1 - t) J.
std::vector<MPoly> ideal_intersection(std::span<const MPoly> a, std::span<const MPoly> b,
                                      const GbOptions& opts = {});

/// Equality of ideals by comparing reduced bases.
bool same_ideal(std::span<const MPoly> a, std::span<const MPoly> b, const GbOptions& opts = {});

}  // namespace permvar
