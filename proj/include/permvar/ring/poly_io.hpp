#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "permvar/ring/mpoly.hpp"

namespace permvar {

// Canonical text form: terms in descending order joined by " + " / " - ",
// each term `coef*var^e*var`, coefficient 1 omitted, e.g.
//   3*x_1_2^2*x_2_1 - 7
// Prime-field coefficients print as residues in [0, p).

/// Parses the canonical form and, more generally, any expression built from
/// numbers (`3`, `3/4`), ring variables, + - * ^ and parentheses.
MPoly parse_poly(const RingPtr& ring, std::string_view text);

/// One polynomial per non-empty line; lines starting with '#' are skipped.
std::vector<MPoly> parse_poly_list(const RingPtr& ring, std::string_view text);

/// Builds a ring large enough for every variable named in `text`: x_i_j
/// names fix the grid shape, anything else becomes an auxiliary variable.
RingPtr infer_ring(std::string_view text, MonomialOrder order, CoeffDomain domain);

std::string to_text(const std::vector<MPoly>& polys);

nlohmann::json ring_to_json(const PolyRing& ring);
RingPtr ring_from_json(const nlohmann::json& j);

/// {"ring": {...}, "terms": [{"c": "3", "e": [0, 2, ...]}, ...]}
nlohmann::json to_json(const MPoly& p);
MPoly poly_from_json(const nlohmann::json& j);
/// Term list only, for a known ring.
MPoly poly_from_json(const RingPtr& ring, const nlohmann::json& terms);

}  // namespace permvar
