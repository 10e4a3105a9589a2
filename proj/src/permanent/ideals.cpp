#include "permvar/permanent/ideals.hpp"

#include "permvar/errors.hpp"
#include "permvar/permanent/permanent.hpp"

namespace permvar {

MatrixPattern parse_pattern(const std::string& name) {
  if (name == "generic") return MatrixPattern::Generic;
  if (name == "hankel") return MatrixPattern::Hankel;
  if (name == "circulant") return MatrixPattern::CirculantHankel;
  throw ParseError("unknown matrix pattern '" + name + "' (generic, hankel, circulant)");
}

PolyMatrix pattern_matrix(const GenericMatrixSpec& spec, MonomialOrder order, CoeffDomain domain) {
  if (spec.k == 0 || spec.n == 0) throw StructuralError("matrix shape must be positive");
  if (spec.perm_size() > std::min(spec.k, spec.n)) throw StructuralError("permanent size exceeds matrix shape");
  switch (spec.pattern) {
    case MatrixPattern::Generic:
      return PolyMatrix::generic(PolyRing::create(VarUniverse(spec.k, spec.n), order, domain));
    case MatrixPattern::Hankel: {
      std::vector<std::string> names;
      for (std::size_t v = 0; v + 1 < spec.k + spec.n; ++v) names.push_back("x" + std::to_string(v));
      auto ring = PolyRing::create(VarUniverse::named(std::move(names)), order, domain);
      PolyMatrix m(ring, spec.k, spec.n);
      for (std::size_t i = 0; i < spec.k; ++i)
        for (std::size_t j = 0; j < spec.n; ++j) m.set(i, j, ring->variable(i + j));
      return m;
    }
    case MatrixPattern::CirculantHankel: {
      std::size_t period = spec.period ? spec.period : spec.n;
      auto ring = PolyRing::create(VarUniverse(1, period), order, domain);
      PolyMatrix m(ring, spec.k, spec.n);
      for (std::size_t i = 0; i < spec.k; ++i)
        for (std::size_t j = 0; j < spec.n; ++j) m.set(i, j, ring->variable((i + j) % period));
      return m;
    }
  }
  throw InternalError("unhandled matrix pattern");
}

std::vector<MPoly> permanents_of(const PolyMatrix& m, std::size_t h) {
  return subexpansions(h, m, false);
}

std::vector<MPoly> permanental_ideal(const GenericMatrixSpec& spec, MonomialOrder order, CoeffDomain domain) {
  return permanents_of(pattern_matrix(spec, order, domain), spec.perm_size());
}

MPoly perm_omitting_column(const PolyMatrix& m, std::size_t j) {
  if (m.cols() != m.rows() + 1) throw StructuralError("perm_omitting_column needs a k x (k+1) matrix");
  if (j >= m.cols()) throw StructuralError("column index out of range");
  std::vector<std::size_t> rows(m.rows()), cols;
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (c != j) cols.push_back(c);
  return perm_symbolic(m.submatrix(rows, cols), m.rows());
}

}  // namespace permvar
