#include "permvar/experiments/slices.hpp"

#include "permvar/errors.hpp"
#include "permvar/groebner/dimension.hpp"
#include "permvar/permanent/ideals.hpp"

namespace permvar {

std::string SliceSpec::name() const {
  switch (kind) {
    case SliceKind::Hankel2xn: return "hankel2xn:" + std::to_string(param);
    case SliceKind::Circulant3: return "circulant3";
    case SliceKind::Circulant4: return "circulant4";
    case SliceKind::Circulant2xn: return "circulant2xn:" + std::to_string(param);
  }
  return "?";
}

SliceSpec SliceSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::size_t param = 0;
  if (colon != std::string::npos) {
    try {
      param = std::stoul(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad slice parameter in '" + text + "'");
    }
  }
  if (head == "hankel2xn" && param >= 2) return {SliceKind::Hankel2xn, param};
  if (head == "circulant2xn" && param >= 2) return {SliceKind::Circulant2xn, param};
  if (head == "circulant3" && colon == std::string::npos) return {SliceKind::Circulant3, 0};
  if (head == "circulant4" && colon == std::string::npos) return {SliceKind::Circulant4, 0};
  throw ParseError("unknown slice '" + text + "' (hankel2xn:N, circulant3, circulant4, circulant2xn:K)");
}

PolyMatrix build_slice(const SliceSpec& spec, MonomialOrder order, CoeffDomain domain) {
  switch (spec.kind) {
    case SliceKind::Hankel2xn:
      return pattern_matrix({2, spec.param, 2, MatrixPattern::Hankel}, order, domain);
    case SliceKind::Circulant3:
      return pattern_matrix({3, 4, 3, MatrixPattern::CirculantHankel, 5}, order, domain);
    case SliceKind::Circulant4:
      return pattern_matrix({4, 5, 4, MatrixPattern::CirculantHankel, 5}, order, domain);
    case SliceKind::Circulant2xn:
      return pattern_matrix({spec.param, spec.param + 1, 2, MatrixPattern::CirculantHankel}, order, domain);
  }
  throw InternalError("unhandled slice kind");
}

std::size_t LinearSlice::rank() const {
  const std::size_t s = target->nvars();
  ScalarMatrix m(images.size(), s, Scalar::zero(target->domain()));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& t : images[i].terms()) {
      auto sup = t.mono.support();
      m(i, sup.front()) = t.coef;
    }
  return permvar::rank(m);
}

MPoly LinearSlice::apply(const MPoly& f) const {
  if (!f.ring()->same_as(*source)) throw StructuralError("polynomial is not in the slice's source ring");
  return f.substitute(images);
}

namespace {

void check_linear(const std::vector<MPoly>& images) {
  for (const auto& p : images)
    for (const auto& t : p.terms())
      if (t.mono.degree() != 1) throw PreconditionError("slice images must be linear forms");
}

}  // namespace

LinearSlice slice_from_matrix(const PolyMatrix& m, const RingPtr& grid) {
  const auto& u = grid->universe();
  if (u.rows() != m.rows() || u.cols() != m.cols() || !u.aux_names().empty())
    throw StructuralError("slice matrix shape does not match the grid ring");
  if (grid->domain() != m.ring()->domain()) throw StructuralError("slice and grid ring differ in coefficients");
  LinearSlice s{grid, m.ring(), m.entries()};
  check_linear(s.images);
  return s;
}

LinearSlice identity_slice(const RingPtr& ring) {
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < ring->nvars(); ++v) images.push_back(ring->variable(v));
  return {ring, ring, images};
}

nlohmann::json SliceBound::to_json() const {
  return {{"ambient", ambient},
          {"slice_vars", slice_vars},
          {"slice_rank", slice_rank},
          {"sliced_height", sliced_height},
          {"preimage_dim", preimage_dim},
          {"intersection_dim", intersection_dim},
          {"max_component_dim", max_component_dim},
          {"bound", bound}};
}

SliceBound slice_codim_bound(std::span<const MPoly> gens, const LinearSlice& slice, const GbOptions& opts) {
  if (slice.images.size() != slice.source->nvars()) throw StructuralError("slice needs one image per variable");
  std::vector<MPoly> pulled;
  for (const auto& g : gens) pulled.push_back(slice.apply(g));
  SliceBound b;
  b.ambient = slice.source->nvars();
  b.slice_vars = slice.target->nvars();
  b.slice_rank = slice.rank();
  std::vector<MPoly> nz;
  for (auto& p : pulled)
    if (!p.is_zero()) nz.push_back(std::move(p));
  b.sliced_height = nz.empty() ? 0 : ideal_dimension(buchberger(nz, opts)).codim;
  const long s = static_cast<long>(b.slice_vars), rho = static_cast<long>(b.slice_rank);
  const long n = static_cast<long>(b.ambient);
  b.preimage_dim = s - b.sliced_height;
  // The preimage is a union of fibres of the linear map, each of dimension s - rho.
  b.intersection_dim = b.preimage_dim - (s - rho);
  // A component X meeting L satisfies dim(X cap L) >= dim X + rho - N.
  b.max_component_dim = b.intersection_dim + n - rho;
  b.bound = n - b.max_component_dim;
  return b;
}

}  // namespace permvar
