#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "permvar/groebner/groebner.hpp"
#include "permvar/ring/poly_matrix.hpp"

namespace permvar {

enum class SliceKind { Hankel2xn, Circulant3, Circulant4, Circulant2xn };

struct SliceSpec {
  SliceKind kind = SliceKind::Circulant3;
  /// n for Hankel2xn, k for Circulant2xn; unused otherwise.
  std::size_t param = 0;

  std::string name() const;
  /// "hankel2xn:5", "circulant3", "circulant4", "circulant2xn:4".
  static SliceSpec parse(const std::string& text);
};

PolyMatrix build_slice(const SliceSpec& spec, MonomialOrder order, CoeffDomain domain);

/// A linear map into `source`: variable i of source goes to images[i], a
/// linear form of target.
struct LinearSlice {
  RingPtr source;
  RingPtr target;
  std::vector<MPoly> images;

  /// Dimension of the image linear space.
  std::size_t rank() const;
  MPoly apply(const MPoly& f) const;
};

/// Identifies the entries of `m` with the variables of the grid ring of
/// the same shape, row-major.
LinearSlice slice_from_matrix(const PolyMatrix& m, const RingPtr& grid);
LinearSlice identity_slice(const RingPtr& ring);

struct SliceBound {
  std::size_t ambient = 0;      ///< N
  std::size_t slice_vars = 0;   ///< s
  std::size_t slice_rank = 0;   ///< dim L
  long sliced_height = 0;
  long preimage_dim = 0;        ///< s - ht
  long intersection_dim = 0;    ///< dim(X cap L)
  long max_component_dim = 0;  ///< upper bound on dim X
  long bound = 0;               ///< lower bound on codim X

  nlohmann::json to_json() const;
};

/// Lower bound on the codimension of every component of V(I) meeting L,
/// from the height of the pulled-back ideal. For homogeneous I every
/// component meets L.
SliceBound slice_codim_bound(std::span<const MPoly> gens, const LinearSlice& slice, const GbOptions& opts = {});

}  // namespace permvar
