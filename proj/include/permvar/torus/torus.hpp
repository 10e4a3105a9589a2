#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "permvar/permanent/kirkup.hpp"
#include "permvar/ring/linalg.hpp"
#include "permvar/ring/mpoly.hpp"

namespace permvar {

/// C* acting on k x n matrices: rows in `weight_one` scale by t, the rest
/// are fixed. Row indices are 0-based.
struct WeightAssignment {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> weight_one;

  WeightAssignment(std::size_t rows, std::size_t cols, std::vector<std::size_t> weight_one);
  bool is_weight_one(std::size_t row) const;
  std::vector<std::size_t> weight_zero_rows() const;
};

/// Projection onto the fixed locus: the weight-one rows become zero.
QMatrix limit_map(const QMatrix& p, const WeightAssignment& w);
bool is_fixed(const QMatrix& p, const WeightAssignment& w);

struct TypeReport {
  DerivMode mode = DerivMode::B1;
  std::size_t k = 0;
  QMatrix point;  ///< A_p
  std::size_t size = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::size_t type = 0;
  std::vector<std::vector<mpz_class>> kernel_basis;
  std::optional<std::uint64_t> seed;

  nlohmann::json to_json() const;
};

TypeReport classify_type(const QMatrix& ap, DerivMode mode);

/// Mode B1: all k x k permanents of [q; A_p] vanish. Mode L: for each
/// given q, all (k-1) x (k-1) permanents of [q; A_p] vanish.
bool kernel_extension_check(const QMatrix& ap, std::span<const std::vector<mpq_class>> qs, DerivMode mode);

/// Rank of the Jacobian of fs evaluated at `point`, over the ring's domain.
std::size_t jacobian_rank_at(std::span<const MPoly> fs, std::span<const Scalar> point);

struct TangentSplit {
  std::size_t t0 = 0;
  std::size_t t1 = 0;
  std::size_t fixed_dim = 0;  ///< dim V^T
  /// |R| * corank of B1 (|R| = 1) or L_p (|R| = 2) when the shape allows.
  std::optional<std::size_t> formula_t1;
  bool agrees() const { return t0 == fixed_dim && (!formula_t1 || *formula_t1 == t1); }

  nlohmann::json to_json() const;
};

/// Zariski tangent space of V(gens) at a fixed point p, split by weight.
/// gens must live in the k x n grid ring of p.
TangentSplit tangent_decomposition(const QMatrix& p, const WeightAssignment& w, std::span<const MPoly> gens);

/// k x k: zero diagonal, a elsewhere in the leading (k-1) x (k-1) block,
/// b on the rest of the last row and column.
QMatrix e_pattern_matrix(std::size_t k, const mpq_class& a, const mpq_class& b);

nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace permvar
