#include "permvar/ring/poly_matrix.hpp"

#include <bit>
#include <unordered_map>

#include "permvar/errors.hpp"

namespace permvar {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, MPoly(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<MPoly> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw StructuralError("matrix entry count does not match its shape");
  for (const auto& p : e_)
    if (p.ring() && !p.ring()->same_as(*ring_)) throw StructuralError("matrix entries must share one ring");
}

PolyMatrix PolyMatrix::generic(const RingPtr& ring) {
  const auto& u = ring->universe();
  PolyMatrix m(ring, u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) m.set(i, j, ring->grid_variable(i, j));
  return m;
}

PolyMatrix PolyMatrix::constant(const RingPtr& ring, const QMatrix& q) {
  PolyMatrix m(ring, q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) m.set(i, j, ring->constant(ring->scalar(q(i, j))));
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, MPoly p) {
  if (i >= rows_ || j >= cols_) throw StructuralError("matrix index out of range");
  if (p.ring() && !p.ring()->same_as(*ring_)) throw StructuralError("matrix entries must share one ring");
  e_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix m(ring_, rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m.set(a, b, (*this)(rows[a], cols[b]));
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, (*this)(i, j));
  return m;
}

PolyMatrix PolyMatrix::substitute(std::span<const MPoly> images) const {
  if (e_.empty()) return *this;
  RingPtr target = images.empty() ? ring_ : images.front().ring();
  std::vector<MPoly> out;
  out.reserve(e_.size());
  for (const auto& p : e_) out.push_back(p.substitute(images));
  return PolyMatrix(target, rows_, cols_, std::move(out));
}

bool PolyMatrix::is_constant() const {
  for (const auto& p : e_)
    if (!p.is_constant()) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

ScalarMatrix PolyMatrix::to_scalars() const {
  if (!is_constant()) throw StructuralError("matrix has non-constant entries");
  ScalarMatrix s(rows_, cols_, Scalar::zero(ring_->domain()));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j).constant_term();
  return s;
}

QMatrix PolyMatrix::to_rationals() const {
  if (ring_->domain().is_prime_field()) throw StructuralError("prime-field matrix has no rational entries");
  auto s = to_scalars();
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = s(i, j).rational();
  return q;
}

std::string PolyMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> colex_subsets(std::size_t n, std::size_t h) {
  if (n > 63) throw CapacityError("subset enumeration limited to 63 elements");
  std::vector<std::uint64_t> out;
  if (h > n) return out;
  if (h == 0) return {0};
  // Gosper's hack walks same-popcount masks in increasing numeric order,
  // which is colex order on the subsets.
  std::uint64_t s = (std::uint64_t(1) << h) - 1;
  const std::uint64_t limit = std::uint64_t(1) << n;
  while (s < limit) {
    out.push_back(s);
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

std::vector<std::size_t> mask_members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::vector<MPoly> subset_expansion(const PolyMatrix& m, std::span<const std::size_t> row_idx, bool alternating) {
  const std::size_t n = m.cols();
  const std::size_t h = row_idx.size();
  if (n > 24) throw CapacityError("subset expansion limited to 24 columns");
  if (h > n) throw StructuralError("more rows than columns in subset expansion");
  const RingPtr& ring = m.ring();
  std::vector<MPoly> dp(std::size_t(1) << n);
  dp[0] = ring->one();
  for (std::size_t t = 1; t <= h; ++t) {
    std::size_t r = row_idx[t - 1];
    for (auto mask : colex_subsets(n, t)) {
      MPoly acc(ring);
      std::size_t idx = 0;
      for (auto c : mask_members(mask)) {
        const MPoly& entry = m(r, c);
        const MPoly& rest = dp[mask & ~(std::uint64_t(1) << c)];
        if (!entry.is_zero() && !rest.is_zero()) {
          MPoly prod = entry * rest;
          if (alternating && ((t - 1 + idx) & 1))
            acc -= prod;
          else
            acc += prod;
        }
        ++idx;
      }
      dp[mask] = std::move(acc);
    }
  }
  // Drop the intermediate layers.
  for (std::size_t mask = 0; mask < dp.size(); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) != h) dp[mask] = MPoly();
  return dp;
}

MPoly matrix_det(const PolyMatrix& m, std::size_t symbolic_bound) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  const RingPtr& ring = m.ring();
  if (m.rows() == 0) return ring->one();
  if (m.is_constant()) return ring->constant(det(m.to_scalars()));
  if (m.rows() > symbolic_bound)
    throw CapacityError("symbolic determinant of size " + std::to_string(m.rows()) + " exceeds the bound " +
                        std::to_string(symbolic_bound));
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  auto dp = subset_expansion(m, rows, true);
  return dp[(std::uint64_t(1) << m.cols()) - 1];
}

std::vector<MPoly> subexpansions(std::size_t h, const PolyMatrix& m, bool alternating) {
  if (h > std::min(m.rows(), m.cols())) throw StructuralError("minor size exceeds matrix dimensions");
  auto row_sets = colex_subsets(m.rows(), h);
  std::vector<std::vector<MPoly>> by_rows;
  by_rows.reserve(row_sets.size());
  for (auto rs : row_sets) {
    auto rows = mask_members(rs);
    by_rows.push_back(subset_expansion(m, rows, alternating));
  }
  std::vector<MPoly> out;
  for (auto cs : colex_subsets(m.cols(), h))
    for (std::size_t r = 0; r < row_sets.size(); ++r) {
      MPoly p = std::move(by_rows[r][cs]);
      out.push_back(p.ring() ? std::move(p) : m.ring()->zero());
    }
  return out;
}

std::vector<MPoly> matrix_minors(std::size_t h, const PolyMatrix& m) {
  return subexpansions(h, m, true);
}

std::size_t poly_family_rank(std::span<const MPoly> fs) {
  if (fs.empty()) return 0;
  const RingPtr& ring = fs.front().ring();
  std::unordered_map<Monomial, std::size_t, MonomialHash> cols;
  for (const auto& f : fs) {
    if (!f.ring()->same_as(*ring)) throw StructuralError("polynomial family spans several rings");
    for (const auto& t : f.terms()) cols.emplace(t.mono, cols.size());
  }
  if (cols.empty()) return 0;
  const auto& dom = ring->domain();
  if (dom.is_prime_field()) {
    FpMatrix a(fs.size(), cols.size(), Fp(0, dom.modulus()));
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (const auto& t : fs[i].terms()) a(i, cols.at(t.mono)) = t.coef.to_fp();
    return rank(a);
  }
  QMatrix a(fs.size(), cols.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& t : fs[i].terms()) a(i, cols.at(t.mono)) = t.coef.rational();
  return rank(a);
}

}  // namespace permvar
