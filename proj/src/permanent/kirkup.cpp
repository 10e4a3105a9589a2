#include "permvar/permanent/kirkup.hpp"

#include "permvar/errors.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/permanent/permanent.hpp"

namespace permvar {

QMatrix kirkup_matrix(std::size_t k) {
  if (k < 3) throw PreconditionError("Kirkup matrices are defined for k >= 3");
  if (k > 20) throw CapacityError("Kirkup verification limited to k <= 20");
  const long kk = static_cast<long>(k);
  QMatrix m(k, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j + 2 < k + 1; ++j) m(i, j) = 1;
  for (std::size_t i = 0; i + 2 < k; ++i) {
    m(i, k - 1) = 1;
    m(i, k) = 2 - 3 * kk;
  }
  m(k - 2, k - 1) = 2 - 2 * kk;
  m(k - 2, k) = (kk - 2) * (kk - 1);
  m(k - 1, k - 1) = kk;
  m(k - 1, k) = (2 * kk - 1) * (kk - 2);

  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  ZMatrix z(k, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j) z(i, j) = m(i, j).get_num();
  auto dp = subset_permanents<mpz_class>(z, rows, 0, 1);
  for (auto cs : colex_subsets(k + 1, k))
    if (sgn(dp[cs]) != 0)
      throw InternalError("Kirkup matrix for k=" + std::to_string(k) + " has a nonvanishing maximal permanent");
  return m;
}

const char* to_string(DerivMode m) {
  return m == DerivMode::B1 ? "B1" : "L";
}

DerivMode parse_deriv_mode(const std::string& s) {
  if (s == "B1" || s == "b1") return DerivMode::B1;
  if (s == "L" || s == "l" || s == "lp") return DerivMode::L;
  throw ParseError("unknown derivative-matrix mode '" + s + "' (B1, L)");
}

std::size_t deriv_k(const QMatrix& a, DerivMode mode) {
  std::size_t min_rows = mode == DerivMode::B1 ? 2 : 1;
  if (a.cols() != a.rows() + 2 || a.rows() < min_rows)
    throw StructuralError(std::string("mode ") + to_string(mode) + " needs a " +
                          (mode == DerivMode::B1 ? "(k-1) x (k+1)" : "(k-2) x k") + " input with k >= 3, got " +
                          std::to_string(a.rows()) + " x " + std::to_string(a.cols()));
  return mode == DerivMode::B1 ? a.rows() + 1 : a.rows() + 2;
}

namespace {

template <class T>
Dense<T> derivative_impl(const Dense<T>& a, const T& zero, const T& one) {
  const std::size_t n = a.cols();
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  auto dp = subset_permanents(a, rows, zero, one);
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  Dense<T> out(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out(i, j) = dp[full & ~(std::uint64_t(1) << i) & ~(std::uint64_t(1) << j)];
  return out;
}

}  // namespace

QMatrix derivative_matrix(const QMatrix& a, DerivMode mode) {
  deriv_k(a, mode);
  return derivative_impl<mpq_class>(a, 0, 1);
}

FpMatrix derivative_matrix(const FpMatrix& a) {
  if (a.cols() != a.rows() + 2 || a.rows() == 0) throw StructuralError("derivative matrix needs an r x (r+2) input");
  std::uint64_t p = a(0, 0).modulus();
  return derivative_impl<Fp>(a, Fp(0, p), Fp(1, p));
}

PolyMatrix derivative_matrix(const PolyMatrix& a) {
  if (a.cols() != a.rows() + 2) throw StructuralError("derivative matrix needs an r x (r+2) input");
  const std::size_t n = a.cols();
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  auto dp = subset_expansion(a, rows, false);
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  PolyMatrix out(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.set(i, j, dp[full & ~(std::uint64_t(1) << i) & ~(std::uint64_t(1) << j)]);
  return out;
}

KirkupGenerators kirkup_generators(std::size_t k, MonomialOrder order, CoeffDomain domain, bool with_g) {
  if (k < 3) throw PreconditionError("Kirkup generators are defined for k >= 3");
  if (k > kKirkupGeneratorBound)
    throw CapacityError("symbolic Kirkup generators limited to k <= " + std::to_string(kKirkupGeneratorBound));
  KirkupGenerators out;
  out.ring = PolyRing::create(VarUniverse(k, k + 1), order, domain);
  const auto& ring = out.ring;
  PolyMatrix m = PolyMatrix::generic(ring);

  // d[l][i][j] = M_{l,i,j}
  std::vector<std::vector<std::vector<MPoly>>> d(
      k, std::vector<std::vector<MPoly>>(k + 1, std::vector<MPoly>(k + 1, ring->zero())));
  for (std::size_t j = 0; j <= k; ++j) {
    MPoly pj = perm_omitting_column(m, j);
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t i = 0; i <= k; ++i) d[l][i][j] = pj.diff(ring->universe().grid_index(l, i));
  }

  for (std::size_t j = 0; j <= k; ++j) {
    PolyMatrix a(ring, k, k + 1), c(ring, k, k);
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t i = 0; i <= k; ++i) {
        a.set(l, i, d[l][i][j]);
        if (i != j) c.set(l, i < j ? i : i - 1, d[l][i][j]);
      }
    out.f.push_back(matrix_det(c));
    out.A.push_back(std::move(a));
    out.C.push_back(std::move(c));
  }
  for (std::size_t l = 0; l < k; ++l) {
    PolyMatrix b(ring, k + 1, k + 1);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) b.set(i, j, d[l][i][j]);
    if (with_g) out.g.push_back(matrix_det(b));
    out.B.push_back(std::move(b));
  }
  return out;
}

}  // namespace permvar
