#include "permvar/ring/linalg.hpp"

namespace permvar {

QMatrix qmatrix(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw StructuralError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix to_qmatrix(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = mpq_class(m(i, j));
  return q;
}

FpMatrix reduce_mod(const QMatrix& m, std::uint64_t p) {
  FpMatrix f(m.rows(), m.cols(), Fp(0, p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = Fp::from_mpq(m(i, j), p);
  return f;
}

std::size_t rank(const QMatrix& m) {
  QMatrix w = m;
  return rref_in_place(w).size();
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix w = m;
  return rref_in_place(w).size();
}

namespace {

QMatrix scalar_to_q(const ScalarMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).rational();
  return q;
}

FpMatrix scalar_to_fp(const ScalarMatrix& m, std::uint64_t p) {
  FpMatrix f(m.rows(), m.cols(), Fp(0, p));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = m(i, j).to_fp();
  return f;
}

}  // namespace

std::size_t rank(const ScalarMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const auto& d = m(0, 0).domain();
  if (d.is_prime_field()) return rank(scalar_to_fp(m, d.modulus()));
  return rank(scalar_to_q(m));
}

mpq_class det(const QMatrix& m) {
  return bareiss_det<mpq_class>(m, mpq_class(0), mpq_class(1));
}

Scalar det(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  if (m.rows() == 0) throw StructuralError("determinant of an empty matrix needs a domain");
  const auto& d = m(0, 0).domain();
  return bareiss_det<Scalar>(m, Scalar::zero(d), Scalar::one(d));
}

std::vector<std::vector<mpz_class>> kernel_basis(const QMatrix& m) {
  QMatrix w = m;
  auto pivots = rref_in_place(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, free);

    mpz_class den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> z(v.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      mpq_class s = v[i] * den;
      z[i] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    int lead = 0;
    for (const auto& x : z)
      if (sgn(x) != 0) {
        lead = sgn(x);
        break;
      }
    if (lead < 0) g = -g;
    for (auto& x : z) x /= g;
    basis.push_back(std::move(z));
  }
  return basis;
}

std::vector<mpq_class> mat_vec(const QMatrix& m, const std::vector<mpq_class>& v) {
  if (v.size() != m.cols()) throw StructuralError("vector length does not match matrix columns");
  std::vector<mpq_class> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace permvar
