#include "permvar/permanent/permanent.hpp"

namespace permvar {

MPoly perm_symbolic(const PolyMatrix& m, std::size_t bound) {
  if (m.rows() != m.cols()) throw StructuralError("permanent of a non-square matrix");
  if (m.rows() > bound)
    throw CapacityError("symbolic permanent of size " + std::to_string(m.rows()) + " exceeds the bound " +
                        std::to_string(bound) + "; evaluate numerically or raise the bound");
  if (m.rows() == 0) return m.ring()->one();
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return subset_expansion(m, rows, false)[(std::uint64_t(1) << m.cols()) - 1];
}

namespace {

bool all_integral(const QMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() != 1) return false;
  return true;
}

}  // namespace

mpq_class perm_numeric(const QMatrix& a, PermEngine engine) {
  if (a.rows() != a.cols()) throw StructuralError("permanent of a non-square matrix");
  if (engine == PermEngine::Ryser && all_integral(a)) {
    // Integer matrices stay in mpz to avoid gcd work on every update.
    ZMatrix z(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) z(i, j) = a(i, j).get_num();
    return mpq_class(perm_ryser<mpz_class>(z, mpz_class(0), mpz_class(1)));
  }
  if (engine == PermEngine::Ryser) return perm_ryser<mpq_class>(a, mpq_class(0), mpq_class(1));
  return perm_glynn<mpq_class>(a, mpq_class(0), mpq_class(1), mpq_class(1, 2));
}

Fp perm_numeric(const FpMatrix& a, PermEngine engine) {
  if (a.rows() != a.cols()) throw StructuralError("permanent of a non-square matrix");
  std::uint64_t p = a.rows() ? a(0, 0).modulus() : 2;
  Fp zero(0, p), one(1, p);
  if (engine == PermEngine::Ryser) return perm_ryser<Fp>(a, zero, one);
  if (p == 2) throw PreconditionError("Glynn's formula needs an odd characteristic");
  return perm_glynn<Fp>(a, zero, one, Fp(2, p).inverse());
}

Scalar perm_numeric(const ScalarMatrix& a, PermEngine engine) {
  if (a.rows() != a.cols()) throw StructuralError("permanent of a non-square matrix");
  if (a.rows() == 0) throw StructuralError("permanent of an empty scalar matrix needs a domain");
  const CoeffDomain& d = a(0, 0).domain();
  if (d.is_prime_field()) {
    FpMatrix f(a.rows(), a.cols(), Fp(0, d.modulus()));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) f(i, j) = a(i, j).to_fp();
    return Scalar::from_residue(d, perm_numeric(f, engine).value());
  }
  QMatrix q(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = a(i, j).rational();
  return Scalar(d, perm_numeric(q, engine));
}

namespace {

template <class T>
std::size_t prk_impl(const Dense<T>& a, const T& zero, const T& one) {
  std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t h = top; h >= 1; --h) {
    auto cols = colex_subsets(a.cols(), h);
    for (auto rs : colex_subsets(a.rows(), h)) {
      auto dp = subset_permanents(a, mask_members(rs), zero, one);
      for (auto cs : cols)
        if (!is_zero_value(dp[cs])) return h;
    }
  }
  return 0;
}

}  // namespace

std::size_t prk(const QMatrix& a) {
  return prk_impl<mpq_class>(a, mpq_class(0), mpq_class(1));
}

std::size_t prk(const FpMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::uint64_t p = a(0, 0).modulus();
  return prk_impl<Fp>(a, Fp(0, p), Fp(1, p));
}

}  // namespace permvar
