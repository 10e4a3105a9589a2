#include <random>

#include "doctest.h"
#include "permvar/errors.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/permanent/kirkup.hpp"
#include "permvar/torus/torus.hpp"

using namespace permvar;

namespace {

QMatrix random_q(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

QMatrix drop_first_rows(const QMatrix& m, std::size_t n) {
  QMatrix out(m.rows() - n, m.cols());
  for (std::size_t i = n; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i - n, j) = m(i, j);
  return out;
}

std::vector<mpq_class> as_q(const std::vector<mpz_class>& v) { return {v.begin(), v.end()}; }

std::vector<Scalar> point_of(const RingPtr& ring, const QMatrix& m) {
  std::vector<Scalar> pt;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) pt.push_back(ring->scalar(m(i, j)));
  return pt;
}

}  // namespace

TEST_CASE("limit map") {
  WeightAssignment w(3, 4, {0});
  auto k3 = kirkup_matrix(3);
  auto lim = limit_map(k3, w);
  for (std::size_t j = 0; j < 4; ++j) CHECK(lim(0, j) == 0);
  CHECK(drop_first_rows(lim, 1) == drop_first_rows(k3, 1));
  CHECK(limit_map(lim, w) == lim);
  CHECK(is_fixed(lim, w));
  CHECK_FALSE(is_fixed(k3, w));
  CHECK(limit_map(QMatrix(3, 4), w) == QMatrix(3, 4));
  CHECK_THROWS_AS(WeightAssignment(3, 4, {}), PreconditionError);
  CHECK_THROWS_AS(WeightAssignment(2, 4, {0, 1}), PreconditionError);
}

TEST_CASE("classify_type examples") {
  std::mt19937_64 rng(11);
  auto generic = classify_type(random_q(rng, 2, 4, -999, 999), DerivMode::B1);
  CHECK(generic.corank == 0);
  CHECK(generic.type == 0);

  auto kirk = classify_type(drop_first_rows(kirkup_matrix(3), 1), DerivMode::B1);
  CHECK(kirk.rank == 3);
  CHECK(kirk.corank == 1);
  REQUIRE(kirk.kernel_basis.size() == 1);
  CHECK(kirk.kernel_basis[0] == std::vector<mpz_class>{1, 1, 1, -7});
  CHECK(kirk.to_json()["type"] == 1);

  for (std::size_t k = 3; k <= 6; ++k) {
    auto a = random_q(rng, k - 1, k + 1, -9, 9);
    for (std::size_t i = 0; i < k - 1; ++i) a(i, 2) = 0;
    auto rep = classify_type(a, DerivMode::B1);
    CHECK(rep.rank == 2);
    CHECK(rep.type == k - 1);
  }
}

TEST_CASE("Kirkup points have B1 rank k") {
  for (std::size_t k = 3; k <= 8; ++k) {
    auto rep = classify_type(drop_first_rows(kirkup_matrix(k), 1), DerivMode::B1);
    CHECK(rep.rank == k);
    CHECK(rep.type == 1);
  }
}

TEST_CASE("kernel extension examples") {
  auto ap = drop_first_rows(kirkup_matrix(3), 1);
  std::vector<std::vector<mpq_class>> q{{1, 1, 1, -7}};
  CHECK(kernel_extension_check(ap, q, DerivMode::B1));
  std::vector<std::vector<mpq_class>> zero{{0, 0, 0, 0}};
  CHECK(kernel_extension_check(ap, zero, DerivMode::B1));
  std::mt19937_64 rng(3);
  std::vector<std::vector<mpq_class>> e1{{1, 0, 0, 0}};
  CHECK_FALSE(kernel_extension_check(random_q(rng, 2, 4, -999, 999), e1, DerivMode::B1));
  CHECK_THROWS_AS(kernel_extension_check(ap, std::vector<std::vector<mpq_class>>{}, DerivMode::B1), StructuralError);
}

TEST_CASE("kernel extension matches the kernel") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 60; ++it) {
    DerivMode mode = it % 2 ? DerivMode::L : DerivMode::B1;
    std::size_t k = 3 + (it / 2) % 3;
    std::size_t rows = mode == DerivMode::B1 ? k - 1 : k - 2;
    auto a = random_q(rng, rows, rows + 2, -3, 3);
    // Degenerate columns make nontrivial kernels common.
    for (std::size_t i = 0; i < rows; ++i) a(i, it % (rows + 2)) = 0;
    auto rep = classify_type(a, mode);
    auto d = derivative_matrix(a, mode);
    std::vector<mpq_class> in_ker(rows + 2, 0);
    std::uniform_int_distribution<int> c(-5, 5);
    for (const auto& v : rep.kernel_basis) {
      int s = c(rng);
      for (std::size_t j = 0; j < v.size(); ++j) in_ker[j] += s * v[j];
    }
    auto off = as_q(std::vector<mpz_class>(rows + 2, 0));
    for (auto& x : off) x = c(rng);
    bool off_in_kernel = true;
    for (const auto& x : mat_vec(d, off)) off_in_kernel = off_in_kernel && x == 0;

    if (mode == DerivMode::B1) {
      CHECK(kernel_extension_check(a, std::vector<std::vector<mpq_class>>{in_ker}, mode));
      CHECK(kernel_extension_check(a, std::vector<std::vector<mpq_class>>{off}, mode) == off_in_kernel);
    } else {
      CHECK(kernel_extension_check(a, std::vector<std::vector<mpq_class>>{in_ker, in_ker}, mode));
      CHECK(kernel_extension_check(a, std::vector<std::vector<mpq_class>>{in_ker, off}, mode) == off_in_kernel);
    }
  }
}

TEST_CASE("E-pattern matrices have rank k") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-50, 50);
  for (std::size_t k = 3; k <= 8; ++k)
    for (int it = 0; it < 20; ++it) {
      long a = 0, b = 0;
      while (a == 0) a = d(rng);
      while (b == 0) b = d(rng);
      CHECK(rank(e_pattern_matrix(k, a, b)) == k);
    }
}

TEST_CASE("Jacobian ranks") {
  auto fp = CoeffDomain::prime_field(2147483647ULL);
  auto gens = permanental_ideal({3, 4}, MonomialOrder::degrevlex(), fp);
  auto ring = gens[0].ring();
  std::mt19937_64 rng(5);
  CHECK(jacobian_rank_at(gens, point_of(ring, random_q(rng, 3, 4, -999, 999))) == 4);
  std::vector<MPoly> consts{ring->constant(3), ring->constant(5)};
  CHECK(jacobian_rank_at(consts, point_of(ring, random_q(rng, 3, 4, -9, 9))) == 0);
  auto p25 = permanental_ideal({2, 5}, MonomialOrder::degrevlex(), fp);
  for (int it = 0; it < 10; ++it)
    CHECK(jacobian_rank_at(p25, point_of(p25[0].ring(), random_q(rng, 2, 5, -999, 999))) <= 9);
}

TEST_CASE("tangent decomposition") {
  auto q = CoeffDomain::rationals();
  auto gens = permanental_ideal({3, 4}, MonomialOrder::degrevlex(), q);
  WeightAssignment w(3, 4, {0});
  auto kp = limit_map(kirkup_matrix(3), w);
  auto s = tangent_decomposition(kp, w, gens);
  CHECK(s.t1 == 1);
  CHECK(s.t0 == 8);
  CHECK(s.agrees());

  std::mt19937_64 rng(17);
  auto g = limit_map(random_q(rng, 3, 4, -999, 999), w);
  auto sg = tangent_decomposition(g, w, gens);
  CHECK(sg.t1 == 0);
  CHECK(sg.agrees());
  auto sz = tangent_decomposition(QMatrix(3, 4), w, gens);
  CHECK(sz.t1 == 4);
  CHECK(sz.agrees());
  CHECK_THROWS_AS(tangent_decomposition(kirkup_matrix(3), w, gens), PreconditionError);

  // Sing of the 4 x 4 permanent hypersurface, two rows of weight one.
  auto sing = permanental_ideal({4, 4, 3}, MonomialOrder::degrevlex(), q);
  WeightAssignment w2(4, 4, {0, 1});
  for (int it = 0; it < 10; ++it) {
    auto a = random_q(rng, 4, 4, -3, 3);
    if (it % 2) a(2, it % 4) = a(3, it % 4) = 0;
    auto split = tangent_decomposition(limit_map(a, w2), w2, sing);
    REQUIRE(split.formula_t1);
    CHECK(split.agrees());
    CHECK(split.t1 % 2 == 0);
  }
}
