#include <random>

#include "doctest.h"
#include "permvar/errors.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/permanent/kirkup.hpp"
#include "permvar/permanent/permanent.hpp"
#include "permvar/ring/poly_io.hpp"

using namespace permvar;

namespace {

const auto QQ = CoeffDomain::rationals();
const auto DRL = MonomialOrder::degrevlex();

RingPtr grid(std::size_t k, std::size_t n) { return PolyRing::create(VarUniverse(k, n), DRL, QQ); }

QMatrix random_q(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("perm_symbolic examples") {
  auto g2 = grid(2, 2);
  CHECK(perm_symbolic(PolyMatrix::generic(g2)) == parse_poly(g2, "x_1_1*x_2_2 + x_1_2*x_2_1"));
  auto g1 = grid(1, 1);
  CHECK(perm_symbolic(PolyMatrix::generic(g1)) == g1->variable(0));
  auto p3 = perm_symbolic(PolyMatrix::generic(grid(3, 3)));
  CHECK(p3.size() == 6);
  for (const auto& t : p3.terms()) CHECK(t.coef.is_one());
  CHECK_THROWS_AS(perm_symbolic(PolyMatrix::generic(grid(8, 8))), CapacityError);
}

TEST_CASE("perm_numeric examples") {
  QMatrix id(4, 4), ones(4, 4, 1);
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
  for (auto e : {PermEngine::Ryser, PermEngine::Glynn}) {
    CHECK(perm_numeric(id, e) == 1);
    CHECK(perm_numeric(ones, e) == 24);
    CHECK(perm_numeric(qmatrix({{1, 1, 1}, {1, 1, -4}, {1, 1, 3}}), e) == 0);
    CHECK(perm_numeric(qmatrix({{1, 1}, {1, -1}}), e) == 0);
  }
}

TEST_CASE("Ryser, Glynn and symbolic agree") {
  std::mt19937_64 rng(1234);
  const std::uint64_t p = 2147483647ULL;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto ring = grid(n, n);
    auto sym = perm_symbolic(PolyMatrix::generic(ring));
    for (int it = 0; it < 20; ++it) {
      auto a = random_q(rng, n, n, -20, 20);
      auto r = perm_numeric(a, PermEngine::Ryser);
      CHECK(r == perm_numeric(a, PermEngine::Glynn));
      std::vector<Scalar> pt;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pt.push_back(ring->scalar(a(i, j)));
      CHECK(sym.evaluate(pt).rational() == r);
      auto fp = reduce_mod(a, p);
      CHECK(perm_numeric(fp, PermEngine::Ryser) == Fp::from_mpq(r, p));
      CHECK(perm_numeric(fp, PermEngine::Glynn) == Fp::from_mpq(r, p));
    }
  }
}

TEST_CASE("perm invariances and multilinearity") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 2 + it % 5;
    auto a = random_q(rng, n, n, -9, 9);
    auto base = perm_numeric(a);
    CHECK(perm_numeric(a.transpose()) == base);
    auto sw = a;
    sw.swap_rows(0, n - 1);
    CHECK(perm_numeric(sw) == base);
    auto ct = a.transpose();
    ct.swap_rows(0, 1);
    CHECK(perm_numeric(ct.transpose()) == base);

    auto b = random_q(rng, n, n, -9, 9);
    QMatrix mix = a, other = a;
    for (std::size_t j = 0; j < n; ++j) {
      other(0, j) = b(0, j);
      mix(0, j) = 3 * a(0, j) - 2 * b(0, j);
    }
    CHECK(perm_numeric(mix) == 3 * base - 2 * perm_numeric(other));
  }
}

TEST_CASE("prk examples and monotonicity") {
  CHECK(prk(QMatrix(3, 4)) == 0);
  for (std::size_t k = 1; k <= 5; ++k) {
    QMatrix id(k, k);
    for (std::size_t i = 0; i < k; ++i) id(i, i) = 1;
    CHECK(prk(id) == k);
  }
  CHECK(prk(kirkup_matrix(3)) == 2);
  CHECK(prk(reduce_mod(kirkup_matrix(3), 2147483647ULL)) == 2);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-1, 1);
  for (int it = 0; it < 50; ++it) {
    QMatrix a(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) a(i, j) = d(rng) * d(rng);
    QMatrix sub(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) sub(i, j) = a(i + 1, j);
    CHECK(prk(sub) <= prk(a));
  }
}

TEST_CASE("permanental_ideal examples") {
  GenericMatrixSpec s23{2, 3, 2};
  auto gens = permanental_ideal(s23, DRL, QQ);
  REQUIRE(gens.size() == 3);
  auto ring = gens[0].ring();
  CHECK(gens[0] == parse_poly(ring, "x_1_1*x_2_2 + x_1_2*x_2_1"));
  CHECK(gens[1] == parse_poly(ring, "x_1_1*x_2_3 + x_1_3*x_2_1"));
  CHECK(gens[2] == parse_poly(ring, "x_1_2*x_2_3 + x_1_3*x_2_2"));
  CHECK(permanental_ideal({2, 5}, DRL, QQ).size() == 10);
  CHECK(permanental_ideal({4, 5}, DRL, QQ).size() == 5);

  auto m = PolyMatrix::generic(grid(3, 4));
  auto all = permanents_of(m, 3);
  for (std::size_t j = 0; j < 4; ++j) CHECK(perm_omitting_column(m, j) == all[3 - j]);
}

TEST_CASE("h x h permanents are linearly independent") {
  auto fs = permanents_of(PolyMatrix::generic(grid(3, 4)), 2);
  CHECK(fs.size() == 18);
  CHECK(poly_family_rank(fs) == 18);
  auto fp = PolyRing::create(VarUniverse(4, 5), DRL, CoeffDomain::prime_field(2147483647ULL));
  for (std::size_t h = 1; h <= 4; ++h) {
    auto hs = permanents_of(PolyMatrix::generic(fp), h);
    CHECK(poly_family_rank(hs) == hs.size());
  }
}

TEST_CASE("pattern matrices") {
  GenericMatrixSpec hk{2, 3, 2, MatrixPattern::Hankel};
  auto h = pattern_matrix(hk, DRL, QQ);
  CHECK(h.to_string() == "[[x0, x1, x2], [x1, x2, x3]]");
  GenericMatrixSpec c3{3, 4, 3, MatrixPattern::CirculantHankel, 5};
  auto m = pattern_matrix(c3, DRL, QQ);
  CHECK(m(2, 3).to_string() == "x_1_1");
  CHECK(m(1, 3).to_string() == "x_1_5");
  GenericMatrixSpec c2{2, 3, 2, MatrixPattern::CirculantHankel};
  auto w = pattern_matrix(c2, DRL, QQ);
  CHECK(w.to_string() == "[[x_1_1, x_1_2, x_1_3], [x_1_2, x_1_3, x_1_1]]");
}

TEST_CASE("kirkup_matrix") {
  CHECK(kirkup_matrix(3) == qmatrix({{1, 1, 1, -7}, {1, 1, -4, 2}, {1, 1, 3, 5}}));
  CHECK(kirkup_matrix(4) ==
        qmatrix({{1, 1, 1, 1, -10}, {1, 1, 1, 1, -10}, {1, 1, 1, -6, 6}, {1, 1, 1, 4, 14}}));
  for (std::size_t k = 3; k <= 10; ++k) CHECK_NOTHROW(kirkup_matrix(k));
  CHECK_THROWS_AS(kirkup_matrix(2), PreconditionError);
}

TEST_CASE("derivative matrices") {
  auto k3 = kirkup_matrix(3);
  QMatrix ap(2, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) ap(i, j) = k3(i + 1, j);
  auto b1 = derivative_matrix(ap, DerivMode::B1);
  CHECK(b1 == qmatrix({{0, -14, 7, -1}, {-14, 0, 7, -1}, {7, 7, 0, 2}, {-1, -1, 2, 0}}));
  auto prod = mat_vec(b1, {1, 1, 1, -7});
  for (const auto& x : prod) CHECK(x == 0);
  CHECK_THROWS_AS(derivative_matrix(QMatrix(2, 3), DerivMode::B1), StructuralError);

  std::mt19937_64 rng(8);
  for (int it = 0; it < 20; ++it) {
    auto a = random_q(rng, 1 + it % 4, 3 + it % 4, -5, 5);
    auto d = derivative_matrix(a, DerivMode::L);
    for (std::size_t i = 0; i < d.rows(); ++i) {
      CHECK(d(i, i) == 0);
      for (std::size_t j = 0; j < d.cols(); ++j) CHECK(d(i, j) == d(j, i));
    }
  }

  auto sym = derivative_matrix(PolyMatrix::generic(grid(2, 4)));
  CHECK(sym.is_symmetric());
  CHECK(sym(0, 1).to_string() == "x_1_4*x_2_3 + x_1_3*x_2_4");
}

TEST_CASE("kirkup_generators at k=3") {
  auto kg = kirkup_generators(3, DRL, QQ);
  REQUIRE(kg.f.size() == 4);
  REQUIRE(kg.g.size() == 3);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t l = 0; l < 3; ++l) CHECK(kg.A[j](l, j).is_zero());
  for (const auto& b : kg.B) CHECK(b.is_symmetric());
  auto k3 = kirkup_matrix(3);
  std::vector<Scalar> pt;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) pt.push_back(kg.ring->scalar(k3(i, j)));
  for (const auto& f : kg.f) {
    CHECK_FALSE(f.is_zero());
    CHECK(f.evaluate(pt).is_zero());
  }
  for (const auto& g : kg.g) CHECK(g.evaluate(pt).is_zero());
  CHECK_THROWS_AS(kirkup_generators(5, DRL, QQ), CapacityError);
}
