#include <random>

#include "doctest.h"
#include "permvar/errors.hpp"
#include "permvar/ring/poly_io.hpp"
#include "permvar/ring/poly_matrix.hpp"

using namespace permvar;

namespace {

RingPtr named_ring(std::vector<std::string> names, CoeffDomain d = CoeffDomain::rationals(),
                   MonomialOrder o = MonomialOrder::degrevlex()) {
  return PolyRing::create(VarUniverse::named(std::move(names)), o, d);
}

RingPtr grid_ring(std::size_t k, std::size_t n, CoeffDomain d = CoeffDomain::rationals()) {
  return PolyRing::create(VarUniverse(k, n), MonomialOrder::degrevlex(), d);
}

MPoly P(const RingPtr& r, std::string_view s) { return parse_poly(r, s); }

}  // namespace

TEST_CASE("scalar domains") {
  CHECK(is_prime_u64(2147483647ULL));
  CHECK(is_prime_u64(1073741789ULL));
  CHECK_FALSE(is_prime_u64(1073741791ULL * 3));
  CHECK_THROWS_AS(CoeffDomain::prime_field(100), Error);
  CHECK_THROWS_AS(CoeffDomain::prime_field(4294967311ULL), Error);

  auto q = CoeffDomain::rationals();
  Scalar a = Scalar::parse(q, "6/4");
  CHECK(a.to_string() == "3/2");
  CHECK_THROWS(Scalar::parse(CoeffDomain::integers(), "1/2"));

  auto f = CoeffDomain::prime_field(7);
  Scalar b = Scalar::parse(f, "-1");
  CHECK(b.residue() == 6);
  CHECK((b * b).is_one());
  CHECK((Scalar(f, 3L) * Scalar(f, 3L).inverse()).is_one());
  CHECK_THROWS_AS(Scalar(f, 1L) + Scalar(q, 1L), StructuralError);
}

TEST_CASE("mpoly_mul examples") {
  auto r = named_ring({"x", "y"});
  auto s = P(r, "x + y");
  CHECK((s * s) == P(r, "x^2 + 2*x*y + y^2"));
  CHECK((s * r->zero()).is_zero());
  auto g = grid_ring(2, 2);
  auto p2 = P(g, "x_1_1*x_2_2 + x_1_2*x_2_1");
  CHECK((p2 * g->one()) == p2);
  CHECK_THROWS_AS(s * p2, StructuralError);
}

TEST_CASE("mpoly_diff examples") {
  auto g = grid_ring(2, 2);
  auto p2 = P(g, "x_1_1*x_2_2 + x_1_2*x_2_1");
  CHECK(p2.diff(0) == P(g, "x_2_2"));
  CHECK(g->constant(5).diff(1).is_zero());

  auto g3 = grid_ring(3, 3);
  auto perm3 = P(g3,
                 "x_1_1*x_2_2*x_3_3 + x_1_1*x_2_3*x_3_2 + x_1_2*x_2_1*x_3_3 + x_1_2*x_2_3*x_3_1 + "
                 "x_1_3*x_2_1*x_3_2 + x_1_3*x_2_2*x_3_1");
  CHECK(perm3.diff(g3->universe().grid_index(0, 0)) == P(g3, "x_2_2*x_3_3 + x_2_3*x_3_2"));
}

TEST_CASE("mpoly_substitute, linear part, evaluate") {
  auto r = named_ring({"x"});
  auto x2 = P(r, "x^2");
  std::vector<MPoly> id{r->variable(0)};
  CHECK(x2.substitute(id) == x2);
  std::vector<MPoly> shift{P(r, "x + 1")};
  CHECK(x2.substitute(shift) == P(r, "x^2 + 2*x + 1"));
  std::vector<Scalar> one{r->scalar(1)};
  CHECK(translate(x2, one) == P(r, "x^2 + 2*x + 1"));

  CHECK(P(r, "x^2 + 3*x + 5").linear_part() == P(r, "3*x"));
  auto r2 = named_ring({"x", "y"});
  CHECK(P(r2, "x^2 + x*y").linear_part().is_zero());

  auto g = grid_ring(2, 2);
  std::vector<Scalar> ones(4, g->scalar(1));
  CHECK(P(g, "x_1_1*x_2_2 + x_1_2*x_2_1").evaluate(ones) == g->scalar(2));
  CHECK(g->zero().evaluate(ones).is_zero());
}

TEST_CASE("text and JSON round trip") {
  auto g = grid_ring(2, 3);
  auto p = P(g, "3*x_1_2^2*x_2_1 - 7");
  CHECK(p.to_string() == "3*x_1_2^2*x_2_1 - 7");
  CHECK(P(g, p.to_string()) == p);
  CHECK(P(g, "(x_1_1 - 1/2)*(x_1_1 + 1/2)").to_string() == "x_1_1^2 - 1/4");
  CHECK(P(g, "-x_1_1 + x_2_3").to_string() == "-x_1_1 + x_2_3");
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(to_json(poly_from_json(to_json(p))).dump() == to_json(p).dump());
  CHECK_THROWS_AS(P(g, "x_3_1"), ParseError);
  CHECK_THROWS_AS(P(g, "x_1_1 +"), ParseError);

  auto inferred = infer_ring("x_2_3*a + b", MonomialOrder::degrevlex(), CoeffDomain::rationals());
  CHECK(inferred->universe().rows() == 2);
  CHECK(inferred->universe().cols() == 3);
  CHECK(inferred->nvars() == 8);
}

TEST_CASE("monomial order axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(0, 3);
  for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
    for (int it = 0; it < 300; ++it) {
      auto rand_mono = [&] {
        std::vector<std::uint16_t> e(5);
        for (auto& x : e) x = static_cast<std::uint16_t>(dist(rng));
        return Monomial(e);
      };
      Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
      int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(a, Monomial(5)) >= 0);
      if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  for (auto dom : {CoeffDomain::rationals(), CoeffDomain::prime_field(2147483647ULL)}) {
    auto r = named_ring({"a", "b", "c"}, dom);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, 2), len(0, 4);
    auto rand_poly = [&] {
      std::vector<Term> t;
      int n = len(rng);
      for (int i = 0; i < n; ++i)
        t.push_back({Monomial({std::uint16_t(ex(rng)), std::uint16_t(ex(rng)), std::uint16_t(ex(rng))}),
                     r->scalar(coef(rng))});
      return MPoly(r, t);
    };
    for (int it = 0; it < 100; ++it) {
      auto p = rand_poly(), q = rand_poly(), s = rand_poly();
      CHECK(p * q == q * p);
      CHECK((p * q) * s == p * (q * s));
      CHECK(p * (q + s) == p * q + p * s);
      CHECK((p - p).is_zero());
    }
  }
}

TEST_CASE("matrix_det examples") {
  auto r = named_ring({"a", "b", "c", "d"});
  PolyMatrix m2(r, 2, 2, {P(r, "a"), P(r, "b"), P(r, "c"), P(r, "d")});
  CHECK(matrix_det(m2) == P(r, "a*d - b*c"));

  auto z = r->zero();
  auto one = r->one();
  auto a = P(r, "a"), b = P(r, "b"), c = P(r, "c"), d = P(r, "d");
  PolyMatrix q(r, 5, 5,
               {a, d, z, a * c + b * d, a, d, c, one, z, one, one, z, z, c, z, z, one, z, d, z, z, z, one, z, d});
  CHECK(matrix_det(q) == P(r, "d*(d^2 - d*b + 2*a*c - d + b)"));

  PolyMatrix m9(r, 9, 9);
  for (std::size_t i = 0; i < 9; ++i) m9.set(i, i, a);
  CHECK_THROWS_AS(matrix_det(m9), CapacityError);
  CHECK_THROWS_AS(matrix_det(PolyMatrix(r, 2, 3)), StructuralError);
}

TEST_CASE("det(S) = -2 a^h b1 b2") {
  for (std::size_t h = 1; h <= 3; ++h) {
    std::vector<std::string> names{"a", "b1", "b2"};
    std::size_t n = h + 2;
    for (std::size_t j = 0; j + 1 < n; ++j) names.push_back("y" + std::to_string(j));
    auto r = named_ring(names);
    auto a = r->variable(0), b1 = r->variable(1), b2 = r->variable(2);
    PolyMatrix s(r, n, n);
    for (std::size_t i = 0; i <= h; ++i) s.set(i, i, a);
    s.set(0, n - 1, b2);
    s.set(1, n - 1, b1);
    s.set(n - 1, 0, b1);
    s.set(n - 1, 1, b2);
    for (std::size_t j = 2; j + 1 < n; ++j) s.set(n - 1, j, r->variable(3 + j));
    MPoly expect = (a.pow(static_cast<unsigned>(h)) * b1 * b2).scaled(r->scalar(-2));
    CHECK(matrix_det(s) == expect);
  }
}

TEST_CASE("symbolic and elimination determinants agree") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-9, 9);
  auto r = named_ring({"t"});
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int it = 0; it < 5; ++it) {
      PolyMatrix sym(r, n, n);
      QMatrix q(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          long v = dist(rng);
          q(i, j) = v;
          sym.set(i, j, r->constant(v));
        }
      std::vector<std::size_t> rows(n);
      for (std::size_t i = 0; i < n; ++i) rows[i] = i;
      auto dp = subset_expansion(sym, rows, true);
      MPoly cof = dp[(std::uint64_t(1) << n) - 1];
      CHECK(cof == matrix_det(sym));
      CHECK(cof.constant_term().rational() == det(q));
    }
  }
}

TEST_CASE("matrix_minors examples") {
  auto r = named_ring({"t"});
  auto m = PolyMatrix::constant(r, qmatrix({{1, 0, 1}, {0, 1, 1}}));
  auto ms = matrix_minors(2, m);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == r->constant(1));
  CHECK(ms[1] == r->constant(1));
  CHECK(ms[2] == r->constant(-1));
  auto ones = matrix_minors(1, m);
  REQUIRE(ones.size() == 6);
  // column-major: (0,0), (1,0), (0,1), ...
  CHECK(ones[1] == r->zero());
  CHECK(ones[2] == r->zero());
  auto g = grid_ring(6, 6);
  CHECK(matrix_minors(3, PolyMatrix::generic(g)).size() == 400);
}

TEST_CASE("poly_family_rank") {
  auto r = named_ring({"x", "y"});
  std::vector<MPoly> none;
  CHECK(poly_family_rank(none) == 0);
  auto p = P(r, "x*y + 1");
  std::vector<MPoly> fam{p, p.scaled(r->scalar(2))};
  CHECK(poly_family_rank(fam) == 1);
}

TEST_CASE("kernel basis and ranks") {
  auto b1 = qmatrix({{0, -14, 7, -1}, {-14, 0, 7, -1}, {7, 7, 0, 2}, {-1, -1, 2, 0}});
  CHECK(rank(b1) == 3);
  auto ker = kernel_basis(b1);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<mpz_class>{1, 1, 1, -7});
  CHECK(rank(reduce_mod(b1, 2147483647ULL)) == 3);
  CHECK(det(b1) == 0);
}
