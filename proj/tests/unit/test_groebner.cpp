#include <random>

#include "doctest.h"
#include "permvar/errors.hpp"
#include "permvar/groebner/dimension.hpp"
#include "permvar/groebner/groebner.hpp"
#include "permvar/groebner/ideal_ops.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/ring/poly_io.hpp"

using namespace permvar;

namespace {

RingPtr named_ring(std::vector<std::string> names, MonomialOrder o = MonomialOrder::degrevlex(),
                   CoeffDomain d = CoeffDomain::rationals()) {
  return PolyRing::create(VarUniverse::named(std::move(names)), o, d);
}

std::vector<MPoly> P(const RingPtr& r, std::initializer_list<const char*> xs) {
  std::vector<MPoly> out;
  for (auto x : xs) out.push_back(parse_poly(r, x));
  return out;
}

// Textbook division and Buchberger without criteria, used as an oracle.
MPoly naive_reduce(MPoly f, const std::vector<MPoly>& g) {
  MPoly rem(f.ring());
  while (!f.is_zero()) {
    bool done = false;
    for (const auto& q : g) {
      if (q.lead_monomial().divides(f.lead_monomial())) {
        f -= q.times_monomial(f.lead_monomial() / q.lead_monomial(), f.lead_coeff() / q.lead_coeff());
        done = true;
        break;
      }
    }
    if (!done) {
      MPoly lt(f.ring(), {{f.lead_monomial(), f.lead_coeff()}});
      rem += lt;
      f -= lt;
    }
  }
  return rem;
}

std::vector<MPoly> naive_gb(std::vector<MPoly> g) {
  std::erase_if(g, [](const MPoly& p) { return p.is_zero(); });
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto l = Monomial::lcm(g[i].lead_monomial(), g[j].lead_monomial());
      auto s = g[i].times_monomial(l / g[i].lead_monomial(), g[i].lead_coeff().inverse()) -
               g[j].times_monomial(l / g[j].lead_monomial(), g[j].lead_coeff().inverse());
      auto r = naive_reduce(s, g);
      if (!r.is_zero()) g.push_back(r);
    }
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lead_monomial().divides(g[i].lead_monomial())) continue;
      redundant = g[j].lead_monomial() != g[i].lead_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(naive_reduce(minimal[i], others));
  }
  const auto& ring = out.empty() ? g.front().ring() : out.front().ring();
  std::sort(out.begin(), out.end(), [&](const MPoly& a, const MPoly& b) {
    return ring->compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  return out;
}

std::vector<MPoly> random_system(std::mt19937_64& rng, const RingPtr& ring, std::size_t count, std::size_t terms,
                                 unsigned maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), var(0, static_cast<int>(ring->nvars()) - 1),
      deg(0, static_cast<int>(maxdeg));
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < count; ++i) {
    MPoly p(ring);
    for (std::size_t t = 0; t < terms; ++t) {
      Monomial m(ring->nvars());
      int d = deg(rng);
      for (int s = 0; s < d; ++s) {
        int v = var(rng);
        m.set(v, m[v] + 1);
      }
      p += MPoly(ring, {{m, ring->scalar(coef(rng))}});
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("small lex basis") {
  auto r = named_ring({"x", "y"}, MonomialOrder::lex());
  auto g = buchberger(P(r, {"x*y - 1", "y^2 - 1"}));
  REQUIRE(g.size() == 2);
  CHECK(g.gens()[0] == parse_poly(r, "y^2 - 1"));
  CHECK(g.gens()[1] == parse_poly(r, "x - y"));
  CHECK(verify_groebner(g).empty());
  CHECK(normal_form(parse_poly(r, "x^3 + y"), g) == parse_poly(r, "2*y"));
}

TEST_CASE("unit and zero ideals") {
  auto r = named_ring({"x", "y"});
  auto u = buchberger(P(r, {"x*y - 1", "x"}));
  CHECK(u.is_unit());
  CHECK(u.gens()[0] == r->one());
  GbOptions stop;
  stop.stop_on_unit = true;
  CHECK(buchberger(P(r, {"x^2 - 1", "x^3 - x + 2"}), stop).is_unit());
  CHECK(buchberger(P(r, {"0"})).is_zero_ideal());
  CHECK_THROWS_AS(buchberger(std::vector<MPoly>{}), StructuralError);
  auto z = PolyRing::create(VarUniverse::named({"x"}), MonomialOrder::degrevlex(), CoeffDomain::integers());
  CHECK_THROWS_AS(buchberger(P(z, {"x"})), PreconditionError);
}

TEST_CASE("elimination in lex") {
  auto r = named_ring({"x", "y", "z"}, MonomialOrder::lex());
  auto g = buchberger(P(r, {"x^2 - y", "x^3 - z"}));
  CHECK(verify_groebner(g).empty());
  bool found = false;
  for (const auto& p : g.gens())
    if (p == parse_poly(r, "y^3 - z^2")) found = true;
  CHECK(found);
}

TEST_CASE("2 x 3 permanental ideal") {
  auto gens = permanental_ideal({2, 3}, MonomialOrder::degrevlex(), CoeffDomain::rationals());
  auto g = buchberger(gens);
  CHECK(verify_groebner(g).empty());
  CHECK(ideal_contains(g, gens));
  CHECK(g.is_homogeneous());
  CHECK(g == buchberger(g.gens()));
  CHECK(g.gens() == naive_gb(gens));
}

TEST_CASE("engine agrees with naive Buchberger") {
  std::mt19937_64 rng(31337);
  const auto p = CoeffDomain::prime_field(32003);
  for (int it = 0; it < 40; ++it) {
    auto order = it % 3 == 0 ? MonomialOrder::lex() : it % 3 == 1 ? MonomialOrder::degrevlex() : MonomialOrder::block(1);
    auto q = named_ring({"a", "b", "c"}, order);
    auto sys = random_system(rng, q, 2 + it % 2, 3, 3);
    auto g = buchberger(sys);
    CAPTURE(it);
    CHECK(verify_groebner(g).empty());
    CHECK(g.gens() == naive_gb(sys));
    CHECK(ideal_contains(g, sys));

    auto fp = q->with_domain(p);
    std::vector<MPoly> sysp;
    for (const auto& s : sys) sysp.push_back(MPoly(fp, [&] {
      std::vector<Term> ts;
      for (const auto& t : s.terms()) ts.push_back({t.mono, Scalar(p, t.coef.rational())});
      return ts;
    }()));
    GbOptions notail;
    notail.tail_reduce = false;
    auto gp = buchberger(sysp, notail);
    CHECK(verify_groebner(gp).empty());
    CHECK(gp.gens() == naive_gb(sysp));
  }
}

TEST_CASE("normal forms are linear and respect the ideal") {
  std::mt19937_64 rng(4);
  auto r = named_ring({"x", "y", "z", "w"});
  auto sys = random_system(rng, r, 3, 4, 2);
  auto g = buchberger(sys);
  for (int it = 0; it < 20; ++it) {
    auto f = random_system(rng, r, 2, 5, 4);
    auto nf = normal_form(f[0], g);
    CHECK(normal_form(nf, g) == nf);
    CHECK(normal_form(f[0] + f[1] * sys[it % 3], g) == nf);
    CHECK(normal_form(f[0].scaled(r->scalar(3).inverse()) - f[1], g) ==
          nf * r->constant(r->scalar(3).inverse()) - normal_form(f[1], g));
  }
}

TEST_CASE("timeout and change_order") {
  auto r = named_ring({"x", "y", "z"});
  auto sys = P(r, {"x*y - z", "y*z - x"});
  auto lex = change_order(sys, MonomialOrder::lex());
  CHECK(lex[0].ring()->order() == MonomialOrder::lex());
  CHECK(lex[0].to_string() == "x*y - z");
  auto big = permanental_ideal({3, 4}, MonomialOrder::degrevlex(), CoeffDomain::rationals());
  GbOptions tiny;
  tiny.timeout_s = 1e-6;
  CHECK_THROWS_AS(buchberger(big, tiny), TimeoutError);
  auto stats = buchberger(big).stats();
  CHECK(stats.input_size == 4);
  CHECK(stats.max_basis >= 4);
}

TEST_CASE("dimension examples") {
  auto r = named_ring({"x", "y"});
  auto xy = ideal_dimension(buchberger(P(r, {"x", "y"})));
  CHECK(xy.dim == 0);
  CHECK(xy.codim == 2);
  CHECK(*xy.degree == 1);
  auto prod = ideal_dimension(buchberger(P(r, {"x*y"})));
  CHECK(prod.dim == 1);
  CHECK(prod.independent_set.size() == 1);
  CHECK(*prod.degree == 2);
  auto unit = ideal_dimension(buchberger(P(r, {"x", "x + 1"})));
  CHECK(unit.dim == -1);
  CHECK(unit.dim + unit.codim == 2);

  auto sq = buchberger(P(r, {"x^2", "y^2"}));
  CHECK(hilbert_degree(sq) == 4);
  CHECK(quotient_degree(sq) == 4);
  CHECK(standard_monomials(sq).size() == 4);
  auto one = named_ring({"x"});
  CHECK(hilbert_degree(buchberger(P(one, {"x"}))) == 1);
  CHECK(quotient_degree(buchberger(P(one, {"x - 1"}))) == 1);
  CHECK_THROWS_AS(hilbert_degree(buchberger(P(one, {"x - 1"}))), StructuralError);
  CHECK_THROWS_AS(quotient_degree(buchberger(P(r, {"x*y"}))), StructuralError);
}

TEST_CASE("Hilbert numerator") {
  // (x^2, xy) in k[x, y]: 1 - 2t^2 + t^3.
  Monomial a(std::vector<std::uint16_t>{2, 0}), b(std::vector<std::uint16_t>{1, 1});
  CHECK(hilbert_numerator({a, b}, 2) == std::vector<std::int64_t>{1, 0, -2, 1});
  CHECK(hilbert_numerator({}, 3) == std::vector<std::int64_t>{1});
  // Twisted cubic: codim 2, degree 3.
  auto r = named_ring({"a", "b", "c", "d"});
  auto g = buchberger(P(r, {"a*c - b^2", "b*d - c^2", "a*d - b*c"}));
  auto rep = ideal_dimension(g);
  CHECK(rep.codim == 2);
  CHECK(*rep.degree == 3);
}

TEST_CASE("dimension is order independent") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 15; ++it) {
    auto drl = named_ring({"a", "b", "c", "d"});
    auto sys = random_system(rng, drl, 1 + it % 3, 3, 3);
    auto lex = change_order(sys, MonomialOrder::lex());
    CHECK(ideal_dimension(buchberger(sys)).dim == ideal_dimension(buchberger(lex)).dim);
  }
}

TEST_CASE("P(2,n) has codimension n") {
  for (std::uint64_t p : {2147483647ULL, 1073741789ULL})
    for (std::size_t n = 3; n <= 5; ++n) {
      auto gens = permanental_ideal({2, n}, MonomialOrder::degrevlex(), CoeffDomain::prime_field(p));
      CHECK(ideal_dimension(buchberger(gens)).codim == static_cast<long>(n));
    }
}

TEST_CASE("saturation, elimination, radical, intersection") {
  auto r = named_ring({"x", "y"});
  auto x = parse_poly(r, "x");
  CHECK(saturate(P(r, {"x*y"}), x) == P(r, {"y"}));
  auto s = saturate(P(r, {"x^2"}), x);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == r->one());
  auto inh = saturate(P(r, {"x*y - x", "x^2"}), x);
  CHECK(same_ideal(inh, P(r, {"1"})));
  CHECK(same_ideal(saturate(P(r, {"x*y^2 - x*y"}), parse_poly(r, "x + 1")), P(r, {"x*y^2 - x*y"})));

  auto yx = named_ring({"y", "x"});
  CHECK(eliminate(P(yx, {"y - x^2"}), 1).empty());
  auto xyz = named_ring({"x", "y", "z"});
  auto e = eliminate(P(xyz, {"x^2 - y", "x^3 - z"}), 1);
  REQUIRE(e.size() == 1);
  CHECK(same_ideal(e, P(xyz, {"y^3 - z^2"})));
  auto tx = named_ring({"t", "x"});
  CHECK(eliminate(P(tx, {"1 - t*x"}), 1).empty());

  CHECK(radical_membership(x, P(r, {"x^2"})));
  CHECK_FALSE(radical_membership(parse_poly(r, "y"), P(r, {"x"})));

  auto cap = ideal_intersection(P(r, {"x"}), P(r, {"y"}));
  CHECK(same_ideal(cap, P(r, {"x*y"})));
  auto i = P(r, {"x^2 - y", "x*y"});
  CHECK(same_ideal(ideal_intersection(i, i), i));
}

TEST_CASE("circulant Hankel 2 x 2 permanents contain every square") {
  for (std::size_t k = 3; k <= 8; ++k) {
    GenericMatrixSpec spec{k, k + 1, 2, MatrixPattern::CirculantHankel};
    auto gens = permanental_ideal(spec, MonomialOrder::degrevlex(), CoeffDomain::prime_field(2147483647ULL));
    auto g = buchberger(gens);
    auto ring = g.ring();
    for (std::size_t j = 0; j < ring->nvars(); ++j) CHECK(normal_form(ring->variable(j).pow(2), g).is_zero());
    CHECK(ideal_dimension(g).codim == static_cast<long>(k + 1));
  }
}
