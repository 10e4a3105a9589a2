#include <random>
#include <set>

#include "doctest.h"
#include "permvar/errors.hpp"
#include "permvar/experiments/cases.hpp"
#include "permvar/experiments/constructions.hpp"
#include "permvar/experiments/slices.hpp"
#include "permvar/groebner/dimension.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/ring/poly_io.hpp"

using namespace permvar;

namespace {

const auto QQ = CoeffDomain::rationals();
const auto F1 = CoeffDomain::prime_field(2147483647ULL);
const auto DRL = MonomialOrder::degrevlex();

long codim(const std::vector<MPoly>& gens) { return ideal_dimension(buchberger(gens)).codim; }

}  // namespace

TEST_CASE("build_slice examples") {
  CHECK(build_slice(SliceSpec::parse("hankel2xn:3"), DRL, QQ).to_string() == "[[x0, x1, x2], [x1, x2, x3]]");
  auto h3 = build_slice(SliceSpec::parse("circulant3"), DRL, QQ);
  CHECK(h3.rows() == 3);
  CHECK(h3.cols() == 4);
  CHECK(h3(2, 3).to_string() == "x_1_1");
  CHECK(h3(0, 0).to_string() == "x_1_1");
  auto h4 = build_slice(SliceSpec::parse("circulant4"), DRL, QQ);
  CHECK(h4.rows() == 4);
  CHECK(h4(3, 4).to_string() == "x_1_3");
  auto c2 = build_slice(SliceSpec::parse("circulant2xn:2"), DRL, QQ);
  CHECK(c2.to_string() == "[[x_1_1, x_1_2, x_1_3], [x_1_2, x_1_3, x_1_1]]");
  CHECK(SliceSpec::parse("circulant2xn:5").name() == "circulant2xn:5");
  CHECK_THROWS_AS(SliceSpec::parse("circulant5"), ParseError);
  CHECK_THROWS_AS(SliceSpec::parse("hankel2xn:x"), ParseError);
  CHECK_THROWS_AS(SliceSpec::parse("hankel2xn:1"), ParseError);
}

TEST_CASE("slice bounds on the circulant slices") {
  auto p34 = permanental_ideal({3, 4}, DRL, F1);
  auto s3 = slice_from_matrix(build_slice(SliceSpec::parse("circulant3"), DRL, F1), p34.front().ring());
  CHECK(s3.rank() == 5);
  auto b3 = slice_codim_bound(p34, s3);
  CHECK(b3.sliced_height == 4);
  CHECK(b3.bound == 4);

  auto p45 = permanental_ideal({4, 5}, DRL, F1);
  auto s4 = slice_from_matrix(build_slice(SliceSpec::parse("circulant4"), DRL, F1), p45.front().ring());
  auto b4 = slice_codim_bound(p45, s4);
  CHECK(b4.sliced_height == 5);
  CHECK(b4.bound == 5);
}

TEST_CASE("identity slice gives the plain codimension") {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto gens = permanental_ideal({2, n}, DRL, F1);
    auto b = slice_codim_bound(gens, identity_slice(gens.front().ring()));
    CHECK(b.bound == static_cast<long>(n));
    CHECK(b.bound == codim(gens));
  }
}

TEST_CASE("slice bound never exceeds the codimension") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (std::size_t n = 3; n <= 4; ++n) {
    auto gens = permanental_ideal({2, n}, DRL, F1);
    const RingPtr grid = gens.front().ring();
    const long plain = codim(gens);
    for (std::size_t s = 2; s <= 2 * n; s += 2)
      for (int it = 0; it < 4; ++it) {
        auto target = PolyRing::create(VarUniverse(1, s), DRL, F1);
        std::vector<MPoly> images;
        for (std::size_t v = 0; v < grid->nvars(); ++v) {
          MPoly f = target->zero();
          for (std::size_t t = 0; t < s; ++t) f += target->variable(t).scaled(target->scalar(coef(rng)));
          images.push_back(f);
        }
        auto b = slice_codim_bound(gens, {grid, target, images});
        CHECK(b.bound <= plain);
      }
  }
}

TEST_CASE("slice rejects nonlinear images") {
  auto gens = permanental_ideal({2, 3}, DRL, QQ);
  auto m = PolyMatrix::generic(gens.front().ring());
  auto sq = m.entries();
  sq[0] = sq[0] * sq[1];
  CHECK_THROWS_AS(slice_from_matrix(PolyMatrix(m.ring(), 2, 3, sq), gens.front().ring()), PreconditionError);
  auto other = PolyRing::create(VarUniverse(3, 2), DRL, QQ);
  CHECK_THROWS_AS(slice_from_matrix(m, other), StructuralError);
}

TEST_CASE("Hankel charts") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (std::size_t chart : {std::size_t(0), n}) {
      auto g = buchberger(hankel_chart_ideal(n, chart, DRL, F1));
      CHECK(ideal_dimension(g).dim == 0);
      CHECK(quotient_degree(g) == 4);
    }
    auto ring = hankel_chart_ideal(n, n, DRL, QQ).front().ring();
    auto syz = hankel_syzygy(ring, n);
    CHECK(syz.lhs == syz.rhs());
    CHECK(syz.lhs == parse_poly(ring, "x" + std::to_string(n - 1) + "^4"));
  }
  CHECK_THROWS_AS(hankel_chart_ideal(4, 2, DRL, QQ), PreconditionError);
}

TEST_CASE("census of P(2,n)") {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto comps = census_components(n, DRL, QQ);
    CHECK(comps.size() == 2 + n * (n - 1) / 2);
    auto lines = census_lines(n);
    CHECK(lines.size() == n * n);
    std::set<std::string> names;
    for (const auto& l : lines) names.insert(l.name());
    CHECK(names.size() == n * n);
    auto ring = comps.front().gens.front().ring();
    CHECK(line_ideal(ring, lines.front()).size() == 2 * n - 2);
  }
  auto comps = census_components(3, DRL, QQ);
  CHECK(comps[2].gens.back() == parse_poly(comps[2].gens.back().ring(), "x_1_1*x_2_2 + x_1_2*x_2_1"));
}

TEST_CASE("symbolic determinant identities") {
  auto q = q_prime_identity(QQ);
  CHECK(q.matrix.rows() == 5);
  CHECK(matrix_det(q.matrix) == q.expected);
  for (std::size_t h = 1; h <= 3; ++h) {
    auto s = s_identity(h, QQ);
    CHECK(s.matrix.rows() == h + 2);
    CHECK(matrix_det(s.matrix) == s.expected);
  }
}

TEST_CASE("partitions and witness rows") {
  CHECK(partitions_of(3).size() == 3);
  CHECK(partitions_of(4).size() == 7);
  for (const auto& p : partitions_of(5)) CHECK(p.front() == 0);
  auto ring = PolyRing::create(VarUniverse(4, 4), DRL, QQ);
  auto w = two_zero_rows(ring, 4);
  for (const auto& f : permanents_of(w, 3)) CHECK(f.is_zero());
  CHECK(block_permanents(ring, 4, {0, 1}, false).size() == 6);
  CHECK(block_permanents(ring, 4, {2}, true).size() == 4);
}

TEST_CASE("script matrices") {
  auto a = script_matrix_k5();
  CHECK(a.rows() == 4);
  CHECK(a.cols() == 20);
  auto s1 = seeded_script_matrix(4, 7), s2 = seeded_script_matrix(4, 7);
  CHECK(s1 == s2);
  CHECK(s1.rows() == 3);
  CHECK(s1.cols() == 12);
  auto bb = script_bb(4, s1, DRL, F1);
  CHECK(bb.rows() == 5);
  CHECK(bb.is_symmetric());
  CHECK(bb.ring()->nvars() == 3);
}

TEST_CASE("case registry") {
  auto ids = case_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  std::set<int> criteria;
  for (const auto& c : case_registry()) {
    criteria.insert(c.criterion);
    CHECK_FALSE(c.claim.empty());
  }
  for (int k = 1; k <= 13; ++k) CHECK(criteria.count(k) == 1);
  CHECK(find_case("script-5x6").tier == Tier::Extended);
  CHECK_THROWS_AS(find_case("no-such-case"), NotFoundError);
  CHECK_THROWS_AS(reproduce("no-such-case"), NotFoundError);
  CHECK_THROWS_AS(parse_tier("fast"), ParseError);
}

TEST_CASE("reproduce is deterministic and honours overrides") {
  RunConfig cfg;
  cfg.overrides["n"] = 5;
  auto a = reproduce("hankel-degree8", cfg);
  auto b = reproduce("hankel-degree8", cfg);
  CHECK(a.passed());
  CHECK(a.measured["total_degree"]["n=5"] == 8);
  CHECK(a.measured["total_degree"].size() == 1);
  CHECK(a.to_json(false) == b.to_json(false));
  auto j = a.to_json();
  CHECK(j["seed"] == cfg.seed);
  CHECK(j["primes"][1] == cfg.prime2);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("quick cases pass") {
  for (const char* id : {"codim-2xn", "kirkup-vanish", "kirkup-type", "symbolic-dets", "circulant-2x2"}) {
    auto r = reproduce(id);
    INFO(r.to_json().dump());
    CHECK(r.passed());
    CHECK(r.prime_agreement);
  }
}

TEST_CASE("failing expectations and errors are reported") {
  RunConfig cfg;
  cfg.overrides["n"] = 2;
  auto r = reproduce("census-2xn", cfg);
  CHECK(r.status == CaseStatus::Fail);
  REQUIRE(r.error);

  auto census = component_census_2xn(3);
  CHECK(census.passed());
  CHECK(census.measured["components"]["n=3"] == 5);

  auto sing = sing_locus_suite(6);
  CHECK(sing.passed());
  CHECK(sing.measured["witness_vanishes"]["k=6"] == true);
}

TEST_CASE("reproduce_all skips extended cases by default") {
  std::size_t seen = 0;
  auto reports = reproduce_all({}, [&](const CaseReport&) { ++seen; });
  CHECK(seen == case_registry().size());
  for (const auto& r : reports) {
    INFO(r.id);
    CHECK(r.status == (r.tier == Tier::Extended ? CaseStatus::Skipped : CaseStatus::Pass));
  }
}
