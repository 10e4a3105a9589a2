#include "permvar/experiments/constructions.hpp"

#include <random>

#include "permvar/errors.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/permanent/kirkup.hpp"
#include "permvar/ring/poly_io.hpp"

namespace permvar {

namespace {

std::string xname(std::size_t i) { return "x" + std::to_string(i); }

}  // namespace

std::vector<MPoly> hankel_chart_ideal(std::size_t n, std::size_t chart, MonomialOrder order, CoeffDomain domain) {
  if (n < 2) throw PreconditionError("Hankel matrix needs n >= 2");
  if (chart != 0 && chart != n) throw PreconditionError("chart must be x0 or x" + std::to_string(n));
  auto gens = permanental_ideal({2, n, 2, MatrixPattern::Hankel}, order, domain);
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i)
    if (i != chart) names.push_back(xname(i));
  RingPtr chart_ring = PolyRing::create(VarUniverse::named(names), order, domain);
  std::vector<MPoly> images;
  for (std::size_t i = 0, next = 0; i <= n; ++i)
    images.push_back(i == chart ? chart_ring->one() : chart_ring->variable(next++));
  std::vector<MPoly> out;
  for (const auto& g : gens) out.push_back(g.substitute(images));
  return out;
}

MPoly HankelSyzygy::rhs() const {
  MPoly s = lhs.ring()->zero();
  for (std::size_t i = 0; i < factors.size(); ++i) s += cofactors[i] * factors[i];
  return s;
}

HankelSyzygy hankel_syzygy(const RingPtr& ring, std::size_t n) {
  if (n < 3) throw PreconditionError("the Hankel relation needs n >= 3");
  auto v = [&](std::size_t i) {
    auto idx = ring->universe().find(xname(i));
    if (!idx) throw StructuralError("chart ring lacks variable " + xname(i));
    return ring->variable(*idx);
  };
  const MPoly a = v(n - 1), b = v(n - 2), c = v(n - 3);
  const MPoly half = ring->constant(ring->scalar(mpq_class(1, 2)));
  HankelSyzygy s;
  s.lhs = a.pow(4);
  s.factors = {a * a + b, a * b + c, b * b + a * c};
  s.cofactors = {-(b * b) - c * a - b * a + a * a - c - half * b, -(b * b) - c * a + a * a + b - half * a,
                 b * a + a * a + c + b + half};
  return s;
}

std::vector<NamedIdeal> census_components(std::size_t n, MonomialOrder order, CoeffDomain domain) {
  RingPtr ring = PolyRing::create(VarUniverse(2, n), order, domain);
  auto x = [&](std::size_t i, std::size_t j) { return ring->grid_variable(i, j); };
  std::vector<NamedIdeal> out;
  for (std::size_t r = 0; r < 2; ++r) {
    NamedIdeal c{"row " + std::to_string(r + 1) + " = 0", {}};
    for (std::size_t j = 0; j < n; ++j) c.gens.push_back(x(r, j));
    out.push_back(std::move(c));
  }
  for (auto mask : colex_subsets(n, 2)) {
    auto cols = mask_members(mask);
    std::size_t a = cols[0], b = cols[1];
    NamedIdeal c{"quadric on columns " + std::to_string(a + 1) + "," + std::to_string(b + 1), {}};
    for (std::size_t j = 0; j < n; ++j)
      if (j != a && j != b) {
        c.gens.push_back(x(0, j));
        c.gens.push_back(x(1, j));
      }
    c.gens.push_back(x(0, a) * x(1, b) + x(0, b) * x(1, a));
    out.push_back(std::move(c));
  }
  return out;
}

std::string CoordinateLine::name() const {
  auto v = [](std::size_t r, std::size_t c) { return "x_" + std::to_string(r + 1) + "_" + std::to_string(c + 1); };
  return v(i, j) + "," + v(l, m);
}

std::vector<CoordinateLine> census_lines(std::size_t n) {
  std::vector<CoordinateLine> out;
  // Same row: one line per row and pair of columns.
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) out.push_back({r, a, r, b});
  // Same column.
  for (std::size_t c = 0; c < n; ++c) out.push_back({0, c, 1, c});
  return out;
}

std::vector<MPoly> line_ideal(const RingPtr& ring, const CoordinateLine& line) {
  const auto& u = ring->universe();
  std::size_t keep1 = u.grid_index(line.i, line.j), keep2 = u.grid_index(line.l, line.m);
  std::vector<MPoly> out;
  for (std::size_t v = 0; v < u.grid_size(); ++v)
    if (v != keep1 && v != keep2) out.push_back(ring->variable(v));
  return out;
}

std::vector<MPoly> block_permanents(const RingPtr& ring, std::size_t k, const std::vector<std::size_t>& subset,
                                    bool columns) {
  auto m = PolyMatrix::generic(ring);
  if (m.rows() != k || m.cols() != k) throw StructuralError("block_permanents needs the generic k x k ring");
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  auto sub = columns ? m.submatrix(all, subset).transpose() : m.submatrix(subset, all);
  return permanents_of(sub, subset.size());
}

std::vector<std::vector<std::size_t>> partitions_of(std::size_t k) {
  if (k < 2 || k > 20) throw PreconditionError("partitions_of needs 2 <= k <= 20");
  std::vector<std::vector<std::size_t>> out;
  const std::uint64_t full = (std::uint64_t(1) << k) - 1;
  for (std::uint64_t mask = 1; mask < full; mask += 2) out.push_back(mask_members(mask));
  return out;
}

PolyMatrix two_zero_rows(const RingPtr& ring, std::size_t k) {
  auto m = PolyMatrix::generic(ring);
  if (m.rows() != k || m.cols() != k || k < 2) throw StructuralError("two_zero_rows needs the generic k x k ring");
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t j = 0; j < k; ++j) m.set(r, j, ring->zero());
  return m;
}

SymbolicIdentity q_prime_identity(CoeffDomain domain) {
  auto r = PolyRing::create(VarUniverse::named({"a", "b", "c", "d"}), MonomialOrder::degrevlex(), domain);
  auto a = r->variable(0), b = r->variable(1), c = r->variable(2), d = r->variable(3);
  auto z = r->zero(), one = r->one();
  PolyMatrix q(r, 5, 5,
               {a, d, z, a * c + b * d, a,  //
                d, c, one, z, one,          //
                one, z, z, c, z,            //
                z, one, z, d, z,            //
                z, z, one, z, d});
  return {"det(Q')", q, d * (d * d - d * b + (a * c).scaled(r->scalar(2)) - d + b)};
}

SymbolicIdentity s_identity(std::size_t h, CoeffDomain domain) {
  if (h < 1 || h > 6) throw PreconditionError("S is built for 1 <= h <= 6");
  const std::size_t n = h + 2;
  std::vector<std::string> names{"a", "b1", "b2"};
  for (std::size_t j = 2; j + 1 < n; ++j) names.push_back("y" + std::to_string(j));
  auto r = PolyRing::create(VarUniverse::named(names), MonomialOrder::degrevlex(), domain);
  auto a = r->variable(0), b1 = r->variable(1), b2 = r->variable(2);
  PolyMatrix s(r, n, n);
  for (std::size_t i = 0; i <= h; ++i) s.set(i, i, a);
  s.set(0, n - 1, b2);
  s.set(1, n - 1, b1);
  s.set(n - 1, 0, b1);
  s.set(n - 1, 1, b2);
  for (std::size_t j = 2; j + 1 < n; ++j) s.set(n - 1, j, r->variable(1 + j));
  return {"det(S), h=" + std::to_string(h), s,
          (a.pow(static_cast<unsigned>(h)) * b1 * b2).scaled(r->scalar(-2))};
}

QMatrix script_matrix_k5() {
  return qmatrix({{3, 3, 2, 1, -1, 0, -3, 3, 2, -3, 2, 0, -3, 2, 3, -2, 2, 2, -3, -3},
                  {-2, -2, -1, 1, -1, 0, -2, -2, -1, -3, 2, -2, -1, 3, -2, -2, 2, -1, -1, -1},
                  {-2, -2, 1, 2, 3, 0, 0, -3, 2, 2, -3, -3, -1, 2, -3, 2, -2, 3, -2, 2},
                  {-3, 0, -3, -1, 1, 2, -1, 2, -3, 2, 1, 0, -3, -1, -1, -3, -2, 3, -1, -3}});
}

QMatrix seeded_script_matrix(std::size_t k, std::uint64_t seed, long lim) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-lim, lim);
  QMatrix a(k - 1, k * (k - 1));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = d(rng);
  return a;
}

PolyMatrix script_bb(std::size_t k, const QMatrix& a, MonomialOrder order, CoeffDomain domain) {
  if (k < 3) throw PreconditionError("the B1 script needs k >= 3");
  if (a.rows() != k - 1 || a.cols() != k * (k - 1))
    throw StructuralError("A must be (k-1) x k(k-1)");
  std::vector<std::string> names;
  for (std::size_t r = 2; r <= k; ++r) names.push_back("x_" + std::to_string(r) + "_1");
  RingPtr ring = PolyRing::create(VarUniverse::named(names), order, domain);
  std::vector<MPoly> forms;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    MPoly f = ring->zero();
    for (std::size_t r = 0; r + 1 < k; ++r)
      if (sgn(a(r, i)) != 0) f += ring->variable(r).scaled(ring->scalar(a(r, i)));
    forms.push_back(f);
  }
  // Rows 2..k of the generic matrix; entry (r, c) for c >= 1 is v[(c-1)(k-1) + r].
  PolyMatrix ap(ring, k - 1, k + 1);
  for (std::size_t r = 0; r + 1 < k; ++r) {
    ap.set(r, 0, ring->variable(r));
    for (std::size_t c = 1; c <= k; ++c) ap.set(r, c, forms[(c - 1) * (k - 1) + r]);
  }
  return derivative_matrix(ap);
}

}  // namespace permvar
