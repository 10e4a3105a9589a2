#include "permvar/groebner/dimension.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "permvar/errors.hpp"

namespace permvar {

nlohmann::json DimensionReport::to_json() const {
  nlohmann::json j{{"dim", dim}, {"codim", codim}, {"independent_set", independent_set}};
  if (degree) j["degree"] = *degree;
  return j;
}

namespace {

using Series = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("Hilbert series coefficient overflow");
  return r;
}

void add_shifted(Series& acc, const Series& s, std::size_t shift) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] = checked_add(acc[i + shift], s[i]);
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
  });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

Series numerator(std::vector<Monomial> gens, std::size_t nvars) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};

  std::vector<std::size_t> count(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v]) ++count[v];
  std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());

  if (count[pivot] <= 1) {
    // Pairwise coprime: a complete intersection.
    Series s{1};
    for (const auto& g : gens) {
      Series next(s.size() + g.degree(), 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        next[i] = checked_add(next[i], s[i]);
        next[i + g.degree()] = checked_add(next[i + g.degree()], -s[i]);
      }
      s.swap(next);
    }
    trim(s);
    return s;
  }

  std::uint16_t e = 0xffff;
  for (const auto& g : gens)
    if (g[pivot]) e = std::min(e, g[pivot]);
  Monomial p(nvars);
  p.set(pivot, e);

  std::vector<Monomial> plus{p};
  for (const auto& g : gens)
    if (!p.divides(g)) plus.push_back(g);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / Monomial::gcd(g, p));

  Series s = numerator(minimalize(std::move(plus)), nvars);
  Series c = numerator(minimalize(std::move(colon)), nvars);
  add_shifted(s, c, e);
  trim(s);
  return s;
}

// N(t) / (1-t); the remainder must vanish.
Series divide_one_minus_t(const Series& n) {
  Series q;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    acc = checked_add(acc, n[i]);
    q.push_back(acc);
  }
  if (!n.empty() && checked_add(acc, n.back()) != 0)
    throw InternalError("Hilbert numerator is not divisible by (1-t) as often as the codimension requires");
  return q;
}

std::int64_t degree_from_numerator(Series n, long codim) {
  for (long i = 0; i < codim; ++i) n = divide_one_minus_t(n);
  std::int64_t d = 0;
  for (auto c : n) d = checked_add(d, c);
  return d;
}

struct CoverSearch {
  std::vector<std::uint64_t> sets;
  std::size_t nvars;
  std::size_t best;
  std::uint64_t best_mask;

  // Number of pairwise disjoint uncovered sets: a lower bound on what is left.
  std::size_t disjoint_bound(std::uint64_t chosen) const {
    std::uint64_t used = 0;
    std::size_t n = 0;
    for (auto s : sets)
      if (!(s & chosen) && !(s & used)) {
        used |= s;
        ++n;
      }
    return n;
  }

  void run(std::uint64_t chosen, std::size_t size) {
    const std::uint64_t* open = nullptr;
    for (const auto& s : sets)
      if (!(s & chosen)) {
        open = &s;
        break;
      }
    if (!open) {
      if (size < best) {
        best = size;
        best_mask = chosen;
      }
      return;
    }
    if (size + disjoint_bound(chosen) >= best) return;
    for (std::uint64_t bits = *open; bits; bits &= bits - 1) run(chosen | (bits & -bits), size + 1);
  }
};

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw StructuralError("monomial has the wrong number of variables");
  return numerator(minimalize(std::move(gens)), nvars);
}

DimensionReport ideal_dimension(const GroebnerBasis& g) {
  const std::size_t n = g.ring()->nvars();
  DimensionReport r;
  if (g.is_unit()) {
    r.dim = -1;
    r.codim = static_cast<long>(n) + 1;
    r.degree = 0;
    return r;
  }
  if (n > 64) throw CapacityError("dimension search supports at most 64 variables");
  std::set<std::uint64_t> supports;
  for (const auto& m : g.lead_ideal()) {
    std::uint64_t s = 0;
    for (auto v : m.support()) s |= std::uint64_t(1) << v;
    supports.insert(s);
  }
  CoverSearch cs{{}, n, n + 1, 0};
  for (auto s : supports) {
    bool redundant = false;
    for (auto o : supports)
      if (o != s && (o & s) == o) {
        redundant = true;
        break;
      }
    if (!redundant) cs.sets.push_back(s);
  }
  std::sort(cs.sets.begin(), cs.sets.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  cs.run(0, 0);
  r.codim = static_cast<long>(cs.best);
  r.dim = static_cast<long>(n) - r.codim;
  for (std::size_t v = 0; v < n; ++v)
    if (!(cs.best_mask >> v & 1)) r.independent_set.push_back(v);
  if (r.dim == 0 || g.is_homogeneous()) r.degree = degree_from_numerator(hilbert_numerator(g.lead_ideal(), n), r.codim);
  return r;
}

std::int64_t hilbert_degree(const GroebnerBasis& g) {
  if (!g.is_homogeneous()) throw StructuralError("hilbert_degree needs a homogeneous ideal");
  return *ideal_dimension(g).degree;
}

std::int64_t quotient_degree(const GroebnerBasis& g) {
  auto r = ideal_dimension(g);
  if (r.dim > 0) throw StructuralError("quotient_degree needs a zero-dimensional ideal");
  return r.dim < 0 ? 0 : *r.degree;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g) {
  constexpr std::size_t kLimit = 10'000'000;
  if (ideal_dimension(g).dim > 0) throw StructuralError("standard_monomials needs a zero-dimensional ideal");
  const std::size_t n = g.ring()->nvars();
  auto leads = g.lead_ideal();
  auto standard = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out;
  Monomial one(n);
  if (!standard(one)) return out;
  std::set<std::vector<std::uint16_t>> seen{{one.exponents().begin(), one.exponents().end()}};
  out.push_back(one);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      Monomial m = out[i];
      m.set(v, m[v] + 1);
      std::vector<std::uint16_t> key(m.exponents().begin(), m.exponents().end());
      if (seen.count(key) || !standard(m)) continue;
      seen.insert(std::move(key));
      out.push_back(std::move(m));
      if (out.size() > kLimit) throw CapacityError("too many standard monomials");
    }
  }
  const auto& ring = g.ring();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; });
  return out;
}

}  // namespace permvar
