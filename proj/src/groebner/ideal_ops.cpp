#include "permvar/groebner/ideal_ops.hpp"

#include <algorithm>
#include <numeric>

#include "permvar/errors.hpp"

namespace permvar {

namespace {

const RingPtr& common_ring(std::span<const MPoly> ideal, const MPoly* extra = nullptr) {
  const MPoly* first = ideal.empty() ? extra : &ideal.front();
  if (!first) throw StructuralError("empty generator list");
  for (const auto& p : ideal)
    if (!p.ring()->same_as(*first->ring())) throw StructuralError("generators live in different rings");
  if (extra && !extra->ring()->same_as(*first->ring())) throw StructuralError("polynomial lives in another ring");
  return first->ring();
}

std::string fresh_name(const VarUniverse& u) {
  std::string name = "t";
  while (u.find(name)) name += "_";
  return name;
}

/// R[t] with t first and the block order that eliminates it.
struct Extended {
  RingPtr ring;
  std::vector<std::size_t> embed;  // old var i -> new index
  MPoly t;

  explicit Extended(const RingPtr& base) {
    ring = PolyRing::create(base->universe().with_prefix({fresh_name(base->universe())}), MonomialOrder::block(1),
                            base->domain());
    embed.resize(base->nvars());
    std::iota(embed.begin(), embed.end(), 1);
    t = ring->variable(0);
  }

  MPoly up(const MPoly& p) const { return p.map_into(ring, embed); }

  std::vector<MPoly> down(const GroebnerBasis& g, const RingPtr& base) const {
    std::vector<std::size_t> back(base->nvars() + 1, 0);
    for (std::size_t i = 0; i < base->nvars(); ++i) back[i + 1] = i;
    std::vector<MPoly> out;
    for (const auto& p : g.gens())
      if (std::all_of(p.terms().begin(), p.terms().end(), [](const Term& t) { return t.mono[0] == 0; }))
        out.push_back(p.map_into(base, back));
    return out;
  }
};

std::vector<MPoly> nonzero(std::span<const MPoly> xs) {
  std::vector<MPoly> out;
  for (const auto& x : xs)
    if (!x.is_zero()) out.push_back(x);
  return out;
}

bool all_homogeneous(std::span<const MPoly> xs) {
  return std::all_of(xs.begin(), xs.end(), [](const MPoly& p) { return p.is_homogeneous(); });
}

// Bayer: in degrevlex with x last, I : x^inf is generated by g / x^(content).
std::vector<MPoly> saturate_var_homogeneous(std::span<const MPoly> ideal, std::size_t var, const GbOptions& opts) {
  const RingPtr& ring = ideal.front().ring();
  RingPtr drl = ring->with_order(MonomialOrder::degrevlex());
  std::vector<std::size_t> perm(ring->nvars());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[var], perm.back());
  std::vector<MPoly> moved;
  for (const auto& p : ideal) moved.push_back(p.map_into(drl, perm));
  auto g = buchberger(moved, opts);
  std::vector<MPoly> out;
  const std::size_t last = ring->nvars() - 1;
  for (const auto& p : g.gens()) {
    Monomial m(ring->nvars());
    m.set(last, p.var_content(last));
    out.push_back(p.divide_by_monomial(m).map_into(ring, perm));
  }
  return out;
}

std::vector<MPoly> saturate_rabinowitsch(std::span<const MPoly> ideal, const MPoly& f, const GbOptions& opts) {
  const RingPtr& ring = common_ring(ideal, &f);
  Extended ext(ring);
  std::vector<MPoly> gens;
  for (const auto& p : ideal) gens.push_back(ext.up(p));
  gens.push_back(ext.ring->one() - ext.t * ext.up(f));
  return ext.down(buchberger(gens, opts), ring);
}

}  // namespace

std::vector<MPoly> saturate(std::span<const MPoly> ideal, const MPoly& f, const GbOptions& opts) {
  const RingPtr& ring = common_ring(ideal, &f);
  if (f.is_zero()) throw StructuralError("saturation by zero");
  auto cur = nonzero(ideal);
  if (cur.empty()) return cur;
  if (f.is_constant()) return cur;
  if (f.size() != 1) return saturate_rabinowitsch(cur, f, opts);
  for (std::size_t v : f.lead_monomial().support()) {
    if (all_homogeneous(cur))
      cur = saturate_var_homogeneous(cur, v, opts);
    else
      cur = saturate_rabinowitsch(cur, ring->variable(v), opts);
    if (cur.size() == 1 && cur[0].is_constant()) break;
  }
  return cur;
}

std::vector<MPoly> eliminate(std::span<const MPoly> ideal, std::size_t front_vars, const GbOptions& opts) {
  const RingPtr& ring = common_ring(ideal);
  if (front_vars > ring->nvars()) throw StructuralError("cannot eliminate more variables than the ring has");
  auto gens = nonzero(ideal);
  std::vector<MPoly> out;
  if (gens.empty()) return out;
  auto blocked = change_order(gens, MonomialOrder::block(front_vars));
  auto g = buchberger(blocked, opts);
  for (const auto& p : g.gens()) {
    bool free = true;
    for (std::size_t v : p.support())
      if (v < front_vars) {
        free = false;
        break;
      }
    if (free) out.push_back(MPoly(ring, p.terms()));
  }
  return out;
}

bool radical_membership(const MPoly& f, std::span<const MPoly> ideal, const GbOptions& opts) {
  const RingPtr& ring = common_ring(ideal, &f);
  if (f.is_zero()) return true;
  Extended ext(ring);
  std::vector<MPoly> gens;
  for (const auto& p : ideal) gens.push_back(ext.up(p));
  gens.push_back(ext.ring->one() - ext.t * ext.up(f));
  GbOptions o = opts;
  o.stop_on_unit = true;
  return buchberger(gens, o).is_unit();
}

std::vector<MPoly> ideal_intersection(std::span<const MPoly> a, std::span<const MPoly> b, const GbOptions& opts) {
  if (a.empty() || b.empty()) throw StructuralError("ideal_intersection needs nonempty generator lists");
  const RingPtr& ring = common_ring(a);
  common_ring(b, &a.front());
  Extended ext(ring);
  MPoly one_minus_t = ext.ring->one() - ext.t;
  std::vector<MPoly> gens;
  for (const auto& p : a) gens.push_back(ext.t * ext.up(p));
  for (const auto& p : b) gens.push_back(one_minus_t * ext.up(p));
  gens = nonzero(gens);
  if (gens.empty()) return {};
  return ext.down(buchberger(gens, opts), ring);
}

bool same_ideal(std::span<const MPoly> a, std::span<const MPoly> b, const GbOptions& opts) {
  auto na = nonzero(a), nb = nonzero(b);
  if (na.empty() || nb.empty()) return na.empty() == nb.empty();
  return buchberger(na, opts) == buchberger(nb, opts);
}

}  // namespace permvar
