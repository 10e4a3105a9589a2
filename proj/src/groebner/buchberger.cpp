#include <algorithm>
#include <numeric>

#include "engine.hpp"

namespace permvar {

nlohmann::json GbStats::to_json() const {
  return {{"input_size", input_size},
          {"pairs_created", pairs_created},
          {"pairs_reduced", pairs_reduced},
          {"product_criterion", product_criterion},
          {"chain_criterion", chain_criterion},
          {"zero_reductions", zero_reductions},
          {"reduction_steps", reduction_steps},
          {"max_basis", max_basis},
          {"monomials", monomials},
          {"max_degree", max_degree},
          {"max_coeff_bits", max_coeff_bits},
          {"wall_ms", wall_ms}};
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<MPoly> gens, GbStats stats)
    : ring_(std::move(ring)), gens_(std::move(gens)), stats_(stats) {}

std::vector<Monomial> GroebnerBasis::lead_ideal() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.lead_monomial());
  return out;
}

bool GroebnerBasis::is_unit() const noexcept {
  return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero();
}

bool GroebnerBasis::is_homogeneous() const noexcept {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!a.ring_ || !b.ring_) return a.gens_.size() == b.gens_.size() && a.gens_.empty();
  return a.ring_->same_as(*b.ring_) && a.gens_ == b.gens_;
}

namespace gb {
namespace {

template <class Field>
class Engine {
 public:
  using Poly = IPoly<Field>;
  using Coef = typename Field::Coef;

  Engine(const RingPtr& ring, Field field, const GbOptions& opts)
      : ring_(ring),
        table_(ring->nvars(), ring->order()),
        field_(std::move(field)),
        opts_(opts),
        deadline_(opts.timeout_s),
        red_(table_, field_, polys_, stats_, deadline_) {}

  Poly import(const MPoly& p) {
    Poly out;
    out.m.reserve(p.size());
    out.c.reserve(p.size());
    for (const auto& t : p.terms()) {
      out.m.push_back(table_.intern(t.mono));
      out.c.push_back(field_.from_scalar(t.coef));
    }
    out.sugar = p.total_degree();
    return out;
  }

  MPoly export_poly(const Poly& p) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      terms.push_back({table_.to_monomial(p.m[i]), field_.to_scalar(p.c[i], ring_->domain())});
      stats_.max_coeff_bits = std::max(stats_.max_coeff_bits, Field::bits(p.c[i]));
    }
    return MPoly(ring_, std::move(terms));
  }

  GroebnerBasis run(std::span<const MPoly> gens) {
    stats_.input_size = gens.size();
    std::vector<Poly> inputs;
    for (const auto& g : gens) {
      if (!g.ring()->same_as(*ring_)) throw StructuralError("generators live in different rings");
      if (!g.is_zero()) inputs.push_back(import(g));
    }
    std::stable_sort(inputs.begin(), inputs.end(),
                     [&](const Poly& a, const Poly& b) { return table_.cmp(a.lead(), b.lead()) < 0; });

    for (const auto& p : inputs) {
      red_.add_scaled(p, one_id(), field_.one(), false);
      Poly h = red_.drain(opts_.tail_reduce, p.sugar, opts_.stop_on_unit);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (table_.degree(h.lead()) == 0) return unit();
      insert(std::move(h));
    }

    while (!heap_.empty()) {
      std::size_t pi = heap_.top();
      heap_.pop();
      if (pairs_[pi].dead) continue;
      pairs_[pi].dead = true;
      if (deadline_.expired()) throw TimeoutError("Groebner computation timed out", finish_stats());
      const Pair& pr = pairs_[pi];
      ++stats_.pairs_reduced;
      const Poly& gi = polys_[pr.i];
      const Poly& gj = polys_[pr.j];
      red_.add_scaled(gi, table_.quotient(pr.lcm, gi.lead()), field_.one(), true);
      red_.add_scaled(gj, table_.quotient(pr.lcm, gj.lead()), field_.neg(field_.one()), true);
      Poly h = red_.drain(opts_.tail_reduce, pr.sugar, opts_.stop_on_unit);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (table_.degree(h.lead()) == 0) return unit();
      insert(std::move(h));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    MonoId lcm;
    std::uint32_t sugar;
    std::size_t serial;
    bool dead;
  };

  struct PairCmp {
    const Engine* e;
    // priority_queue pops the largest, so "less" means "selected later".
    bool operator()(std::size_t a, std::size_t b) const {
      const Pair& x = e->pairs_[a];
      const Pair& y = e->pairs_[b];
      if (x.sugar != y.sugar) return x.sugar > y.sugar;
      int c = e->table_.cmp(x.lcm, y.lcm);
      if (c != 0) return c > 0;
      return x.serial > y.serial;
    }
  };

  MonoId one_id() {
    if (one_ == kNoMono) {
      std::vector<std::uint16_t> z(table_.nvars(), 0);
      one_ = table_.intern(z.data());
    }
    return one_;
  }

  GroebnerBasis unit() {
    red_.clear();
    return GroebnerBasis(ring_, {ring_->one()}, finish_stats());
  }

  GbStats finish_stats() {
    stats_.wall_ms = deadline_.elapsed_ms();
    stats_.monomials = table_.size();
    return stats_;
  }

  void make_monic(Poly& h) {
    if (Field::is_one(h.c[0])) return;
    Coef inv = field_.inv(h.c[0]);
    for (auto& c : h.c) c = field_.mul(c, inv);
  }

  std::uint32_t pair_sugar(std::size_t i, std::size_t j, MonoId lcm) const {
    std::uint32_t d = table_.degree(lcm);
    std::uint32_t si = polys_[i].sugar + d - table_.degree(polys_[i].lead());
    std::uint32_t sj = polys_[j].sugar + d - table_.degree(polys_[j].lead());
    return std::max(si, sj);
  }

  // Gebauer-Moeller update (Becker-Weispfenning, UPDATE).
  void insert(Poly h) {
    make_monic(h);
    stats_.max_degree = std::max(stats_.max_degree, table_.degree(h.lead()));
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const MonoId hl = polys_[hi].lead();

    struct Cand {
      std::size_t g;
      MonoId lcm;
      bool coprime;
      bool alive;
    };
    std::vector<Cand> cands;
    for (std::size_t g : active_) {
      MonoId gl = polys_[g].lead();
      cands.push_back({g, table_.lcm(gl, hl), table_.coprime(gl, hl), true});
    }
    std::vector<std::size_t> kept;  // indices into cands
    for (std::size_t a = 0; a < cands.size(); ++a) {
      cands[a].alive = false;
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (cands[b].alive && table_.divides(cands[b].lcm, cands[a].lcm)) keep = false;
        for (std::size_t b : kept)
          if (keep && table_.divides(cands[b].lcm, cands[a].lcm)) keep = false;
      }
      if (keep)
        kept.push_back(a);
      else
        ++stats_.chain_criterion;
    }

    // Old pairs whose lcm is a proper multiple of lm(h) via both sides.
    std::vector<std::size_t> live;
    live.reserve(live_.size());
    for (std::size_t pi : live_) {
      Pair& p = pairs_[pi];
      if (p.dead) continue;
      if (table_.divides(hl, p.lcm)) {
        MonoId li = table_.lcm(polys_[p.i].lead(), hl);
        MonoId lj = table_.lcm(polys_[p.j].lead(), hl);
        if (li != p.lcm && lj != p.lcm) {
          p.dead = true;
          ++stats_.chain_criterion;
          continue;
        }
      }
      live.push_back(pi);
    }
    live_.swap(live);

    for (std::size_t a : kept) {
      if (cands[a].coprime) {
        ++stats_.product_criterion;
        continue;
      }
      std::size_t g = cands[a].g;
      Pair p{g, hi, cands[a].lcm, pair_sugar(g, hi, cands[a].lcm), serial_++, false};
      pairs_.push_back(p);
      ++stats_.pairs_created;
      live_.push_back(pairs_.size() - 1);
      heap_.push(pairs_.size() - 1);
    }

    std::vector<std::size_t> still;
    for (std::size_t g : active_) {
      if (table_.divides(hl, polys_[g].lead())) {
        auto& cs = red_.candidates();
        std::replace(cs.begin(), cs.end(), g, Reducer<Field>::kNone);
      } else {
        still.push_back(g);
      }
    }
    still.push_back(hi);
    active_.swap(still);
    red_.candidates().push_back(hi);
    stats_.max_basis = std::max(stats_.max_basis, active_.size());
  }

  GroebnerBasis finish() {
    // Final interreduction against the minimal basis.
    Reducer<Field> fin(table_, field_, polys_, stats_, deadline_);
    fin.set_candidates(active_);
    std::vector<Poly> out;
    for (std::size_t g : active_) {
      const Poly& p = polys_[g];
      fin.add_scaled(p, one_id(), field_.one(), true);
      Poly tail = fin.drain(true, p.sugar);
      Poly r;
      r.m.push_back(p.lead());
      r.c.push_back(p.c[0]);
      for (std::size_t i = 0; i < tail.size(); ++i) {
        r.m.push_back(tail.m[i]);
        r.c.push_back(std::move(tail.c[i]));
      }
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return table_.cmp(a.lead(), b.lead()) < 0; });
    std::vector<MPoly> gens;
    gens.reserve(out.size());
    for (const auto& p : out) gens.push_back(export_poly(p));
    return GroebnerBasis(ring_, std::move(gens), finish_stats());
  }

  RingPtr ring_;
  MonoTable table_;
  Field field_;
  GbOptions opts_;
  GbStats stats_;
  Deadline deadline_;
  std::vector<Poly> polys_;
  Reducer<Field> red_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> live_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, PairCmp> heap_{PairCmp{this}};
  std::size_t serial_ = 0;
  MonoId one_ = kNoMono;
};

/// Normal forms modulo a finished basis.
template <class Field>
std::vector<MPoly> reduce_all(const GroebnerBasis& g, std::span<const MPoly> fs, Field field) {
  const RingPtr& ring = g.ring();
  MonoTable table(ring->nvars(), ring->order());
  GbStats stats;
  Deadline deadline(0);
  std::vector<IPoly<Field>> polys;
  auto import = [&](const MPoly& p) {
    IPoly<Field> out;
    for (const auto& t : p.terms()) {
      out.m.push_back(table.intern(t.mono));
      out.c.push_back(field.from_scalar(t.coef));
    }
    return out;
  };
  std::vector<std::size_t> ids;
  for (const auto& b : g.gens()) {
    ids.push_back(polys.size());
    polys.push_back(import(b));
  }
  Reducer<Field> red(table, field, polys, stats, deadline);
  red.set_candidates(ids);
  std::vector<std::uint16_t> zero(ring->nvars(), 0);
  MonoId one = table.intern(zero.data());
  std::vector<MPoly> out;
  for (const auto& f : fs) {
    if (!f.ring()->same_as(*ring)) throw StructuralError("normal form of a polynomial from another ring");
    auto p = import(f);
    if (!p.empty()) red.add_scaled(p, one, field.one(), false);
    auto r = red.drain(true, 0);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < r.size(); ++i)
      terms.push_back({table.to_monomial(r.m[i]), field.to_scalar(r.c[i], ring->domain())});
    out.push_back(MPoly(ring, std::move(terms)));
  }
  return out;
}

}  // namespace
}  // namespace gb

GroebnerBasis buchberger(std::span<const MPoly> gens, const GbOptions& opts) {
  if (gens.empty()) throw StructuralError("buchberger needs at least one generator to fix the ring");
  const RingPtr& ring = gens.front().ring();
  const auto& d = ring->domain();
  if (d.is_prime_field()) return gb::Engine<gb::ModpField>(ring, gb::ModpField(d.modulus()), opts).run(gens);
  if (d.kind() == CoeffDomain::Kind::Rational) return gb::Engine<gb::RationalField>(ring, gb::RationalField{}, opts).run(gens);
  throw PreconditionError("Groebner bases need a field of coefficients (QQ or GF(p)), not " + d.name());
}

std::vector<MPoly> normal_forms(std::span<const MPoly> fs, const GroebnerBasis& g) {
  const auto& d = g.ring()->domain();
  if (d.is_prime_field()) return gb::reduce_all(g, fs, gb::ModpField(d.modulus()));
  if (d.kind() == CoeffDomain::Kind::Rational) return gb::reduce_all(g, fs, gb::RationalField{});
  throw PreconditionError("normal forms need a field of coefficients");
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& g) {
  return normal_forms(std::span<const MPoly>(&f, 1), g).front();
}

bool ideal_contains(const GroebnerBasis& g, std::span<const MPoly> fs) {
  for (const auto& r : normal_forms(fs, g))
    if (!r.is_zero()) return false;
  return true;
}

std::string verify_groebner(const GroebnerBasis& g) {
  const auto& gens = g.gens();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].lead_coeff().is_one()) return "element " + std::to_string(i) + " is not monic";
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gens[j].terms())
        if (gens[i].lead_monomial().divides(t.mono))
          return "leading monomial of element " + std::to_string(i) + " divides a term of element " +
                 std::to_string(j);
    }
  }
  std::vector<MPoly> spolys;
  const RingPtr& ring = g.ring();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Monomial& a = gens[i].lead_monomial();
      const Monomial& b = gens[j].lead_monomial();
      if (Monomial::gcd(a, b).is_one()) continue;
      Monomial l = Monomial::lcm(a, b);
      auto one = Scalar::one(ring->domain());
      spolys.push_back(gens[i].times_monomial(l / a, one) - gens[j].times_monomial(l / b, one));
    }
  auto nfs = normal_forms(spolys, g);
  for (std::size_t s = 0; s < nfs.size(); ++s)
    if (!nfs[s].is_zero()) return "an S-polynomial has a nonzero normal form";
  return {};
}

std::vector<MPoly> change_order(std::span<const MPoly> fs, const MonomialOrder& order) {
  std::vector<MPoly> out;
  if (fs.empty()) return out;
  RingPtr target = fs.front().ring()->with_order(order);
  for (const auto& f : fs) out.push_back(MPoly(target, f.terms()));
  return out;
}

}  // namespace permvar
