#include "permvar/ring/mpoly.hpp"

#include <algorithm>
#include <map>

#include "permvar/errors.hpp"

namespace permvar {

RingPtr PolyRing::create(VarUniverse universe, MonomialOrder order, CoeffDomain domain) {
  if (order.kind() == MonomialOrder::Kind::Block && order.elim_count() > universe.size())
    throw StructuralError("block order eliminates more variables than the ring has");
  return RingPtr(new PolyRing(std::move(universe), order, domain));
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  if (order == order_) return shared_from_this();
  return create(universe_, order, domain_);
}

RingPtr PolyRing::with_domain(CoeffDomain domain) const {
  if (domain == domain_) return shared_from_this();
  return create(universe_, order_, domain);
}

MPoly PolyRing::zero() const { return MPoly(shared_from_this()); }

MPoly PolyRing::one() const { return constant(1); }

MPoly PolyRing::constant(long c) const { return constant(scalar(c)); }

MPoly PolyRing::constant(const Scalar& c) const {
  if (!(c.domain() == domain_)) throw StructuralError("constant from domain " + c.domain().name());
  std::vector<Term> t;
  if (!c.is_zero()) t.push_back({Monomial(nvars()), c});
  return MPoly(shared_from_this(), std::move(t));
}

MPoly PolyRing::variable(std::size_t idx) const {
  if (idx >= nvars()) throw StructuralError("variable index " + std::to_string(idx) + " out of range");
  Monomial m(nvars());
  m.set(idx, 1);
  return MPoly(shared_from_this(), {Term{std::move(m), scalar(1)}});
}

MPoly PolyRing::grid_variable(std::size_t i, std::size_t j) const {
  return variable(universe_.grid_index(i, j));
}

// ---------------------------------------------------------------------------

MPoly::MPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef += t.coef;
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

MPoly MPoly::from_sorted(RingPtr ring, std::vector<Term> terms) {
  MPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

void MPoly::check_ring(const MPoly& o) const {
  if (!ring_ || !o.ring_) throw StructuralError("polynomial without a ring");
  if (!ring_->same_as(*o.ring_)) throw StructuralError("polynomials live in different rings");
}

Scalar MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Scalar::zero(ring_->domain());
}

const Monomial& MPoly::lead_monomial() const {
  if (terms_.empty()) throw PreconditionError("leading monomial of zero");
  return terms_.front().mono;
}

const Scalar& MPoly::lead_coeff() const {
  if (terms_.empty()) throw PreconditionError("leading coefficient of zero");
  return terms_.front().coef;
}

std::uint32_t MPoly::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool MPoly::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

std::vector<std::size_t> MPoly::support() const {
  std::vector<bool> seen(ring_->nvars(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (t.mono[i]) seen[i] = true;
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) s.push_back(i);
  return s;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_ring(o);
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = order.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_sorted(ring_, std::move(out));
}

MPoly MPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef = -t.coef;
  return from_sorted(ring_, std::move(out));
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return MPoly(ring_);
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono, o.terms_[0].coef);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono, terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  return MPoly(ring_, std::move(prod));
}

MPoly MPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return MPoly(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef *= c;
  // GF(p) and QQ have no zero divisors, ZZ neither.
  return from_sorted(ring_, std::move(out));
}

MPoly MPoly::times_monomial(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return MPoly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coef * c});
  return from_sorted(ring_, std::move(out));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = ring_->one();
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  if (!ring_->domain().is_field()) throw StructuralError("monic() needs a field");
  return scaled(lead_coeff().inverse());
}

MPoly MPoly::diff(std::size_t var) const {
  if (var >= ring_->nvars()) throw StructuralError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint16_t e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, static_cast<std::uint16_t>(e - 1));
    Scalar c = t.coef * ring_->scalar(static_cast<long>(e));
    if (!c.is_zero()) out.push_back({std::move(m), std::move(c)});
  }
  // Lowering one exponent can reorder terms under degrevlex, so re-sort.
  return MPoly(ring_, std::move(out));
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (images.size() != ring_->nvars())
    throw StructuralError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const RingPtr& target = images.front().ring();
  for (const auto& im : images)
    if (!im.ring() || !im.ring()->same_as(*target)) throw StructuralError("substitution images in different rings");
  if (!(target->domain() == ring_->domain())) throw StructuralError("substitution changes coefficient domain");

  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t v, std::uint16_t e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(target->one());
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  MPoly result(target);
  for (const auto& t : terms_) {
    MPoly term = target->constant(t.coef);
    for (std::size_t v = 0; v < images.size() && !term.is_zero(); ++v)
      if (t.mono[v]) term = term * power(v, t.mono[v]);
    result += term;
  }
  return result;
}

MPoly MPoly::linear_part() const { return homogeneous_component(1); }

MPoly MPoly::homogeneous_component(std::uint32_t degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.degree() == degree) out.push_back(t);
  return from_sorted(ring_, std::move(out));
}

Scalar MPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) throw StructuralError("evaluation point has wrong length");
  Scalar acc = Scalar::zero(ring_->domain());
  std::vector<std::vector<Scalar>> powers(point.size());
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i) {
      std::uint16_t e = t.mono[i];
      if (!e) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Scalar::one(ring_->domain()));
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      v *= cache[e];
    }
    acc += v;
  }
  return acc;
}

MPoly MPoly::map_into(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) throw StructuralError("variable map has wrong length");
  if (!(target->domain() == ring_->domain())) throw StructuralError("map_into changes coefficient domain");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint16_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (!t.mono[i]) continue;
      if (var_map[i] >= e.size()) throw StructuralError("variable map points outside the target ring");
      e[var_map[i]] = static_cast<std::uint16_t>(e[var_map[i]] + t.mono[i]);
    }
    out.push_back({Monomial(std::move(e)), t.coef});
  }
  return MPoly(target, std::move(out));
}

MPoly MPoly::permute_variables(std::span<const std::size_t> perm) const {
  return map_into(ring_, perm);
}

std::uint16_t MPoly::var_content(std::size_t var) const noexcept {
  if (terms_.empty()) return 0;
  std::uint16_t e = terms_.front().mono[var];
  for (const auto& t : terms_) e = std::min(e, t.mono[var]);
  return e;
}

MPoly MPoly::divide_by_monomial(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono / m, t.coef});
  // Dividing every term by the same monomial keeps the order (monomial orders are multiplicative).
  return from_sorted(ring_, std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

MPoly translate(const MPoly& p, std::span<const Scalar> shift) {
  const auto& ring = p.ring();
  if (shift.size() != ring->nvars()) throw StructuralError("shift has wrong length");
  std::vector<MPoly> images;
  images.reserve(shift.size());
  for (std::size_t i = 0; i < shift.size(); ++i) images.push_back(ring->variable(i) + ring->constant(shift[i]));
  return p.substitute(images);
}

}  // namespace permvar
