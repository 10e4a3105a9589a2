// Internal Buchberger machinery shared by the groebner sources.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <tuple>
#include <vector>

#include "permvar/groebner/groebner.hpp"
#include "permvar/ring/mpoly.hpp"

namespace permvar::gb {

using MonoId = std::uint32_t;
inline constexpr MonoId kNoMono = std::numeric_limits<MonoId>::max();

/// Interned exponent vectors. The hash is linear in the exponents, so the
/// hash of a product is the sum of the factors' hashes.
class MonoTable {
 public:
  MonoTable(std::size_t nvars, MonomialOrder order) : n_(nvars), order_(order), weights_(nvars) {
    std::mt19937_64 rng(0x5eed5eedULL);
    for (auto& w : weights_) w = rng() | 1;
    slots_.assign(1024, kNoMono);
  }

  std::size_t nvars() const noexcept { return n_; }
  std::size_t size() const noexcept { return deg_.size(); }
  const std::uint16_t* exps(MonoId id) const noexcept { return exps_.data() + std::size_t(id) * n_; }
  std::uint32_t degree(MonoId id) const noexcept { return deg_[id]; }

  MonoId intern(const std::uint16_t* e) {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < n_; ++i) h += weights_[i] * e[i];
    return find_or_insert(h, [&](std::size_t i) { return e[i]; });
  }

  MonoId intern(const Monomial& m) { return intern(m.exponents().data()); }

  MonoId product(MonoId a, MonoId b) {
    const std::uint16_t* ea = exps(a);
    const std::uint16_t* eb = exps(b);
    return find_or_insert(hash_[a] + hash_[b], [&](std::size_t i) {
      std::uint32_t s = std::uint32_t(ea[i]) + eb[i];
      if (s > 0xffffu) throw CapacityError("exponent overflow in Groebner computation");
      return static_cast<std::uint16_t>(s);
    });
  }

  /// b / a, requires a | b.
  MonoId quotient(MonoId b, MonoId a) {
    const std::uint16_t* ea = exps(a);
    const std::uint16_t* eb = exps(b);
    return find_or_insert(hash_[b] - hash_[a], [&](std::size_t i) { return static_cast<std::uint16_t>(eb[i] - ea[i]); });
  }

  MonoId lcm(MonoId a, MonoId b) {
    const std::uint16_t* ea = exps(a);
    const std::uint16_t* eb = exps(b);
    tmp_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) tmp_[i] = std::max(ea[i], eb[i]);
    return intern(tmp_.data());
  }

  bool divides(MonoId a, MonoId b) const noexcept {
    if (sev_[a] & ~sev_[b]) return false;
    if (deg_[a] > deg_[b]) return false;
    const std::uint16_t* ea = exps(a);
    const std::uint16_t* eb = exps(b);
    for (std::size_t i = 0; i < n_; ++i)
      if (ea[i] > eb[i]) return false;
    return true;
  }

  bool coprime(MonoId a, MonoId b) const noexcept {
    const std::uint16_t* ea = exps(a);
    const std::uint16_t* eb = exps(b);
    for (std::size_t i = 0; i < n_; ++i)
      if (ea[i] && eb[i]) return false;
    return true;
  }

  int cmp(MonoId a, MonoId b) const noexcept {
    if (a == b) return 0;
    return order_.compare({exps(a), n_}, deg_[a], {exps(b), n_}, deg_[b]);
  }

  Monomial to_monomial(MonoId id) const {
    return Monomial(std::vector<std::uint16_t>(exps(id), exps(id) + n_));
  }

 private:
  template <class Gen>
  MonoId find_or_insert(std::uint64_t h, Gen&& gen) {
    std::size_t mask = slots_.size() - 1;
    std::size_t pos = static_cast<std::size_t>(h ^ (h >> 29)) & mask;
    for (;;) {
      MonoId id = slots_[pos];
      if (id == kNoMono) break;
      if (hash_[id] == h) {
        const std::uint16_t* e = exps(id);
        bool same = true;
        for (std::size_t i = 0; i < n_; ++i)
          if (e[i] != gen(i)) {
            same = false;
            break;
          }
        if (same) return id;
      }
      pos = (pos + 1) & mask;
    }
    MonoId id = static_cast<MonoId>(deg_.size());
    if (id == kNoMono) throw CapacityError("monomial table full");
    // gen may read from exps_, so materialize before appending.
    buf_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) buf_[i] = gen(i);
    std::uint32_t d = 0;
    std::uint64_t sev = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint16_t e = buf_[i];
      exps_.push_back(e);
      d += e;
      if (e) sev |= std::uint64_t(1) << (i % 64);
    }
    deg_.push_back(d);
    sev_.push_back(sev);
    hash_.push_back(h);
    slots_[pos] = id;
    if (2 * deg_.size() > slots_.size()) rehash();
    return id;
  }

  void rehash() {
    std::vector<MonoId> fresh(slots_.size() * 2, kNoMono);
    std::size_t mask = fresh.size() - 1;
    for (MonoId id = 0; id < deg_.size(); ++id) {
      std::uint64_t h = hash_[id];
      std::size_t pos = static_cast<std::size_t>(h ^ (h >> 29)) & mask;
      while (fresh[pos] != kNoMono) pos = (pos + 1) & mask;
      fresh[pos] = id;
    }
    slots_.swap(fresh);
  }

  std::size_t n_;
  MonomialOrder order_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint16_t> exps_;
  std::vector<std::uint32_t> deg_;
  std::vector<std::uint64_t> sev_;
  std::vector<std::uint64_t> hash_;
  std::vector<MonoId> slots_;
  std::vector<std::uint16_t> tmp_;
  std::vector<std::uint16_t> buf_;
};

// ---------------------------------------------------------------------------
// Coefficient fields

struct ModpField {
  using Coef = std::uint32_t;
  std::uint64_t p;

  explicit ModpField(std::uint64_t prime) : p(prime) {}
  Coef zero() const noexcept { return 0; }
  Coef one() const noexcept { return 1; }
  static bool is_zero(Coef a) noexcept { return a == 0; }
  static bool is_one(Coef a) noexcept { return a == 1; }
  Coef neg(Coef a) const noexcept { return a ? static_cast<Coef>(p - a) : 0; }
  Coef mul(Coef a, Coef b) const noexcept { return static_cast<Coef>((std::uint64_t(a) * b) % p); }
  /// acc += a * b
  void fma(Coef& acc, Coef a, Coef b) const noexcept {
    acc = static_cast<Coef>((acc + (std::uint64_t(a) * b) % p) % p);
  }
  Coef inv(Coef a) const {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = a;
    while (nr) {
      std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<Coef>(t);
  }
  Coef from_scalar(const Scalar& s) const { return static_cast<Coef>(s.residue()); }
  Scalar to_scalar(Coef c, const CoeffDomain& d) const { return Scalar::from_residue(d, c); }
  static std::size_t bits(Coef) noexcept { return 0; }
};

struct RationalField {
  using Coef = mpq_class;
  mutable mpq_class tmp;

  Coef zero() const { return Coef(0); }
  Coef one() const { return Coef(1); }
  static bool is_zero(const Coef& a) noexcept { return sgn(a) == 0; }
  static bool is_one(const Coef& a) noexcept { return a == 1; }
  Coef neg(const Coef& a) const { return -a; }
  Coef mul(const Coef& a, const Coef& b) const { return a * b; }
  void fma(Coef& acc, const Coef& a, const Coef& b) const {
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
  Coef inv(const Coef& a) const { return 1 / a; }
  Coef from_scalar(const Scalar& s) const { return s.rational(); }
  Scalar to_scalar(const Coef& c, const CoeffDomain& d) const { return Scalar(d, c); }
  static std::size_t bits(const Coef& c) {
    return std::max(mpz_sizeinbase(c.get_num_mpz_t(), 2), mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
};

// ---------------------------------------------------------------------------

template <class Field>
struct IPoly {
  std::vector<MonoId> m;
  std::vector<typename Field::Coef> c;
  std::uint32_t sugar = 0;

  bool empty() const noexcept { return m.empty(); }
  std::size_t size() const noexcept { return m.size(); }
  MonoId lead() const noexcept { return m.front(); }
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(std::chrono::steady_clock::now()),
        limit_(seconds > 0 ? start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                          std::chrono::duration<double>(seconds))
                           : std::chrono::steady_clock::time_point::max()) {}
  bool expired() const { return std::chrono::steady_clock::now() > limit_; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point limit_;
};

/// Reduces polynomials against a growing list of monic reducers using a
/// max-heap of pending monomials and a dense coefficient accumulator
/// indexed by monomial id.
template <class Field>
class Reducer {
 public:
  using Coef = typename Field::Coef;
  using Poly = IPoly<Field>;

  Reducer(MonoTable& table, const Field& field, const std::vector<Poly>& polys, GbStats& stats,
          const Deadline& deadline)
      : t_(table), f_(field), polys_(polys), stats_(stats), deadline_(deadline), heap_(HeapCmp{&table}) {}

  /// Restricts reducers to `ids` (indices into the poly list); by default
  /// every poly with active[i] set is eligible.
  void set_candidates(std::vector<std::size_t> ids) { candidates_ = std::move(ids); }
  std::vector<std::size_t>& candidates() { return candidates_; }
  void reset_cache() {
    hit_.clear();
    checked_.clear();
  }

  /// acc += factor * mono * p, optionally skipping p's lead term.
  void add_scaled(const Poly& p, MonoId mono, const Coef& factor, bool skip_lead) {
    for (std::size_t i = skip_lead ? 1 : 0; i < p.size(); ++i) {
      MonoId id = t_.product(mono, p.m[i]);
      touch(id);
      f_.fma(acc_[id], factor, p.c[i]);
    }
  }

  void add_term(MonoId id, const Coef& c) {
    touch(id);
    Coef one = f_.one();
    f_.fma(acc_[id], c, one);
  }

  /// Drains the accumulator into a reduced polynomial. With `full` every
  /// term is reduced; otherwise only until the leading term is irreducible.
  Poly drain(bool full, std::uint32_t sugar, bool stop_on_const = false) {
    Poly out;
    out.sugar = sugar;
    while (!heap_.empty()) {
      MonoId id = heap_.top();
      heap_.pop();
      in_heap_[id] = 0;
      if (Field::is_zero(acc_[id])) continue;
      Coef c = acc_[id];
      acc_[id] = f_.zero();
      if (full || out.empty()) {
        std::size_t r = find_reducer(id);
        if (r != kNone) {
          const Poly& g = polys_[r];
          MonoId q = t_.quotient(id, g.lead());
          add_scaled(g, q, f_.neg(c), true);
          out.sugar = std::max(out.sugar, t_.degree(q) + g.sugar);
          if ((++stats_.reduction_steps & 1023) == 0 && deadline_.expired())
            throw TimeoutError("Groebner computation timed out during reduction", stats_);
          continue;
        }
      }
      out.m.push_back(id);
      out.c.push_back(std::move(c));
      if (stop_on_const && t_.degree(id) == 0) {
        clear();
        break;
      }
    }
    return out;
  }

  void clear() {
    while (!heap_.empty()) {
      MonoId id = heap_.top();
      heap_.pop();
      in_heap_[id] = 0;
      acc_[id] = f_.zero();
    }
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t find_reducer(MonoId id) {
    if (hit_.size() <= id) {
      hit_.resize(t_.size() + 1, kNone);
      checked_.resize(t_.size() + 1, 0);
    }
    if (hit_[id] != kNone) return hit_[id];
    std::size_t from = checked_[id];
    for (std::size_t k = from; k < candidates_.size(); ++k) {
      std::size_t r = candidates_[k];
      if (r == kNone) continue;
      if (t_.divides(polys_[r].lead(), id)) {
        hit_[id] = r;
        return r;
      }
    }
    checked_[id] = candidates_.size();
    return kNone;
  }

 private:
  struct HeapCmp {
    const MonoTable* t;
    bool operator()(MonoId a, MonoId b) const { return t->cmp(a, b) < 0; }
  };

  void touch(MonoId id) {
    if (acc_.size() <= id) {
      std::size_t n = std::max<std::size_t>(t_.size(), id + 1) * 2;
      acc_.resize(n, f_.zero());
      in_heap_.resize(n, 0);
    }
    if (!in_heap_[id]) {
      in_heap_[id] = 1;
      heap_.push(id);
    }
  }

  MonoTable& t_;
  const Field& f_;
  const std::vector<Poly>& polys_;
  GbStats& stats_;
  const Deadline& deadline_;
  std::vector<Coef> acc_;
  std::vector<std::uint8_t> in_heap_;
  std::priority_queue<MonoId, std::vector<MonoId>, HeapCmp> heap_;
  std::vector<std::size_t> candidates_;
  std::vector<std::size_t> hit_;
  std::vector<std::size_t> checked_;
};

}  // namespace permvar::gb
