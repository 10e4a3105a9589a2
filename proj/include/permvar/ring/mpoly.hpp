#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "permvar/ring/monomial.hpp"
#include "permvar/ring/scalar.hpp"

namespace permvar {

class MPoly;
class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Immutable ring context shared by every polynomial living in it:
/// variable names, term order and coefficient domain.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static RingPtr create(VarUniverse universe, MonomialOrder order, CoeffDomain domain);

  const VarUniverse& universe() const noexcept { return universe_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const CoeffDomain& domain() const noexcept { return domain_; }
  std::size_t nvars() const noexcept { return universe_.size(); }

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_domain(CoeffDomain domain) const;

  MPoly zero() const;
  MPoly one() const;
  MPoly constant(long c) const;
  MPoly constant(const Scalar& c) const;
  MPoly variable(std::size_t idx) const;
  /// 0-based grid position.
  MPoly grid_variable(std::size_t i, std::size_t j) const;

  Scalar scalar(long v) const { return Scalar(domain_, v); }
  Scalar scalar(const mpq_class& v) const { return Scalar(domain_, v); }

  int compare(const Monomial& a, const Monomial& b) const noexcept { return order_.compare(a, b); }

  /// Same variables, order and domain.
  bool same_as(const PolyRing& o) const noexcept {
    return this == &o || (universe_ == o.universe_ && order_ == o.order_ && domain_ == o.domain_);
  }

 private:
  PolyRing(VarUniverse u, MonomialOrder o, CoeffDomain d)
      : universe_(std::move(u)), order_(o), domain_(d) {}

  VarUniverse universe_;
  MonomialOrder order_;
  CoeffDomain domain_;
};

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse distributed polynomial. Terms are kept strictly descending in
/// the ring's order with nonzero coefficients; zero is the empty list.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Canonicalizes: sorts, merges duplicates, drops zeros.
  MPoly(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Coefficient of the constant monomial.
  Scalar constant_term() const;

  const Monomial& lead_monomial() const;
  const Scalar& lead_coeff() const;
  /// Highest total degree of a term; 0 for the zero polynomial.
  std::uint32_t total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Variables that occur in some term.
  std::vector<std::size_t> support() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const Scalar& c) const;
  MPoly times_monomial(const Monomial& m, const Scalar& c) const;
  MPoly pow(unsigned e) const;
  /// Divides by the leading coefficient (fields only).
  MPoly monic() const;

  MPoly diff(std::size_t var) const;
  /// Replaces variable i by images[i]; all images share one target ring.
  MPoly substitute(std::span<const MPoly> images) const;
  /// Sum of the degree-1 terms.
  MPoly linear_part() const;
  MPoly homogeneous_component(std::uint32_t degree) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Moves the polynomial into `target`, sending variable i to var_map[i].
  MPoly map_into(const RingPtr& target, std::span<const std::size_t> var_map) const;
  /// Same ring, exponent of variable i moved to position perm[i].
  MPoly permute_variables(std::span<const std::size_t> perm) const;
  /// Largest e with var^e dividing every term.
  std::uint16_t var_content(std::size_t var) const noexcept;
  /// Exact division by a monomial dividing every term.
  MPoly divide_by_monomial(const Monomial& m) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  std::string to_string() const;

 private:
  void check_ring(const MPoly& o) const;
  static MPoly from_sorted(RingPtr ring, std::vector<Term> terms);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Applies a product of linear maps: x_i |-> x_i + shift[i].
MPoly translate(const MPoly& p, std::span<const Scalar> shift);

}  // namespace permvar
