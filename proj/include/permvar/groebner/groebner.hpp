#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "permvar/errors.hpp"
#include "permvar/ring/mpoly.hpp"

namespace permvar {

inline constexpr double kDefaultGbTimeoutSeconds = 600.0;

struct GbOptions {
  double timeout_s = kDefaultGbTimeoutSeconds;
  /// Return {1} as soon as a nonzero constant shows up.
  bool stop_on_unit = false;
  /// Reduce tails during the main loop, not only in the final pass.
  bool tail_reduce = true;
};

struct GbStats {
  std::size_t input_size = 0;
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
  std::size_t max_basis = 0;
  std::size_t monomials = 0;
  std::uint32_t max_degree = 0;
  /// Largest numerator/denominator bit size in the result (QQ only).
  std::size_t max_coeff_bits = 0;
  double wall_ms = 0;

  nlohmann::json to_json() const;
};

class TimeoutError : public Error {
 public:
  TimeoutError(const std::string& what, GbStats stats) : Error(ErrorKind::Timeout, what), stats_(stats) {}
  const GbStats& stats() const noexcept { return stats_; }

 private:
  GbStats stats_;
};

/// Reduced Groebner basis in the ring's monomial order: monic elements,
/// sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<MPoly> gens, GbStats stats);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<MPoly>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const GbStats& stats() const noexcept { return stats_; }
  /// Minimal generators of the leading-term ideal (the leading monomials).
  std::vector<Monomial> lead_ideal() const;
  bool is_unit() const noexcept;
  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  bool is_homogeneous() const noexcept;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  std::vector<MPoly> gens_;
  GbStats stats_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar
/// selection. The generators' ring must have a field as coefficients.
GroebnerBasis buchberger(std::span<const MPoly> gens, const GbOptions& opts = {});

/// Fully reduced remainder of f modulo G.
MPoly normal_form(const MPoly& f, const GroebnerBasis& g);
std::vector<MPoly> normal_forms(std::span<const MPoly> fs, const GroebnerBasis& g);
bool ideal_contains(const GroebnerBasis& g, std::span<const MPoly> fs);

/// Checks that every S-polynomial of G reduces to zero and that G is
/// reduced. Returns an empty string on success, else a description.
std::string verify_groebner(const GroebnerBasis& g);

/// Copies polynomials into a ring with the same variables and domain but
/// another order.
std::vector<MPoly> change_order(std::span<const MPoly> fs, const MonomialOrder& order);

}  // namespace permvar
