#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permvar {

/// Names the variables of a polynomial ring.
///
/// A grid universe of shape (k, n) owns the variables x_{i,j} in row-major
/// order, followed by auxiliary variables. A universe built with `named`
/// has only auxiliary names; elimination rings are built that way so that
/// the eliminated variables can come first.
class VarUniverse {
 public:
  VarUniverse() = default;
  VarUniverse(std::size_t rows, std::size_t cols, std::vector<std::string> aux = {});
  static VarUniverse named(std::vector<std::string> names);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t grid_size() const noexcept { return rows_ * cols_; }
  std::size_t size() const noexcept { return grid_size() + aux_.size(); }
  const std::vector<std::string>& aux_names() const noexcept { return aux_; }

  /// 0-based (i, j) -> variable index.
  std::size_t grid_index(std::size_t i, std::size_t j) const;
  std::string name(std::size_t idx) const;
  std::vector<std::string> names() const;
  std::optional<std::size_t> find(std::string_view name) const;

  /// Named universe: `prefix` followed by every variable of this universe.
  VarUniverse with_prefix(const std::vector<std::string>& prefix) const;

  friend bool operator==(const VarUniverse&, const VarUniverse&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::string> aux_;
};

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t degree() const noexcept { return deg_; }
  std::uint16_t operator[](std::size_t i) const noexcept { return e_[i]; }
  std::span<const std::uint16_t> exponents() const noexcept { return e_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, std::uint16_t e);

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

 private:
  std::vector<std::uint16_t> e_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Term order on exponent vectors. Variables compare in index order
/// x_0 > x_1 > ... ; `block(c)` compares the first c variables
/// lexicographically and breaks ties by degrevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { DegRevLex, Lex, Block };

  MonomialOrder() = default;
  static MonomialOrder degrevlex() noexcept { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() noexcept { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block(std::size_t elim_count) noexcept { return MonomialOrder(Kind::Block, elim_count); }
  /// "degrevlex", "lex", "block(3)".
  static MonomialOrder parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::size_t elim_count() const noexcept { return elim_; }
  bool degree_compatible() const noexcept { return kind_ == Kind::DegRevLex; }

  /// <0, 0, >0 as a is smaller, equal or greater than b.
  int compare(std::span<const std::uint16_t> a, std::uint32_t deg_a,
              std::span<const std::uint16_t> b, std::uint32_t deg_b) const noexcept;
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a.exponents(), a.degree(), b.exponents(), b.degree());
  }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t e) noexcept : kind_(k), elim_(e) {}

  Kind kind_ = Kind::DegRevLex;
  std::size_t elim_ = 0;
};

}  // namespace permvar
