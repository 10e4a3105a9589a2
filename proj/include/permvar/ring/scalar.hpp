#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace permvar {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Coefficient domain of a polynomial ring: ZZ, QQ or a prime field GF(p).
///
/// Prime moduli must be below 2^32 so that a product of two residues fits
/// in 64 bits.
class CoeffDomain {
 public:
  enum class Kind : std::uint8_t { Integer, Rational, PrimeField };

  CoeffDomain() = default;

  static CoeffDomain integers() noexcept { return CoeffDomain(Kind::Integer, 0); }
  static CoeffDomain rationals() noexcept { return CoeffDomain(Kind::Rational, 0); }
  static CoeffDomain prime_field(std::uint64_t p);

  /// Accepts "ZZ", "QQ", "GF(p)" or a bare prime.
  static CoeffDomain parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ != Kind::Integer; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }

  std::string name() const;

  friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;

 private:
  CoeffDomain(Kind k, std::uint64_t p) noexcept : kind_(k), modulus_(p) {}

  Kind kind_ = Kind::Integer;
  std::uint64_t modulus_ = 0;
};

/// Residue class modulo a word-size prime. Carries its modulus so generic
/// numeric templates (permanent engines, elimination) can use it directly.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint64_t p);
  static Fp from_residue(std::uint64_t r, std::uint64_t p) noexcept {
    Fp x;
    x.v_ = r;
    x.p_ = p;
    return x;
  }
  static Fp from_mpq(const mpq_class& q, std::uint64_t p);

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp inverse() const;

  Fp& operator+=(const Fp& o) noexcept {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) noexcept {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) noexcept {
    v_ = (v_ * o.v_) % p_;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) noexcept { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const noexcept { return from_residue(v_ == 0 ? 0 : p_ - v_, p_); }

  friend bool operator==(const Fp& a, const Fp& b) noexcept { return a.v_ == b.v_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

/// An exact coefficient tagged with its domain. Integer and rational values
/// share the mpq representation (integers keep denominator 1); prime-field
/// values are canonical residues in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const CoeffDomain& d, long v);
  Scalar(const CoeffDomain& d, const mpz_class& v);
  Scalar(const CoeffDomain& d, const mpq_class& v);

  static Scalar zero(const CoeffDomain& d) { return Scalar(d, 0L); }
  static Scalar one(const CoeffDomain& d) { return Scalar(d, 1L); }
  static Scalar from_residue(const CoeffDomain& d, std::uint64_t r);

  /// Parses "-12", "3/4" (not over ZZ unless integral), or a residue.
  static Scalar parse(const CoeffDomain& d, std::string_view text);

  const CoeffDomain& domain() const noexcept { return dom_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True for a negative rational; always false over GF(p).
  bool is_negative() const noexcept;

  /// Throws over GF(p).
  const mpq_class& rational() const;
  /// Throws over ZZ/QQ.
  std::uint64_t residue() const;
  Fp to_fp() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Over ZZ only exact division is allowed.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  CoeffDomain dom_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace permvar
