#include "permvar/ring/scalar.hpp"

#include <charconv>

#include "permvar/errors.hpp"

namespace permvar {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Timeout: return "timeout";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
    case ErrorKind::NotFound: return "not-found";
  }
  return "unknown";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

CoeffDomain CoeffDomain::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 32)) throw StructuralError("prime modulus must be below 2^32, got " + std::to_string(p));
  if (!is_prime_u64(p)) throw StructuralError("modulus " + std::to_string(p) + " is not prime");
  return CoeffDomain(Kind::PrimeField, p);
}

CoeffDomain CoeffDomain::parse(std::string_view text) {
  if (text == "ZZ") return integers();
  if (text == "QQ") return rationals();
  std::string_view digits = text;
  if (text.starts_with("GF(") && text.ends_with(")")) digits = text.substr(3, text.size() - 4);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("unrecognized coefficient domain '" + std::string(text) + "'");
  return prime_field(p);
}

std::string CoeffDomain::name() const {
  switch (kind_) {
    case Kind::Integer: return "ZZ";
    case Kind::Rational: return "QQ";
    case Kind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Fp::Fp(std::int64_t v, std::uint64_t p) : p_(p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  v_ = static_cast<std::uint64_t>(r);
}

Fp Fp::from_mpq(const mpq_class& q, std::uint64_t p) {
  std::uint64_t num = mpz_mod_u64(q.get_num(), p);
  std::uint64_t den = mpz_mod_u64(q.get_den(), p);
  if (den == 0) throw PreconditionError("denominator divisible by the field characteristic " + std::to_string(p));
  return from_residue(num, p) * from_residue(den, p).inverse();
}

Fp Fp::inverse() const {
  if (v_ == 0) throw PreconditionError("division by zero in GF(" + std::to_string(p_) + ")");
  return from_residue(powmod(v_, p_ - 2, p_), p_);
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const CoeffDomain& d, long v) : dom_(d) {
  if (d.is_prime_field())
    r_ = Fp(v, d.modulus()).value();
  else
    q_ = v;
}

Scalar::Scalar(const CoeffDomain& d, const mpz_class& v) : dom_(d) {
  if (d.is_prime_field())
    r_ = mpz_mod_u64(v, d.modulus());
  else
    q_ = v;
}

Scalar::Scalar(const CoeffDomain& d, const mpq_class& v) : dom_(d) {
  if (d.is_prime_field()) {
    r_ = Fp::from_mpq(v, d.modulus()).value();
  } else {
    if (d.kind() == CoeffDomain::Kind::Integer && v.get_den() != 1)
      throw StructuralError("non-integral value " + v.get_str() + " over ZZ");
    q_ = v;
  }
}

Scalar Scalar::from_residue(const CoeffDomain& d, std::uint64_t r) {
  if (!d.is_prime_field()) return Scalar(d, mpz_class(std::to_string(r)));
  Scalar s;
  s.dom_ = d;
  s.r_ = r % d.modulus();
  return s;
}

Scalar Scalar::parse(const CoeffDomain& d, std::string_view text) {
  mpq_class q;
  try {
    q = mpq_class(std::string(text), 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Scalar(d, q);
}

bool Scalar::is_zero() const noexcept {
  return dom_.is_prime_field() ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const noexcept {
  return dom_.is_prime_field() ? r_ == 1 : q_ == 1;
}

bool Scalar::is_negative() const noexcept {
  return !dom_.is_prime_field() && sgn(q_) < 0;
}

const mpq_class& Scalar::rational() const {
  if (dom_.is_prime_field()) throw StructuralError("rational() on a prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (!dom_.is_prime_field()) throw StructuralError("residue() on a characteristic-zero scalar");
  return r_;
}

Fp Scalar::to_fp() const {
  return Fp::from_residue(residue(), dom_.modulus());
}

void Scalar::check_same(const Scalar& o) const {
  if (!(dom_ == o.dom_))
    throw StructuralError("coefficient domain mismatch: " + dom_.name() + " vs " + o.dom_.name());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (dom_.is_prime_field()) {
    r_ += o.r_;
    if (r_ >= dom_.modulus()) r_ -= dom_.modulus();
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (dom_.is_prime_field())
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + dom_.modulus() - o.r_;
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (dom_.is_prime_field())
    r_ = r_ * o.r_ % dom_.modulus();
  else
    q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw PreconditionError("division by zero");
  if (dom_.is_prime_field()) {
    r_ = (to_fp() / o.to_fp()).value();
  } else {
    q_ /= o.q_;
    if (dom_.kind() == CoeffDomain::Kind::Integer && q_.get_den() != 1)
      throw StructuralError("inexact division over ZZ");
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (dom_.is_prime_field())
    s.r_ = r_ == 0 ? 0 : dom_.modulus() - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inverse() const {
  return Scalar::one(dom_) / *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.dom_ == b.dom_)) return false;
  return a.dom_.is_prime_field() ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::to_string() const {
  return dom_.is_prime_field() ? std::to_string(r_) : q_.get_str();
}

}  // namespace permvar
