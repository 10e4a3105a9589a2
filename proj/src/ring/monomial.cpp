#include "permvar/ring/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "permvar/errors.hpp"

namespace permvar {

VarUniverse::VarUniverse(std::size_t rows, std::size_t cols, std::vector<std::string> aux)
    : rows_(rows), cols_(cols), aux_(std::move(aux)) {
  if ((rows == 0) != (cols == 0)) throw StructuralError("grid universe needs both rows and cols positive");
}

VarUniverse VarUniverse::named(std::vector<std::string> names) {
  return VarUniverse(0, 0, std::move(names));
}

std::size_t VarUniverse::grid_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw StructuralError("grid variable (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return i * cols_ + j;
}

std::string VarUniverse::name(std::size_t idx) const {
  if (idx < grid_size())
    return "x_" + std::to_string(idx / cols_ + 1) + "_" + std::to_string(idx % cols_ + 1);
  if (idx < size()) return aux_[idx - grid_size()];
  throw StructuralError("variable index " + std::to_string(idx) + " out of range");
}

std::vector<std::string> VarUniverse::names() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(name(i));
  return out;
}

std::optional<std::size_t> VarUniverse::find(std::string_view name) const {
  if (grid_size() > 0 && name.starts_with("x_")) {
    auto rest = name.substr(2);
    auto us = rest.find('_');
    if (us != std::string_view::npos) {
      std::size_t i = 0, j = 0;
      auto a = rest.substr(0, us);
      auto b = rest.substr(us + 1);
      auto [p1, e1] = std::from_chars(a.data(), a.data() + a.size(), i);
      auto [p2, e2] = std::from_chars(b.data(), b.data() + b.size(), j);
      if (e1 == std::errc() && e2 == std::errc() && p1 == a.data() + a.size() && p2 == b.data() + b.size() &&
          i >= 1 && i <= rows_ && j >= 1 && j <= cols_)
        return (i - 1) * cols_ + (j - 1);
    }
  }
  for (std::size_t a = 0; a < aux_.size(); ++a)
    if (aux_[a] == name) return grid_size() + a;
  return std::nullopt;
}

VarUniverse VarUniverse::with_prefix(const std::vector<std::string>& prefix) const {
  std::vector<std::string> all = prefix;
  for (auto& n : names()) {
    if (std::find(prefix.begin(), prefix.end(), n) != prefix.end())
      throw StructuralError("variable name '" + n + "' already in universe");
    all.push_back(std::move(n));
  }
  return named(std::move(all));
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {
  for (auto e : e_) deg_ += e;
}

void Monomial::set(std::size_t i, std::uint16_t e) {
  deg_ = deg_ - e_[i] + e;
  e_[i] = e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::uint32_t s = std::uint32_t(e_[i]) + o.e_[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw CapacityError("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw InternalError("inexact monomial division");
    r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint16_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint16_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i]) s.push_back(i);
  return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

// ---------------------------------------------------------------------------

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "degrevlex" || text == "grevlex") return degrevlex();
  if (text == "lex") return lex();
  if (text.starts_with("block(") && text.ends_with(")")) {
    auto digits = text.substr(6, text.size() - 7);
    std::size_t c = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c);
    if (ec == std::errc() && p == digits.data() + digits.size()) return block(c);
  }
  throw ParseError("unknown monomial order '" + std::string(text) + "'");
}

namespace {

int revlex_tail(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b, std::size_t from) {
  for (std::size_t i = a.size(); i-- > from;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(std::span<const std::uint16_t> a, std::uint32_t deg_a,
                           std::span<const std::uint16_t> b, std::uint32_t deg_b) const noexcept {
  switch (kind_) {
    case Kind::DegRevLex:
      if (deg_a != deg_b) return deg_a < deg_b ? -1 : 1;
      return revlex_tail(a, b, 0);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Block: {
      std::size_t c = std::min(elim_, a.size());
      std::uint32_t head_a = 0, head_b = 0;
      for (std::size_t i = 0; i < c; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        head_a += a[i];
        head_b += b[i];
      }
      std::uint32_t ta = deg_a - head_a, tb = deg_b - head_b;
      if (ta != tb) return ta < tb ? -1 : 1;
      return revlex_tail(a, b, c);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(elim_) + ")";
  }
  return "?";
}

}  // namespace permvar
