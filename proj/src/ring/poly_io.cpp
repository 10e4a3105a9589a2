#include "permvar/ring/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>

#include "permvar/errors.hpp"

namespace permvar {

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& uni = ring_->universe();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coef.is_negative();
    Scalar mag = neg ? -t.coef : t.coef;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;

    bool wrote = false;
    if (!mag.is_one() || t.mono.is_one()) {
      out += mag.to_string();
      wrote = true;
    }
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (!t.mono[v]) continue;
      if (wrote) out += '*';
      out += uni.name(v);
      if (t.mono[v] > 1) out += '^' + std::to_string(t.mono[v]);
      wrote = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg + " in '" +
                     std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    skip_ws();
    MPoly acc(ring_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!first && !eat('+'))
        break;
      else if (first)
        eat('+');
      MPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  MPoly factor() {
    MPoly base = primary();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 65535) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip_ws();
      // a/b between integer literals is a rational constant
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        num += "/" + den;
      }
      return ring_->constant(Scalar::parse(ring_->domain(), num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto idx = ring_->universe().find(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      return ring_->variable(*idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

}  // namespace

MPoly parse_poly(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

std::vector<MPoly> parse_poly_list(const RingPtr& ring, std::string_view text) {
  std::vector<MPoly> out;
  for (auto line : split_lines(text)) out.push_back(parse_poly(ring, line));
  return out;
}

RingPtr infer_ring(std::string_view text, MonomialOrder order, CoeffDomain domain) {
  std::size_t rows = 0, cols = 0;
  std::vector<std::string> aux;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      unsigned a = 0, b = 0;
      char tail = 0;
      if (std::sscanf(name.c_str(), "x_%u_%u%c", &a, &b, &tail) == 2 && a > 0 && b > 0 &&
          name == "x_" + std::to_string(a) + "_" + std::to_string(b)) {
        rows = std::max<std::size_t>(rows, a);
        cols = std::max<std::size_t>(cols, b);
      } else if (seen.insert(name).second) {
        aux.push_back(name);
      }
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return PolyRing::create(VarUniverse(rows, cols, std::move(aux)), order, domain);
}

std::string to_text(const std::vector<MPoly>& polys) {
  std::string out;
  for (const auto& p : polys) out += p.to_string() + "\n";
  return out;
}

nlohmann::json ring_to_json(const PolyRing& ring) {
  const auto& u = ring.universe();
  return {{"rows", u.rows()},
          {"cols", u.cols()},
          {"aux", u.aux_names()},
          {"order", ring.order().name()},
          {"domain", ring.domain().name()}};
}

RingPtr ring_from_json(const nlohmann::json& j) {
  try {
    VarUniverse u(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                  j.value("aux", std::vector<std::string>{}));
    return PolyRing::create(std::move(u), MonomialOrder::parse(j.at("order").get<std::string>()),
                            CoeffDomain::parse(j.at("domain").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad ring JSON: ") + e.what());
  }
}

nlohmann::json to_json(const MPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    std::vector<std::uint16_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    terms.push_back({{"c", t.coef.to_string()}, {"e", e}});
  }
  return {{"ring", ring_to_json(*p.ring())}, {"terms", terms}};
}

MPoly poly_from_json(const RingPtr& ring, const nlohmann::json& terms) {
  try {
    std::vector<Term> out;
    for (const auto& t : terms) {
      auto e = t.at("e").get<std::vector<std::uint16_t>>();
      if (e.size() != ring->nvars()) throw ParseError("exponent vector has wrong length");
      out.push_back({Monomial(std::move(e)), Scalar::parse(ring->domain(), t.at("c").get<std::string>())});
    }
    return MPoly(ring, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

MPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("terms")) throw ParseError("polynomial JSON needs ring and terms");
  return poly_from_json(ring_from_json(j.at("ring")), j.at("terms"));
}

}  // namespace permvar
