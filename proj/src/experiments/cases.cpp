#include "permvar/experiments/cases.hpp"

#include <gmp.h>

#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "cases_data.hpp"
#include "permvar/errors.hpp"
#include "permvar/experiments/constructions.hpp"
#include "permvar/experiments/slices.hpp"
#include "permvar/groebner/dimension.hpp"
#include "permvar/groebner/ideal_ops.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/permanent/kirkup.hpp"
#include "permvar/permanent/permanent.hpp"
#include "permvar/torus/torus.hpp"
#include "permvar/version.hpp"

namespace permvar {

using nlohmann::json;

const char* to_string(Tier t) noexcept { return t == Tier::Default ? "default" : "extended"; }

Tier parse_tier(const std::string& s) {
  if (s == "default") return Tier::Default;
  if (s == "extended") return Tier::Extended;
  throw ParseError("unknown tier '" + s + "' (expected default or extended)");
}

const char* to_string(CaseStatus s) noexcept {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<CaseSpec>& case_registry() {
  static const std::vector<CaseSpec> registry = [] {
    json doc = json::parse(detail::kCaseRegistryJson);
    std::vector<CaseSpec> out;
    std::set<std::string> seen;
    for (const auto& c : doc.at("cases")) {
      CaseSpec s;
      s.id = c.at("id").get<std::string>();
      if (!seen.insert(s.id).second) throw InternalError("duplicate case id " + s.id);
      s.criterion = c.at("criterion").get<int>();
      s.tier = parse_tier(c.at("tier").get<std::string>());
      s.claim = c.at("claim").get<std::string>();
      s.params = c.at("params");
      s.expected = c.at("expected");
      out.push_back(std::move(s));
    }
    return out;
  }();
  return registry;
}

const CaseSpec& find_case(const std::string& id) {
  for (const auto& c : case_registry())
    if (c.id == id) return c;
  throw NotFoundError("unknown case id '" + id + "'");
}

std::vector<std::string> case_ids() {
  std::vector<std::string> out;
  for (const auto& c : case_registry()) out.push_back(c.id);
  return out;
}

json RunConfig::to_json() const {
  return json{{"prime", prime}, {"prime2", prime2}, {"order", order.name()}, {"seed", seed},
              {"timeout_s", timeout_s}, {"tier", permvar::to_string(tier)}, {"overrides", overrides}};
}

json environment_fingerprint() {
  return json{{"library", kVersion},
              {"compiler", __VERSION__},
              {"cxx", static_cast<long>(__cplusplus)},
              {"gmp", gmp_version},
              {"threads", 1}};
}

json CaseReport::to_json(bool include_timing) const {
  json j{{"schema", kReportSchemaVersion},
         {"id", id},
         {"status", permvar::to_string(status)},
         {"pass", passed()},
         {"criterion", criterion},
         {"tier", permvar::to_string(tier)},
         {"params", params},
         {"measured", measured},
         {"expected", expected},
         {"failures", failures},
         {"prime_agreement", prime_agreement},
         {"primes", {config.prime, config.prime2}},
         {"seed", config.seed},
         {"order", config.order.name()},
         {"environment", environment_fingerprint()}};
  j["error"] = error ? json(*error) : json(nullptr);
  if (include_timing) j["wall_ms"] = wall_ms;
  return j;
}

namespace {

// Expected values are either literal JSON or one of these formulas in the
// case's size parameter.
long eval_formula(const json& e, long v) {
  if (e.is_number_integer()) return e.get<long>();
  static const std::map<std::string, long (*)(long)> table = {
      {"n", [](long x) { return x; }},
      {"k", [](long x) { return x; }},
      {"k+1", [](long x) { return x + 1; }},
      {"n^2", [](long x) { return x * x; }},
      {"2 + n(n-1)/2", [](long x) { return 2 + x * (x - 1) / 2; }},
  };
  auto it = e.is_string() ? table.find(e.get<std::string>()) : table.end();
  if (it == table.end()) throw InternalError("unsupported expected formula " + e.dump());
  return it->second(v);
}

std::vector<long> as_list(const json& j) {
  std::vector<long> out;
  if (j.is_array())
    for (const auto& x : j) out.push_back(x.get<long>());
  else
    out.push_back(j.get<long>());
  return out;
}

std::string label(const char* var, long v) { return std::string(var) + "=" + std::to_string(v); }

class Ctx {
 public:
  Ctx(const CaseSpec& spec, const RunConfig& cfg, CaseReport& rep) : spec_(spec), cfg_(cfg), rep_(rep) {
    params_ = spec.params;
    for (const auto& [key, value] : cfg.overrides.items()) params_[key] = value;
    rep_.params = params_;
  }

  const json& params() const { return params_; }
  const json& expected(const std::string& key) const { return spec_.expected.at(key); }
  const RunConfig& cfg() const { return cfg_; }
  GbOptions gb() const {
    GbOptions o;
    o.timeout_s = cfg_.timeout_s;
    return o;
  }
  std::vector<std::uint64_t> primes() const { return {cfg_.prime, cfg_.prime2}; }
  CoeffDomain field(std::uint64_t p) const { return CoeffDomain::prime_field(p); }
  std::mt19937_64 rng(std::uint64_t salt) const { return std::mt19937_64(cfg_.seed ^ (salt * 0x9E3779B97F4A7C15ULL)); }

  void measure(const std::string& key, const std::string& sub, const json& value) {
    if (sub.empty())
      rep_.measured[key] = value;
    else
      rep_.measured[key][sub] = value;
  }

  /// Records a measured value against its expectation.
  void check(const std::string& key, const std::string& sub, const json& measured, const json& expected) {
    measure(key, sub, measured);
    if (sub.empty())
      rep_.expected[key] = expected;
    else
      rep_.expected[key][sub] = expected;
    if (measured != expected)
      rep_.failures.push_back(key + (sub.empty() ? "" : "[" + sub + "]") + ": measured " + measured.dump() +
                              ", expected " + expected.dump());
  }

  /// Values computed over the two primes must coincide; returns the first.
  json agree(const std::string& what, const json& a, const json& b) {
    if (a != b) {
      rep_.prime_agreement = false;
      rep_.failures.push_back(what + ": primes disagree (" + a.dump() + " vs " + b.dump() + ")");
    }
    return a;
  }

  /// Runs f over both primes and reconciles the results.
  template <class F>
  json per_prime(const std::string& what, F&& f) {
    json a = f(cfg_.prime);
    json b = f(cfg_.prime2);
    return agree(what, a, b);
  }

 private:
  const CaseSpec& spec_;
  const RunConfig& cfg_;
  CaseReport& rep_;
  json params_;
};

DimensionReport dim_of(std::span<const MPoly> gens, const GbOptions& o) { return ideal_dimension(buchberger(gens, o)); }

MPoly variable_product(const RingPtr& ring) {
  MPoly prod = ring->one();
  for (std::size_t v = 0; v < ring->nvars(); ++v) prod *= ring->variable(v);
  return prod;
}

std::vector<MPoly> concat(std::vector<MPoly> a, const std::vector<MPoly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---- criterion 1 and 5 -------------------------------------------------------

void run_codim_generic(Ctx& c, const char* var, bool square_plus_one) {
  for (long v : as_list(c.params().at(var))) {
    auto s = static_cast<std::size_t>(v);
    GenericMatrixSpec spec = square_plus_one ? GenericMatrixSpec{s, s + 1} : GenericMatrixSpec{2, s};
    json codim = c.per_prime("codim " + label(var, v), [&](std::uint64_t p) {
      return dim_of(permanental_ideal(spec, c.cfg().order, c.field(p)), c.gb()).codim;
    });
    c.check("codim", label(var, v), codim, eval_formula(c.expected("codim"), v));
  }
}

// ---- criterion 2 -------------------------------------------------------------

// Minimal supports not contained in any of the lines: pairs that are not
// lines and triples whose pairs all are.
std::vector<MPoly> outside_lines(const RingPtr& ring, const std::vector<CoordinateLine>& lines) {
  const auto& u = ring->universe();
  const std::size_t N = u.grid_size();
  std::set<std::pair<std::size_t, std::size_t>> is_line;
  for (const auto& l : lines) {
    std::size_t a = u.grid_index(l.i, l.j), b = u.grid_index(l.l, l.m);
    is_line.insert({std::min(a, b), std::max(a, b)});
  }
  auto line = [&](std::size_t a, std::size_t b) { return is_line.count({a, b}) > 0; };
  std::vector<MPoly> out;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      if (!line(a, b)) {
        out.push_back(ring->variable(a) * ring->variable(b));
        continue;
      }
      for (std::size_t d = b + 1; d < N; ++d)
        if (line(a, d) && line(b, d)) out.push_back(ring->variable(a) * ring->variable(b) * ring->variable(d));
    }
  return out;
}

json census_at(std::size_t n, std::uint64_t p, const RunConfig& cfg, const GbOptions& opts) {
  const auto F = CoeffDomain::prime_field(p);
  auto comps = census_components(n, cfg.order, F);
  auto ideal = permanental_ideal({2, n}, cfg.order, F);
  std::vector<GroebnerBasis> bases;
  for (const auto& c : comps) bases.push_back(buchberger(c.gens, opts));

  bool contain = true, irredundant = true;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    contain = contain && ideal_contains(bases[a], ideal);
    for (std::size_t b = 0; b < comps.size(); ++b)
      if (a != b && ideal_contains(bases[a], comps[b].gens)) irredundant = false;
  }

  std::vector<MPoly> meet = comps[0].gens;
  for (std::size_t a = 1; a < comps.size(); ++a) meet = ideal_intersection(meet, comps[a].gens, opts);
  bool radical_equal = ideal_contains(buchberger(meet, opts), ideal);
  for (const auto& g : meet)
    if (radical_equal && !radical_membership(g, ideal, opts)) radical_equal = false;

  auto lines = census_lines(n);
  const RingPtr ring = ideal.front().ring();
  std::size_t min_per_line = comps.size();
  for (const auto& l : lines) {
    auto lg = buchberger(line_ideal(ring, l), opts);
    std::size_t count = 0;
    for (const auto& c : comps) count += ideal_contains(lg, c.gens);
    min_per_line = std::min(min_per_line, count);
  }

  // Components are smooth away from the origin, so Sing is the union of
  // pairwise intersections; each must sit inside the lines.
  auto witnesses = outside_lines(ring, lines);
  bool pairwise = true;
  for (std::size_t a = 0; a < comps.size() && pairwise; ++a)
    for (std::size_t b = a + 1; b < comps.size() && pairwise; ++b) {
      auto sum = concat(comps[a].gens, comps[b].gens);
      for (const auto& w : witnesses)
        if (!radical_membership(w, sum, opts)) {
          pairwise = false;
          break;
        }
    }

  return json{{"components", comps.size()},        {"contain_ideal", contain},
              {"irredundant", irredundant},         {"intersection_is_radical", radical_equal},
              {"lines", lines.size()},              {"min_components_per_line", min_per_line},
              {"pairwise_in_lines", pairwise}};
}

void run_census(Ctx& c) {
  for (long n : as_list(c.params().at("n"))) {
    if (n < 3 || n > 4) throw PreconditionError("census runs for n = 3 or 4");
    json got = c.per_prime("census " + label("n", n), [&](std::uint64_t p) {
      return census_at(static_cast<std::size_t>(n), p, c.cfg(), c.gb());
    });
    const std::string sub = label("n", n);
    for (const char* key : {"components", "lines", "min_components_per_line"})
      c.check(key, sub, got.at(key), eval_formula(c.expected(key), n));
    for (const char* key : {"contain_ideal", "irredundant", "intersection_is_radical", "pairwise_in_lines"})
      c.check(key, sub, got.at(key), c.expected(key));
  }
}

// ---- criterion 3 -------------------------------------------------------------

json hankel_chart(std::size_t n, std::size_t chart, std::uint64_t p, const RunConfig& cfg, const GbOptions& opts) {
  auto gens = hankel_chart_ideal(n, chart, cfg.order, CoeffDomain::prime_field(p));
  const RingPtr ring = gens.front().ring();
  auto g = buchberger(gens, opts);
  auto rep = ideal_dimension(g);
  json out{{"dim", rep.dim}};
  out["degree"] = rep.dim == 0 ? json(quotient_degree(g)) : json(nullptr);

  bool local = true;
  for (std::size_t v = 0; v < ring->nvars() && local; ++v) local = radical_membership(ring->variable(v), gens, opts);
  out["single_point"] = local;

  // The basis 1, x_{n-3}, x_{n-2}, x_{n-1} on the chart x_n = 1, mirrored
  // on x_0 = 1.
  auto var = [&](std::size_t i) {
    std::size_t idx = chart == n ? i : n - i;
    return ring->variable(*ring->universe().find("x" + std::to_string(idx)));
  };
  std::vector<MPoly> candidates = {ring->one(), var(n - 3), var(n - 2), var(n - 1)};
  out["basis_independent"] = poly_family_rank(normal_forms(candidates, g)) == 4;

  std::set<std::string> want, have;
  for (const auto& m : candidates) want.insert(m.to_string());
  json sm = json::array();
  for (const auto& m : standard_monomials(g)) {
    sm.push_back(MPoly(ring, {{m, ring->scalar(1)}}).to_string());
    have.insert(sm.back().get<std::string>());
  }
  out["standard_monomials"] = sm;
  out["standard_match"] = want == have;
  return out;
}

void run_hankel(Ctx& c) {
  for (long nl : as_list(c.params().at("n"))) {
    if (nl < 4) throw PreconditionError("the Hankel case needs n >= 4");
    const auto n = static_cast<std::size_t>(nl);
    const std::string sub = label("n", nl);
    long total = 0;
    std::size_t points = 0;
    bool basis = true;
    for (std::size_t chart : {n, std::size_t(0)}) {
      json got = c.per_prime("chart x" + std::to_string(chart) + " " + sub, [&](std::uint64_t p) {
        return hankel_chart(n, chart, p, c.cfg(), c.gb());
      });
      const std::string csub = sub + ",chart=x" + std::to_string(chart);
      c.check("chart_dim", csub, got.at("dim"), c.expected("chart_dim"));
      c.check("chart_degree", csub, got.at("degree"), c.expected("chart_degree"));
      c.measure("standard_monomials", csub, got.at("standard_monomials"));
      // Which monomials are standard depends on the order.
      if (c.cfg().order == MonomialOrder::degrevlex())
        c.check("standard_monomials_match", csub, got.at("standard_match"), true);
      if (got.at("degree").is_number()) total += got.at("degree").get<long>();
      points += got.at("single_point").get<bool>();
      basis = basis && got.at("basis_independent").get<bool>();
    }
    c.check("total_degree", sub, total, c.expected("total_degree"));
    c.check("support_points", sub, points, c.expected("support_points"));
    c.check("basis_1_xn3_xn2_xn1", sub, basis, c.expected("basis_1_xn3_xn2_xn1"));

    // No point with x_0 = x_n = 0: the cone over it is the origin alone.
    json empty = c.per_prime("infinity " + sub, [&](std::uint64_t p) {
      auto gens = permanental_ideal({2, n, 2, MatrixPattern::Hankel}, c.cfg().order, c.field(p));
      const RingPtr ring = gens.front().ring();
      gens.push_back(ring->variable(0));
      gens.push_back(ring->variable(n));
      return dim_of(gens, c.gb()).dim == 0;
    });
    c.check("empty_at_infinity", sub, empty, c.expected("empty_at_infinity"));

    auto chart_gens = hankel_chart_ideal(n, n, MonomialOrder::degrevlex(), CoeffDomain::rationals());
    auto syz = hankel_syzygy(chart_gens.front().ring(), n);
    auto g = buchberger(chart_gens, c.gb());
    bool identity = syz.lhs == syz.rhs() && ideal_contains(g, syz.factors);
    c.check("syzygy_identity", sub, identity, c.expected("syzygy_identity"));
  }
}

// ---- criterion 4 -------------------------------------------------------------

void run_slice(Ctx& c) {
  const auto spec = SliceSpec::parse(c.params().at("slice").get<std::string>());
  const auto k = c.params().at("k").get<std::size_t>();
  json got = c.per_prime("slice", [&](std::uint64_t p) {
    auto gens = permanental_ideal({k, k + 1}, c.cfg().order, c.field(p));
    auto slice = slice_from_matrix(build_slice(spec, c.cfg().order, c.field(p)), gens.front().ring());
    return slice_codim_bound(gens, slice, c.gb()).to_json();
  });
  c.measure("slice_bound", "", got);
  c.check("height", "", got.at("sliced_height"), c.expected("height"));
  c.check("bound", "", got.at("bound"), c.expected("bound"));
  if (c.params().value("plain_codim_check", false)) {
    json plain = c.per_prime("plain codim", [&](std::uint64_t p) {
      return dim_of(permanental_ideal({k, k + 1}, c.cfg().order, c.field(p)), c.gb()).codim;
    });
    c.check("plain_codim", "", plain, c.expected("plain_codim"));
    c.check("bound_le_plain", "", got.at("bound").get<long>() <= plain.get<long>(), true);
  }
}

// ---- criterion 6 -------------------------------------------------------------

void run_kirkup_saturation(Ctx& c) {
  const auto k = c.params().at("k").get<std::size_t>();
  json got = c.per_prime("saturation", [&](std::uint64_t p) {
    auto gens = permanental_ideal({k, k + 1}, c.cfg().order, c.field(p));
    auto sat = saturate(gens, variable_product(gens.front().ring()), c.gb());
    auto g = buchberger(sat, c.gb());
    auto rep = ideal_dimension(g);
    return json{{"codim", rep.codim}, {"degree", rep.degree ? json(*rep.degree) : json(nullptr)},
                {"basis_size", g.size()}};
  });
  c.measure("basis_size", "", got.at("basis_size"));
  c.check("codim", "", got.at("codim"), c.expected("codim"));
  c.check("degree", "", got.at("degree"), c.expected("degree"));
}

void run_kirkup_membership(Ctx& c) {
  const auto k = c.params().at("k").get<std::size_t>();
  auto kg = kirkup_generators(k, MonomialOrder::degrevlex(), CoeffDomain::rationals(), false);
  auto perms = permanents_of(PolyMatrix::generic(kg.ring), k);
  auto g = buchberger(perms, c.gb());
  MPoly x11f1 = kg.ring->grid_variable(0, 0) * kg.f[0];
  c.check("normal_form_zero", "", normal_form(x11f1, g).is_zero(), c.expected("normal_form_zero"));
  c.measure("f1_in_ideal", "", normal_form(kg.f[0], g).is_zero());
  c.measure("f1_degree", "", kg.f[0].total_degree());
}

// ---- criteria 7 and 8 ----------------------------------------------------------

QMatrix kirkup_fixed_part(std::size_t k) {
  auto m = kirkup_matrix(k);
  QMatrix ap(k - 1, k + 1);
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = 0; j <= k; ++j) ap(i, j) = m(i + 1, j);
  return ap;
}

void run_kirkup_vanish(Ctx& c) {
  for (long kl : as_list(c.params().at("k"))) {
    const auto k = static_cast<std::size_t>(kl);
    QMatrix m;
    try {
      m = kirkup_matrix(k);
    } catch (const InternalError& e) {
      c.check("nonzero_permanents", label("k", kl), json(e.what()), c.expected("nonzero_permanents"));
      continue;
    }
    std::size_t nonzero = 0;
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    for (std::size_t j = 0; j <= k; ++j) {
      std::vector<std::size_t> cols;
      for (std::size_t l = 0; l <= k; ++l)
        if (l != j) cols.push_back(l);
      QMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) sub(i, l) = m(i, cols[l]);
      if (perm_numeric(sub, PermEngine::Ryser) != 0 || perm_numeric(sub, PermEngine::Glynn) != 0) ++nonzero;
    }
    c.check("nonzero_permanents", label("k", kl), nonzero, c.expected("nonzero_permanents"));
  }
  c.check("prk_k3", "", prk(kirkup_matrix(3)), c.expected("prk_k3"));
}

bool proportional(const std::vector<mpz_class>& a, const std::vector<long>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

void run_kirkup_type(Ctx& c) {
  for (long kl : as_list(c.params().at("k"))) {
    const auto k = static_cast<std::size_t>(kl);
    auto ap = kirkup_fixed_part(k);
    auto rep = classify_type(ap, DerivMode::B1);
    const std::string sub = label("k", kl);
    c.check("rank", sub, rep.rank, eval_formula(c.expected("rank"), kl));
    c.check("type", sub, rep.type, c.expected("type"));
    bool ext = !rep.kernel_basis.empty();
    for (const auto& v : rep.kernel_basis) {
      std::vector<mpq_class> q(v.begin(), v.end());
      std::vector<std::vector<mpq_class>> qs{q};
      ext = ext && kernel_extension_check(ap, qs, DerivMode::B1);
    }
    c.check("extension", sub, ext, c.expected("extension"));
    if (k == 3) {
      json kb = json::array();
      for (const auto& x : rep.kernel_basis.at(0)) kb.push_back(x.get_str());
      std::vector<long> want;
      for (const auto& s : c.expected("kernel_k3")) want.push_back(std::stol(s.get<std::string>()));
      bool same = rep.kernel_basis.size() == 1 && proportional(rep.kernel_basis[0], want);
      c.measure("kernel_k3", "", kb);
      c.check("kernel_k3_matches", "", same, true);
    }
  }
}

// ---- criteria 9 and 13 ---------------------------------------------------------

bool identities_hold(const std::vector<long>& hs) {
  auto q = q_prime_identity(CoeffDomain::rationals());
  bool ok = matrix_det(q.matrix) == q.expected;
  for (long h : hs) {
    auto s = s_identity(static_cast<std::size_t>(h), CoeffDomain::rationals());
    ok = ok && matrix_det(s.matrix) == s.expected;
  }
  return ok;
}

void run_symbolic(Ctx& c) {
  auto q = q_prime_identity(CoeffDomain::rationals());
  MPoly dq = matrix_det(q.matrix);
  c.measure("det_q_prime", "", dq.to_string());
  c.check("q_prime", "", dq == q.expected, c.expected("identities_hold"));
  for (long h : as_list(c.params().at("h"))) {
    auto s = s_identity(static_cast<std::size_t>(h), CoeffDomain::rationals());
    MPoly ds = matrix_det(s.matrix);
    c.measure("det_s", label("h", h), ds.to_string());
    c.check("s", label("h", h), ds == s.expected, c.expected("identities_hold"));
  }
}

// ---- criterion 10 ----------------------------------------------------------------

std::vector<Scalar> random_point(std::mt19937_64& rng, const RingPtr& ring, std::uint64_t p) {
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  std::vector<Scalar> pt;
  for (std::size_t v = 0; v < ring->nvars(); ++v) pt.push_back(Scalar::from_residue(ring->domain(), d(rng)));
  return pt;
}

void run_jacobian(Ctx& c) {
  constexpr std::size_t kSamples = 20;
  for (long kl : as_list(c.params().at("k"))) {
    const auto k = static_cast<std::size_t>(kl);
    json got = c.per_prime("jacobian " + label("k", kl), [&](std::uint64_t p) {
      auto fs = permanental_ideal({k, k + 1}, c.cfg().order, c.field(p));
      auto rng = c.rng(100 + k);
      std::size_t lo = fs.size();
      for (std::size_t s = 0; s < kSamples; ++s)
        lo = std::min(lo, jacobian_rank_at(fs, random_point(rng, fs.front().ring(), p)));
      return lo;
    });
    c.check("rank", label("k", kl), got, eval_formula(c.expected("rank"), kl));
  }
  const auto samples = c.params().at("samples_2x5").get<std::size_t>();
  json hi = c.per_prime("jacobian 2x5", [&](std::uint64_t p) {
    auto fs = permanental_ideal({2, 5}, c.cfg().order, c.field(p));
    auto rng = c.rng(205);
    std::size_t best = 0;
    for (std::size_t s = 0; s < samples; ++s)
      best = std::max(best, jacobian_rank_at(fs, random_point(rng, fs.front().ring(), p)));
    return best;
  });
  c.check("max_rank_2x5", "", hi, c.expected("max_rank_2x5"));
}

// ---- criterion 11 ----------------------------------------------------------------

void run_circulant(Ctx& c) {
  for (long kl : as_list(c.params().at("k"))) {
    const auto k = static_cast<std::size_t>(kl);
    json got = c.per_prime("circulant " + label("k", kl), [&](std::uint64_t p) {
      GenericMatrixSpec spec{k, k + 1, 2, MatrixPattern::CirculantHankel};
      auto gens = permanental_ideal(spec, c.cfg().order, c.field(p));
      const RingPtr ring = gens.front().ring();
      auto g = buchberger(gens, c.gb());
      std::vector<MPoly> squares;
      for (std::size_t v = 0; v < ring->nvars(); ++v) squares.push_back(ring->variable(v).pow(2));
      return json{{"squares", ideal_contains(g, squares)}, {"codim", ideal_dimension(g).codim}};
    });
    c.check("squares_in_ideal", label("k", kl), got.at("squares"), c.expected("squares_in_ideal"));
    c.check("codim", label("k", kl), got.at("codim"), eval_formula(c.expected("codim"), kl));
  }
}

// ---- criterion 12 ----------------------------------------------------------------

void run_script4(Ctx& c) {
  const auto k = c.params().at("k").get<std::size_t>();
  const long lim = c.params().at("entry_bound").get<long>();
  auto a = seeded_script_matrix(k, c.cfg().seed, lim);
  c.measure("A", "", matrix_to_json(a));
  json got = c.per_prime("script", [&](std::uint64_t p) {
    auto bb = script_bb(k, a, c.cfg().order, c.field(p));
    MPoly d = matrix_det(bb);
    std::vector<MPoly> sing{d};
    for (std::size_t v = 0; v < bb.ring()->nvars(); ++v) sing.push_back(d.diff(v));
    return json{{"det_degree", d.is_zero() ? -1 : static_cast<long>(d.total_degree())},
                {"sing_codim", dim_of(sing, c.gb()).codim},
                {"minors4_codim", dim_of(matrix_minors(k, bb), c.gb()).codim}};
  });
  c.measure("det_degree", "", got.at("det_degree"));
  c.check("sing_codim", "", got.at("sing_codim"), c.expected("sing_codim"));
  c.check("minors4_codim", "", got.at("minors4_codim"), c.expected("minors4_codim"));
}

void run_script5(Ctx& c) {
  const auto k = c.params().at("k").get<std::size_t>();
  auto a = script_matrix_k5();
  json got = c.per_prime("script", [&](std::uint64_t p) {
    auto bb = script_bb(k, a, c.cfg().order, c.field(p));
    std::vector<MPoly> minors;
    std::set<long> degrees;
    for (auto& m : matrix_minors(3, bb))
      if (!m.is_zero()) {
        degrees.insert(m.total_degree());
        minors.push_back(std::move(m));
      }
    auto g = buchberger(minors, c.gb());
    return json{{"nonzero_minors", minors.size()},
                {"minor_degree", degrees.size() == 1 ? json(*degrees.begin()) : json(nullptr)},
                {"codim", ideal_dimension(g).codim},
                {"basis_size", g.size()}};
  });
  c.check("nonzero_minors", "", got.at("nonzero_minors"), c.expected("nonzero_minors"));
  c.check("minor_degree", "", got.at("minor_degree"), c.expected("minor_degree"));
  c.check("minors3_codim", "", got.at("codim"), c.expected("minors3_codim"));
  c.measure("basis_size", "", got.at("basis_size"));
}

// ---- criterion 13 ----------------------------------------------------------------

bool witness_vanishes(std::size_t k) {
  auto ring = PolyRing::create(VarUniverse(k, k), MonomialOrder::degrevlex(), CoeffDomain::rationals());
  auto m = two_zero_rows(ring, k);
  if (!perm_symbolic(m, k).is_zero()) return false;
  for (const auto& f : permanents_of(m, k - 1))
    if (!f.is_zero()) return false;
  return true;
}

// Every (k-1) x (k-1) permanent lies in J_S1 + J_S2 for each row and each
// column partition.
bool containments_hold(std::size_t k, std::uint64_t p, const RunConfig& cfg, const GbOptions& opts) {
  auto ring = PolyRing::create(VarUniverse(k, k), cfg.order, CoeffDomain::prime_field(p));
  auto sing = permanents_of(PolyMatrix::generic(ring), k - 1);
  for (bool columns : {false, true})
    for (const auto& s1 : partitions_of(k)) {
      std::vector<std::size_t> s2;
      for (std::size_t i = 0; i < k; ++i)
        if (std::find(s1.begin(), s1.end(), i) == s1.end()) s2.push_back(i);
      auto sum = concat(block_permanents(ring, k, s1, columns), block_permanents(ring, k, s2, columns));
      if (!ideal_contains(buchberger(sum, opts), sing)) return false;
    }
  return true;
}

void run_sing_locus(Ctx& c) {
  for (long kl : as_list(c.params().at("witness_k"))) {
    if (kl < 3) throw PreconditionError("the witness needs k >= 3");
    c.check("witness_vanishes", label("k", kl), witness_vanishes(static_cast<std::size_t>(kl)),
            c.expected("witness_vanishes"));
  }
  for (long kl : as_list(c.params().at("partition_k"))) {
    if (kl < 2 || kl > 6) throw PreconditionError("partition containments run for 2 <= k <= 6");
    json got = c.per_prime("containments " + label("k", kl), [&](std::uint64_t p) {
      return containments_hold(static_cast<std::size_t>(kl), p, c.cfg(), c.gb());
    });
    c.check("containments_hold", label("k", kl), got, c.expected("containments_hold"));
  }
  c.check("identities_hold", "", identities_hold({1, 2}), c.expected("identities_hold"));
}

void run_sing_radical(Ctx& c) {
  const auto k = c.params().at("k").get<std::size_t>();
  json got = c.per_prime("radical", [&](std::uint64_t p) {
    auto ring = PolyRing::create(VarUniverse(k, k), c.cfg().order, c.field(p));
    auto m = PolyMatrix::generic(ring);
    auto sing = permanents_of(m, k - 1);
    std::vector<std::vector<MPoly>> parts;
    for (bool columns : {false, true})
      for (const auto& s1 : partitions_of(k)) {
        std::vector<std::size_t> s2;
        for (std::size_t i = 0; i < k; ++i)
          if (std::find(s1.begin(), s1.end(), i) == s1.end()) s2.push_back(i);
        parts.push_back(concat(block_permanents(ring, k, s1, columns), block_permanents(ring, k, s2, columns)));
      }
    // rad(A) contains the intersection of the rad(B_i) iff it contains the
    // intersection of the B_i; the other way each B_i contains A.
    std::vector<MPoly> meet = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) meet = ideal_intersection(meet, parts[i], c.gb());
    bool forward = true;
    for (const auto& f : meet)
      if (!radical_membership(f, sing, c.gb())) {
        forward = false;
        break;
      }
    bool backward = true;
    for (const auto& b : parts) backward = backward && ideal_contains(buchberger(b, c.gb()), sing);
    return json{{"forward", forward}, {"backward", backward}, {"partitions", parts.size()}};
  });
  c.measure("partitions", "", got.at("partitions"));
  c.check("forward", "", got.at("forward"), c.expected("forward"));
  c.check("backward", "", got.at("backward"), c.expected("backward"));
}

QMatrix sparse_matrix(std::mt19937_64& rng, std::size_t r, std::size_t cols) {
  std::uniform_int_distribution<int> val(-2, 2);
  std::bernoulli_distribution zero(0.5);
  QMatrix m(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0 : val(rng);
  return m;
}

void run_properties(Ctx& c) {
  const auto& P = c.params();
  const auto perm_samples = P.at("perm_samples").get<std::size_t>();
  const auto max_n = P.at("max_perm_size").get<std::size_t>();
  const std::uint64_t p = c.cfg().prime;

  bool perm_agree = true;
  auto rng = c.rng(13);
  std::uniform_int_distribution<long> small(-9, 9);
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto ring = PolyRing::create(VarUniverse(n, n), MonomialOrder::degrevlex(), CoeffDomain::rationals());
    MPoly sym = perm_symbolic(PolyMatrix::generic(ring), max_n);
    for (std::size_t s = 0; s < perm_samples; ++s) {
      QMatrix a(n, n);
      std::vector<Scalar> pt;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = small(rng);
          pt.push_back(ring->scalar(a(i, j)));
        }
      auto r = perm_numeric(a, PermEngine::Ryser);
      auto fp = reduce_mod(a, p);
      perm_agree = perm_agree && r == perm_numeric(a, PermEngine::Glynn) && sym.evaluate(pt).rational() == r &&
                   perm_numeric(fp, PermEngine::Ryser) == Fp::from_mpq(r, p) &&
                   perm_numeric(fp, PermEngine::Glynn) == Fp::from_mpq(r, p);
    }
  }
  c.check("perm_agree", "", perm_agree, c.expected("perm_agree"));

  const auto rank_samples = P.at("rank_samples").get<std::size_t>();
  const auto max_k = P.at("max_k").get<std::size_t>();
  bool shape_ok = true, rank_one = false, extension_ok = true;
  json histogram = json::object();
  for (auto mode : {DerivMode::B1, DerivMode::L})
    for (std::size_t k = 3; k <= max_k; ++k) {
      const std::size_t rows = mode == DerivMode::B1 ? k - 1 : k - 2;
      const std::size_t cols = rows + 2;
      std::map<std::size_t, std::size_t> ranks;
      for (std::size_t s = 0; s < rank_samples; ++s) {
        auto ap = sparse_matrix(rng, rows, cols);
        auto d = derivative_matrix(ap, mode);
        for (std::size_t i = 0; i < d.rows(); ++i) {
          shape_ok = shape_ok && d(i, i) == 0;
          for (std::size_t j = 0; j < i; ++j) shape_ok = shape_ok && d(i, j) == d(j, i);
        }
        auto rep = classify_type(ap, mode);
        ranks[rep.rank]++;
        if (rep.rank == 1) rank_one = true;
        if (mode == DerivMode::B1 && s % 10 == 0) {
          for (const auto& v : rep.kernel_basis) {
            std::vector<std::vector<mpq_class>> qs{std::vector<mpq_class>(v.begin(), v.end())};
            extension_ok = extension_ok && kernel_extension_check(ap, qs, mode);
          }
          std::vector<mpq_class> q(cols);
          for (auto& x : q) x = small(rng);
          bool in_kernel = true;
          for (const auto& x : mat_vec(d, q)) in_kernel = in_kernel && x == 0;
          std::vector<std::vector<mpq_class>> qs{q};
          extension_ok = extension_ok && kernel_extension_check(ap, qs, mode) == in_kernel;
        }
      }
      json h = json::object();
      for (auto [r, n] : ranks) h[std::to_string(r)] = n;
      histogram[std::string(to_string(mode)) + ",k=" + std::to_string(k)] = h;
    }
  c.measure("rank_histogram", "", histogram);
  c.check("derivative_shape", "", shape_ok, c.expected("derivative_shape"));
  c.check("rank_one_seen", "", rank_one, c.expected("rank_one_seen"));
  c.check("kernel_extension_equivalence", "", extension_ok, true);

  const auto e_samples = P.at("e_pattern_samples").get<std::size_t>();
  std::uniform_int_distribution<long> ab(-50, 50);
  for (long kl : as_list(P.at("e_pattern_k"))) {
    const auto k = static_cast<std::size_t>(kl);
    std::size_t lo = k, hi = 0;
    for (std::size_t s = 0; s < e_samples; ++s) {
      long a = 0, b = 0;
      while (a == 0) a = ab(rng);
      while (b == 0) b = ab(rng);
      std::size_t r = rank(e_pattern_matrix(k, mpq_class(a, 1 + s % 3), mpq_class(b)));
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    long want = eval_formula(c.expected("e_pattern_rank"), kl);
    c.check("e_pattern_rank", label("k", kl), lo == hi ? json(lo) : json({lo, hi}), want);
  }
}

using Runner = void (*)(Ctx&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"codim-2xn", [](Ctx& c) { run_codim_generic(c, "n", false); }},
      {"census-2xn", run_census},
      {"hankel-degree8", run_hankel},
      {"slice-circulant3", run_slice},
      {"slice-circulant4", run_slice},
      {"codim-kxk1", [](Ctx& c) { run_codim_generic(c, "k", true); }},
      {"kirkup-saturation", run_kirkup_saturation},
      {"kirkup-vanish", run_kirkup_vanish},
      {"kirkup-type", run_kirkup_type},
      {"kirkup-membership", run_kirkup_membership},
      {"symbolic-dets", run_symbolic},
      {"jacobian-independence", run_jacobian},
      {"circulant-2x2", run_circulant},
      {"script-4x5", run_script4},
      {"script-5x6", run_script5},
      {"sing-locus", run_sing_locus},
      {"sing-radical-k3", run_sing_radical},
      {"property-suite", run_properties},
  };
  return table;
}

}  // namespace

CaseReport reproduce(const std::string& id, const RunConfig& cfg) {
  const CaseSpec& spec = find_case(id);
  auto it = runners().find(id);
  if (it == runners().end()) throw InternalError("case " + id + " has no runner");
  CaseReport rep;
  rep.id = id;
  rep.criterion = spec.criterion;
  rep.tier = spec.tier;
  rep.config = cfg;
  const auto start = std::chrono::steady_clock::now();
  try {
    Ctx ctx(spec, cfg, rep);
    it->second(ctx);
    rep.status = rep.failures.empty() ? CaseStatus::Pass : CaseStatus::Fail;
  } catch (const TimeoutError& e) {
    rep.error = e.what();
    rep.measured["partial_stats"] = e.stats().to_json();
    rep.status = spec.tier == Tier::Extended ? CaseStatus::Skipped : CaseStatus::Fail;
  } catch (const Error& e) {
    rep.error = std::string(to_string(e.kind())) + ": " + e.what();
    rep.status = CaseStatus::Fail;
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.status = CaseStatus::Fail;
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<CaseReport> reproduce_all(const RunConfig& cfg, const std::function<void(const CaseReport&)>& on_report) {
  std::vector<CaseReport> out;
  for (const auto& spec : case_registry()) {
    CaseReport rep;
    if (spec.tier == Tier::Extended && cfg.tier == Tier::Default) {
      rep.id = spec.id;
      rep.criterion = spec.criterion;
      rep.tier = spec.tier;
      rep.params = spec.params;
      rep.config = cfg;
      rep.status = CaseStatus::Skipped;
      rep.error = "extended tier not requested";
    } else {
      rep = reproduce(spec.id, cfg);
    }
    if (on_report) on_report(rep);
    out.push_back(std::move(rep));
  }
  return out;
}

void append_jsonl(const std::string& path, const std::vector<CaseReport>& reports) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw PreconditionError("cannot open results file " + path);
  for (const auto& r : reports) out << r.to_json().dump() << '\n';
}

CaseReport component_census_2xn(std::size_t n, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.overrides["n"] = n;
  return reproduce("census-2xn", c);
}

CaseReport sing_locus_suite(std::size_t k, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.overrides["witness_k"] = k;
  c.overrides["partition_k"] = k <= 4 ? json::array({k}) : json::array();
  return reproduce("sing-locus", c);
}

}  // namespace permvar
