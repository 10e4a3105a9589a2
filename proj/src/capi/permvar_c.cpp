#include "permvar/permvar.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"
#include "permvar/errors.hpp"
#include "permvar/experiments/cases.hpp"
#include "permvar/experiments/slices.hpp"
#include "permvar/groebner/dimension.hpp"
#include "permvar/groebner/ideal_ops.hpp"
#include "permvar/permanent/ideals.hpp"
#include "permvar/permanent/kirkup.hpp"
#include "permvar/permanent/permanent.hpp"
#include "permvar/ring/poly_io.hpp"
#include "permvar/torus/torus.hpp"
#include "permvar/version.hpp"

using nlohmann::json;
namespace pv = permvar;

struct pv_config {
  pv::RunConfig cfg;
};

struct pv_ideal {
  pv::RingPtr ring;
  std::vector<pv::MPoly> gens;
};

struct pv_gb {
  pv::GroebnerBasis gb;
};

namespace {

thread_local std::string last_error;

pv_status from_kind(pv::ErrorKind k) {
  switch (k) {
    case pv::ErrorKind::Structural: return PV_ERR_STRUCTURAL;
    case pv::ErrorKind::Capacity: return PV_ERR_CAPACITY;
    case pv::ErrorKind::Timeout: return PV_ERR_TIMEOUT;
    case pv::ErrorKind::Precondition: return PV_ERR_PRECONDITION;
    case pv::ErrorKind::Parse: return PV_ERR_PARSE;
    case pv::ErrorKind::Internal: return PV_ERR_INTERNAL;
    case pv::ErrorKind::NotFound: return PV_ERR_NOT_FOUND;
  }
  return PV_ERR_INTERNAL;
}

pv_status fail(pv_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
pv_status guard(F&& f) {
  try {
    f();
    return PV_OK;
  } catch (const pv::Error& e) {
    return fail(from_kind(e.kind()), e.what());
  } catch (const json::parse_error& e) {
    return fail(PV_ERR_PARSE, e.what());
  } catch (const json::exception& e) {
    return fail(PV_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PV_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(PV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PV_ERR_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* what) {
  if (!p) throw pv::PreconditionError(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pv::QMatrix parse_matrix(const char* text) {
  need(text, "matrix");
  return pv::matrix_from_json(json::parse(text));
}

pv::MonomialOrder order_or_default(const char* s) {
  return s ? pv::MonomialOrder::parse(s) : pv::MonomialOrder::degrevlex();
}

pv::CoeffDomain domain_or_default(const char* s) { return s ? pv::CoeffDomain::parse(s) : pv::CoeffDomain::rationals(); }

const pv::RunConfig& config_or_default(const pv_config* cfg) {
  static const pv::RunConfig defaults;
  return cfg ? cfg->cfg : defaults;
}

pv::GbOptions gb_options(double timeout_s) {
  pv::GbOptions o;
  if (timeout_s > 0) o.timeout_s = timeout_s;
  return o;
}

std::vector<pv::MPoly> nonzero(std::vector<pv::MPoly> gens) {
  std::erase_if(gens, [](const pv::MPoly& p) { return p.is_zero(); });
  return gens;
}

}  // namespace

extern "C" {

const char* pv_version(void) { return pv::kVersion; }

const char* pv_status_name(pv_status s) {
  switch (s) {
    case PV_OK: return "ok";
    case PV_ERR_STRUCTURAL: return "structural";
    case PV_ERR_CAPACITY: return "capacity";
    case PV_ERR_TIMEOUT: return "timeout";
    case PV_ERR_PRECONDITION: return "precondition";
    case PV_ERR_PARSE: return "parse";
    case PV_ERR_INTERNAL: return "internal";
    case PV_ERR_NOT_FOUND: return "not_found";
    case PV_ERR_INVALID_ARGUMENT: return "invalid_argument";
  }
  return "unknown";
}

const char* pv_last_error(void) { return last_error.c_str(); }

void pv_string_free(char* s) { std::free(s); }

pv_status pv_config_new(pv_config** out) {
  return guard([&] {
    need(out, "out");
    *out = new pv_config();
  });
}

void pv_config_free(pv_config* cfg) { delete cfg; }

pv_status pv_config_set_primes(pv_config* cfg, uint64_t prime, uint64_t prime2) {
  return guard([&] {
    need(cfg, "config");
    pv::CoeffDomain::prime_field(prime);
    pv::CoeffDomain::prime_field(prime2);
    cfg->cfg.prime = prime;
    cfg->cfg.prime2 = prime2;
  });
}

pv_status pv_config_set_order(pv_config* cfg, const char* order) {
  return guard([&] {
    need(cfg, "config");
    need(order, "order");
    cfg->cfg.order = pv::MonomialOrder::parse(order);
  });
}

pv_status pv_config_set_seed(pv_config* cfg, uint64_t seed) {
  return guard([&] {
    need(cfg, "config");
    cfg->cfg.seed = seed;
  });
}

pv_status pv_config_set_timeout(pv_config* cfg, double seconds) {
  return guard([&] {
    need(cfg, "config");
    if (!(seconds > 0)) throw pv::PreconditionError("timeout must be positive");
    cfg->cfg.timeout_s = seconds;
  });
}

pv_status pv_config_set_tier(pv_config* cfg, const char* tier) {
  return guard([&] {
    need(cfg, "config");
    need(tier, "tier");
    cfg->cfg.tier = pv::parse_tier(tier);
  });
}

pv_status pv_config_set_overrides(pv_config* cfg, const char* text) {
  return guard([&] {
    need(cfg, "config");
    need(text, "overrides");
    json j = json::parse(text);
    if (!j.is_object()) throw pv::ParseError("overrides must be a JSON object");
    cfg->cfg.overrides = j;
  });
}

pv_status pv_config_merge_json(pv_config* cfg, const char* text) {
  return guard([&] {
    need(cfg, "config");
    need(text, "json");
    json j = json::parse(text);
    if (!j.is_object()) throw pv::ParseError("config must be a JSON object");
    pv::RunConfig c = cfg->cfg;
    for (const auto& [key, value] : j.items()) {
      if (key == "prime") c.prime = value.get<std::uint64_t>();
      else if (key == "prime2") c.prime2 = value.get<std::uint64_t>();
      else if (key == "order") c.order = pv::MonomialOrder::parse(value.get<std::string>());
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "timeout") c.timeout_s = value.get<double>();
      else if (key == "tier") c.tier = pv::parse_tier(value.get<std::string>());
      else throw pv::ParseError("unknown config key '" + key + "'");
    }
    pv::CoeffDomain::prime_field(c.prime);
    pv::CoeffDomain::prime_field(c.prime2);
    cfg->cfg = c;
  });
}

pv_status pv_config_to_json(const pv_config* cfg, char** out) {
  return guard([&] {
    need(cfg, "config");
    need(out, "out");
    *out = dup(cfg->cfg.to_json().dump());
  });
}

pv_status pv_permanent(const char* matrix_json, uint64_t p, char** out) {
  return guard([&] {
    need(out, "out");
    auto m = parse_matrix(matrix_json);
    if (p == 0) {
      *out = dup(pv::perm_numeric(m).get_str());
    } else {
      pv::CoeffDomain::prime_field(p);
      *out = dup(std::to_string(pv::perm_numeric(pv::reduce_mod(m, p)).value()));
    }
  });
}

pv_status pv_prk(const char* matrix_json, size_t* out) {
  return guard([&] {
    need(out, "out");
    *out = pv::prk(parse_matrix(matrix_json));
  });
}

pv_status pv_kirkup_matrix(size_t k, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(pv::matrix_to_json(pv::kirkup_matrix(k)).dump());
  });
}

pv_status pv_derivative_matrix(const char* matrix_json, const char* mode, char** out) {
  return guard([&] {
    need(out, "out");
    need(mode, "mode");
    auto d = pv::derivative_matrix(parse_matrix(matrix_json), pv::parse_deriv_mode(mode));
    *out = dup(pv::matrix_to_json(d).dump());
  });
}

pv_status pv_classify_type(const char* matrix_json, const char* mode, char** out) {
  return guard([&] {
    need(out, "out");
    need(mode, "mode");
    *out = dup(pv::classify_type(parse_matrix(matrix_json), pv::parse_deriv_mode(mode)).to_json().dump());
  });
}

pv_status pv_kernel_extension(const char* matrix_json, const char* mode, const char* qs_json, int* out) {
  return guard([&] {
    need(out, "out");
    need(mode, "mode");
    need(qs_json, "vectors");
    auto qm = pv::matrix_from_json(json::parse(qs_json));
    std::vector<std::vector<mpq_class>> qs(qm.rows());
    for (std::size_t i = 0; i < qm.rows(); ++i)
      for (std::size_t j = 0; j < qm.cols(); ++j) qs[i].push_back(qm(i, j));
    *out = pv::kernel_extension_check(parse_matrix(matrix_json), qs, pv::parse_deriv_mode(mode)) ? 1 : 0;
  });
}

pv_status pv_ideal_parse(const char* text, const char* order, const char* domain, pv_ideal** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    auto ring = pv::infer_ring(text, order_or_default(order), domain_or_default(domain));
    auto gens = pv::parse_poly_list(ring, text);
    *out = new pv_ideal{ring, std::move(gens)};
  });
}

pv_status pv_ideal_permanental(size_t k, size_t n, size_t h, const char* pattern, size_t period, const char* order,
                               const char* domain, pv_ideal** out) {
  return guard([&] {
    need(out, "out");
    pv::GenericMatrixSpec spec{k, n, h, pattern ? pv::parse_pattern(pattern) : pv::MatrixPattern::Generic, period};
    auto m = pv::pattern_matrix(spec, order_or_default(order), domain_or_default(domain));
    auto gens = pv::permanents_of(m, spec.perm_size());
    *out = new pv_ideal{m.ring(), std::move(gens)};
  });
}

void pv_ideal_free(pv_ideal* ideal) { delete ideal; }

size_t pv_ideal_size(const pv_ideal* ideal) { return ideal ? ideal->gens.size() : 0; }

pv_status pv_ideal_to_text(const pv_ideal* ideal, char** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    *out = dup(pv::to_text(ideal->gens));
  });
}

pv_status pv_ideal_to_json(const pv_ideal* ideal, char** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    json gens = json::array();
    for (const auto& g : ideal->gens) gens.push_back(g.to_string());
    *out = dup(json{{"ring", pv::ring_to_json(*ideal->ring)}, {"gens", gens}}.dump());
  });
}

pv_status pv_ideal_saturate(const pv_ideal* ideal, const char* f, double timeout_s, pv_ideal** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(f, "f");
    need(out, "out");
    // "prod" stands for the product of all variables.
    pv::MPoly fp = ideal->ring->one();
    if (std::string(f) == "prod") {
      for (std::size_t v = 0; v < ideal->ring->nvars(); ++v) fp *= ideal->ring->variable(v);
    } else {
      fp = pv::parse_poly(ideal->ring, f);
    }
    auto sat = pv::saturate(nonzero(ideal->gens), fp, gb_options(timeout_s));
    *out = new pv_ideal{ideal->ring, std::move(sat)};
  });
}

pv_status pv_groebner(const pv_ideal* ideal, double timeout_s, pv_gb** out) {
  return guard([&] {
    need(ideal, "ideal");
    need(out, "out");
    auto gens = nonzero(ideal->gens);
    if (gens.empty()) {
      *out = new pv_gb{pv::GroebnerBasis(ideal->ring, {}, {})};
      return;
    }
    *out = new pv_gb{pv::buchberger(gens, gb_options(timeout_s))};
  });
}

void pv_gb_free(pv_gb* gb) { delete gb; }

size_t pv_gb_size(const pv_gb* gb) { return gb ? gb->gb.size() : 0; }

pv_status pv_gb_to_text(const pv_gb* gb, char** out) {
  return guard([&] {
    need(gb, "basis");
    need(out, "out");
    *out = dup(pv::to_text(gb->gb.gens()));
  });
}

pv_status pv_gb_stats(const pv_gb* gb, char** out) {
  return guard([&] {
    need(gb, "basis");
    need(out, "out");
    *out = dup(gb->gb.stats().to_json().dump());
  });
}

pv_status pv_gb_dimension(const pv_gb* gb, char** out) {
  return guard([&] {
    need(gb, "basis");
    need(out, "out");
    *out = dup(pv::ideal_dimension(gb->gb).to_json().dump());
  });
}

pv_status pv_gb_normal_form(const pv_gb* gb, const char* poly, char** out) {
  return guard([&] {
    need(gb, "basis");
    need(poly, "poly");
    need(out, "out");
    *out = dup(pv::normal_form(pv::parse_poly(gb->gb.ring(), poly), gb->gb).to_string());
  });
}

pv_status pv_slice_bound(const char* slice, size_t h, const pv_config* cfg, char** out) {
  return guard([&] {
    need(slice, "slice");
    need(out, "out");
    const auto& c = config_or_default(cfg);
    auto spec = pv::SliceSpec::parse(slice);
    auto domain = pv::CoeffDomain::prime_field(c.prime);
    auto m = pv::build_slice(spec, c.order, domain);
    const std::size_t size = h ? h : m.rows();
    auto gens = pv::permanental_ideal({m.rows(), m.cols(), size}, c.order, domain);
    auto slice_map = pv::slice_from_matrix(m, gens.front().ring());
    pv::GbOptions o;
    o.timeout_s = c.timeout_s;
    json j = pv::slice_codim_bound(gens, slice_map, o).to_json();
    j["slice"] = spec.name();
    j["perm_size"] = size;
    j["prime"] = c.prime;
    *out = dup(j.dump());
  });
}

pv_status pv_census(size_t n, const pv_config* cfg, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(pv::component_census_2xn(n, config_or_default(cfg)).to_json().dump());
  });
}

pv_status pv_case_list(char** out) {
  return guard([&] {
    need(out, "out");
    json arr = json::array();
    for (const auto& c : pv::case_registry())
      arr.push_back({{"id", c.id}, {"criterion", c.criterion}, {"tier", pv::to_string(c.tier)}, {"claim", c.claim}});
    *out = dup(arr.dump());
  });
}

pv_status pv_reproduce(const char* case_id, const pv_config* cfg, char** out) {
  return guard([&] {
    need(case_id, "case id");
    need(out, "out");
    *out = dup(pv::reproduce(case_id, config_or_default(cfg)).to_json().dump());
  });
}

pv_status pv_reproduce_all(const pv_config* cfg, pv_report_fn fn, void* user, int* passed) {
  return guard([&] {
    need(passed, "passed");
    bool ok = true;
    pv::reproduce_all(config_or_default(cfg), [&](const pv::CaseReport& r) {
      if (r.status == pv::CaseStatus::Fail) ok = false;
      if (fn) fn(r.to_json().dump().c_str(), user);
    });
    *passed = ok ? 1 : 0;
  });
}

}  // extern "C"
