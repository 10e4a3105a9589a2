#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "permvar/ring/monomial.hpp"

namespace permvar {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;
inline constexpr std::uint64_t kDefaultPrime2 = 1073741789ULL;
inline constexpr std::uint64_t kDefaultSeed = 20240101ULL;
inline constexpr int kReportSchemaVersion = 1;

enum class Tier { Default, Extended };

const char* to_string(Tier t) noexcept;
Tier parse_tier(const std::string& s);

struct CaseSpec {
  std::string id;
  int criterion = 0;
  Tier tier = Tier::Default;
  std::string claim;
  nlohmann::json params;
  nlohmann::json expected;
};

/// The checked-in registry, compiled into the library.
const std::vector<CaseSpec>& case_registry();
const CaseSpec& find_case(const std::string& id);
std::vector<std::string> case_ids();

struct RunConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t prime2 = kDefaultPrime2;
  MonomialOrder order = MonomialOrder::degrevlex();
  std::uint64_t seed = kDefaultSeed;
  double timeout_s = 600;
  Tier tier = Tier::Default;
  /// Replaces registry parameters of the same name, e.g. {"n": 5}.
  nlohmann::json overrides = nlohmann::json::object();

  nlohmann::json to_json() const;
};

enum class CaseStatus { Pass, Fail, Skipped };
const char* to_string(CaseStatus s) noexcept;

struct CaseReport {
  std::string id;
  CaseStatus status = CaseStatus::Fail;
  int criterion = 0;
  Tier tier = Tier::Default;
  nlohmann::json params;
  nlohmann::json measured = nlohmann::json::object();
  nlohmann::json expected = nlohmann::json::object();
  std::vector<std::string> failures;
  bool prime_agreement = true;
  std::optional<std::string> error;
  double wall_ms = 0;
  RunConfig config;

  bool passed() const noexcept { return status == CaseStatus::Pass; }
  /// With include_timing false the result depends only on the inputs.
  nlohmann::json to_json(bool include_timing = true) const;
};

nlohmann::json environment_fingerprint();

/// Runs one case regardless of its tier.
CaseReport reproduce(const std::string& id, const RunConfig& cfg = {});

/// Runs every case in registry order; cases above cfg.tier are reported as
/// skipped. `on_report` sees each report as soon as it is ready.
std::vector<CaseReport> reproduce_all(const RunConfig& cfg = {},
                                      const std::function<void(const CaseReport&)>& on_report = {});

/// Appends one JSON line per report.
void append_jsonl(const std::string& path, const std::vector<CaseReport>& reports);

/// The census of P(2, n) as a standalone report (n = 3 or 4).
CaseReport component_census_2xn(std::size_t n, const RunConfig& cfg = {});

/// Witness space, partition containments and symbolic identities at size k.
CaseReport sing_locus_suite(std::size_t k, const RunConfig& cfg = {});

}  // namespace permvar
