#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permvar/permvar.h"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kJsonSchema = 1;

/// Thrown for library errors; carries the exit code.
struct CliError {
  int code;
  std::string message;
};

void check(pv_status st) {
  if (st == PV_OK) return;
  const bool bad_input = st == PV_ERR_PARSE || st == PV_ERR_PRECONDITION || st == PV_ERR_STRUCTURAL ||
                         st == PV_ERR_NOT_FOUND || st == PV_ERR_INVALID_ARGUMENT;
  throw CliError{bad_input ? kExitUsage : kExitFail, std::string(pv_status_name(st)) + ": " + pv_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pv_string_free(s);
  return out;
}

using ConfigPtr = std::unique_ptr<pv_config, decltype(&pv_config_free)>;
using IdealPtr = std::unique_ptr<pv_ideal, decltype(&pv_ideal_free)>;
using GbPtr = std::unique_ptr<pv_gb, decltype(&pv_gb_free)>;

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw CliError{kExitUsage, "cannot read " + path};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

/// Inline text, or the contents of a file when prefixed with '@'.
std::string inline_or_file(const std::string& s) { return !s.empty() && s[0] == '@' ? read_file(s.substr(1)) : s; }

struct Global {
  std::uint64_t prime = 2147483647ULL;
  std::uint64_t prime2 = 1073741789ULL;
  std::string order = "degrevlex";
  std::uint64_t seed = 20240101ULL;
  double timeout = 600;
  std::string tier = "default";
  bool json_out = false;
  std::string config_file;
};

ConfigPtr make_config(const Global& g, const CLI::App& app) {
  pv_config* raw = nullptr;
  check(pv_config_new(&raw));
  ConfigPtr cfg(raw, pv_config_free);
  std::string path = g.config_file;
  if (path.empty())
    if (const char* env = std::getenv("PERMVAR_CONFIG")) path = env;
  if (!path.empty()) check(pv_config_merge_json(cfg.get(), read_file(path).c_str()));
  // Explicit flags win over the config file.
  json flags = json::object();
  if (app.count("--prime")) flags["prime"] = g.prime;
  if (app.count("--prime2")) flags["prime2"] = g.prime2;
  if (app.count("--order")) flags["order"] = g.order;
  if (app.count("--seed")) flags["seed"] = g.seed;
  if (app.count("--timeout")) flags["timeout"] = g.timeout;
  if (app.count("--tier")) flags["tier"] = g.tier;
  check(pv_config_merge_json(cfg.get(), flags.dump().c_str()));
  return cfg;
}

json config_json(const pv_config* cfg) {
  char* s = nullptr;
  check(pv_config_to_json(cfg, &s));
  return json::parse(take(s));
}

void emit(const Global& g, const pv_config* cfg, const std::string& command, json result, const std::string& text) {
  if (g.json_out) {
    json out{{"schema", kJsonSchema}, {"command", command}, {"config", config_json(cfg)}, {"result", std::move(result)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
}

std::string matrix_text(const json& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string cell = row[j].is_string() ? row[j].get<std::string>() : row[j].dump();
      os << (j ? " " : "") << std::string(cell.size() < 4 ? 4 - cell.size() : 0, ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string case_list_text() {
  char* s = nullptr;
  if (pv_case_list(&s) != PV_OK) return "";
  std::ostringstream os;
  for (const auto& c : json::parse(take(s))) {
    os << "  " << c.at("id").get<std::string>();
    if (c.at("tier") == "extended") os << " (extended)";
    os << '\n';
  }
  return os.str();
}

std::string domain_for(const std::string& domain, const pv_config* cfg) {
  if (!domain.empty()) return domain;
  return "GF(" + std::to_string(config_json(cfg).at("prime").get<std::uint64_t>()) + ")";
}

IdealPtr load_ideal(const std::string& text_arg, const std::string& file, const std::string& domain,
                    const pv_config* cfg) {
  std::string text = !file.empty() ? read_file(file) : text_arg;
  // Generators may also be separated by ';' or ','.
  for (char& ch : text)
    if (ch == ';' || ch == ',') ch = '\n';
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw CliError{kExitUsage, "no generators given"};
  pv_ideal* raw = nullptr;
  const std::string order = config_json(cfg).at("order").get<std::string>();
  check(pv_ideal_parse(text.c_str(), order.c_str(), domain_for(domain, cfg).c_str(), &raw));
  return IdealPtr(raw, pv_ideal_free);
}

double timeout_of(const pv_config* cfg) { return config_json(cfg).at("timeout_s").get<double>(); }

GbPtr groebner_of(const pv_ideal* ideal, const pv_config* cfg) {
  pv_gb* raw = nullptr;
  check(pv_groebner(ideal, timeout_of(cfg), &raw));
  return GbPtr(raw, pv_gb_free);
}

std::string report_line(const json& r) {
  std::ostringstream os;
  os << r.at("id").get<std::string>() << ": " << r.at("status").get<std::string>();
  if (r.contains("wall_ms")) os << " (" << static_cast<long>(r.at("wall_ms").get<double>()) << " ms)";
  os << '\n';
  for (const auto& f : r.at("failures")) os << "  " << f.get<std::string>() << '\n';
  if (!r.at("error").is_null()) os << "  error: " << r.at("error").get<std::string>() << '\n';
  return os.str();
}

void append_line(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw CliError{kExitUsage, "cannot open results file " + path};
  out << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permanental varieties: permanents, ideals, Groebner bases and reproduction cases."};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer("Reproduction cases:\n" + case_list_text() +
             "\nExit status: 0 on success, 1 when a check or case fails, 2 on usage errors.\n"
             "PERMVAR_CONFIG names a JSON file with default prime, prime2, order, seed, timeout, tier.");

  Global g;
  app.add_option("--prime", g.prime, "Primary prime for modular computations");
  app.add_option("--prime2", g.prime2, "Second prime for cross-checks");
  app.add_option("--order", g.order, "Monomial order: degrevlex, lex or block(c)");
  app.add_option("--seed", g.seed, "Seed for sampled quantities");
  app.add_option("--timeout", g.timeout, "Groebner basis timeout in seconds");
  app.add_option("--tier", g.tier, "Case tier for 'reproduce all'")->check(CLI::IsMember({"default", "extended"}));
  app.add_flag("--json", g.json_out, "Emit JSON");
  app.add_option("--config", g.config_file, "JSON config file (overrides PERMVAR_CONFIG)");

  int status = 0;
  std::function<void(pv_config*)> action;

  // perm / prk
  std::string matrix;
  std::uint64_t modulus = 0;
  auto* perm = app.add_subcommand("perm", "Permanent of a square matrix");
  perm->add_option("--matrix", matrix, "JSON rows, or @file")->required();
  perm->add_option("--mod", modulus, "Reduce modulo this prime");
  perm->callback([&] {
    action = [&](pv_config* cfg) {
      char* s = nullptr;
      check(pv_permanent(inline_or_file(matrix).c_str(), modulus, &s));
      std::string v = take(s);
      emit(g, cfg, "perm", json{{"permanent", v}}, v);
    };
  });

  auto* prk_cmd = app.add_subcommand("prk", "Permanental rank");
  prk_cmd->add_option("--matrix", matrix, "JSON rows, or @file")->required();
  prk_cmd->callback([&] {
    action = [&](pv_config* cfg) {
      std::size_t r = 0;
      check(pv_prk(inline_or_file(matrix).c_str(), &r));
      emit(g, cfg, "prk", json{{"prk", r}}, std::to_string(r));
    };
  });

  // ideal gen
  std::size_t k = 2, n = 0, h = 0, period = 0;
  std::string pattern = "generic", domain;
  auto* ideal = app.add_subcommand("ideal", "Build ideals");
  ideal->require_subcommand(1);
  auto* gen = ideal->add_subcommand("gen", "h x h permanents of a k x n pattern matrix");
  gen->add_option("--k", k, "Rows")->required();
  gen->add_option("--n", n, "Columns")->required();
  gen->add_option("--size", h, "Permanent size (default k)");
  gen->add_option("--pattern", pattern, "generic, hankel or circulant")
      ->check(CLI::IsMember({"generic", "hankel", "circulant"}));
  gen->add_option("--period", period, "Variables of a circulant pattern (default n)");
  gen->add_option("--domain", domain, "QQ, ZZ or GF(p) (default QQ)");
  gen->callback([&] {
    action = [&](pv_config* cfg) {
      pv_ideal* raw = nullptr;
      const std::string order = config_json(cfg).at("order").get<std::string>();
      check(pv_ideal_permanental(k, n, h, pattern.c_str(), period, order.c_str(),
                                 domain.empty() ? "QQ" : domain.c_str(), &raw));
      IdealPtr p(raw, pv_ideal_free);
      char* s = nullptr;
      check(pv_ideal_to_json(p.get(), &s));
      json j = json::parse(take(s));
      check(pv_ideal_to_text(p.get(), &s));
      emit(g, cfg, "ideal gen", j, take(s));
    };
  });

  // gb / dim / degree / saturate share the ideal input options.
  std::string ideal_text, ideal_file, saturate_by = "prod";
  auto add_ideal_input = [&](CLI::App* sub) {
    sub->add_option("--ideal", ideal_text, "Generators separated by newlines, ';' or ','");
    sub->add_option("--file", ideal_file, "File with one generator per line ('-' for stdin)");
    sub->add_option("--domain", domain, "QQ or GF(p) (default GF(prime))");
  };
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  add_ideal_input(gb);
  gb->callback([&] {
    action = [&](pv_config* cfg) {
      auto basis = groebner_of(load_ideal(ideal_text, ideal_file, domain, cfg).get(), cfg);
      char* s = nullptr;
      check(pv_gb_to_text(basis.get(), &s));
      std::string text = take(s);
      check(pv_gb_stats(basis.get(), &s));
      json stats = json::parse(take(s));
      json gens = json::array();
      std::istringstream is(text);
      for (std::string line; std::getline(is, line);)
        if (!line.empty()) gens.push_back(line);
      emit(g, cfg, "gb", json{{"basis", gens}, {"stats", stats}}, text);
    };
  });

  auto* dim = app.add_subcommand("dim", "Dimension and codimension");
  add_ideal_input(dim);
  auto* degree = app.add_subcommand("degree", "Degree of the quotient");
  add_ideal_input(degree);
  auto dimension_action = [&](bool degree_only) {
    return [&, degree_only](pv_config* cfg) {
      auto basis = groebner_of(load_ideal(ideal_text, ideal_file, domain, cfg).get(), cfg);
      char* s = nullptr;
      check(pv_gb_dimension(basis.get(), &s));
      json d = json::parse(take(s));
      if (degree_only) {
        if (d.at("degree").is_null()) throw CliError{kExitFail, "degree needs a homogeneous or zero-dimensional ideal"};
        emit(g, cfg, "degree", json{{"degree", d.at("degree")}}, d.at("degree").dump());
      } else {
        emit(g, cfg, "dim", d,
             "dim " + d.at("dim").dump() + "\ncodim " + d.at("codim").dump() + "\ndegree " + d.at("degree").dump());
      }
    };
  };
  dim->callback([&] { action = dimension_action(false); });
  degree->callback([&] { action = dimension_action(true); });

  auto* saturate = app.add_subcommand("saturate", "Saturation I : f^inf");
  add_ideal_input(saturate);
  saturate->add_option("--by", saturate_by, "Polynomial f, or 'prod' for the product of all variables");
  saturate->callback([&] {
    action = [&](pv_config* cfg) {
      auto in = load_ideal(ideal_text, ideal_file, domain, cfg);
      pv_ideal* raw = nullptr;
      check(pv_ideal_saturate(in.get(), saturate_by.c_str(), timeout_of(cfg), &raw));
      IdealPtr out(raw, pv_ideal_free);
      auto basis = groebner_of(out.get(), cfg);
      char* s = nullptr;
      check(pv_gb_to_text(basis.get(), &s));
      std::string text = take(s);
      check(pv_gb_dimension(basis.get(), &s));
      json d = json::parse(take(s));
      emit(g, cfg, "saturate", json{{"basis", text}, {"dimension", d}}, text);
    };
  });

  // kirkup
  bool verify = false;
  auto* kirkup = app.add_subcommand("kirkup", "The Kirkup k x (k+1) matrix");
  kirkup->add_option("--k", k, "Size k >= 3")->required();
  kirkup->add_flag("--verify", verify, "Check that every k x k permanent vanishes");
  kirkup->callback([&] {
    action = [&](pv_config* cfg) {
      char* s = nullptr;
      check(pv_kirkup_matrix(k, &s));
      json m = json::parse(take(s));
      json result{{"matrix", m}};
      std::string text = matrix_text(m);
      if (verify) {
        bool all_zero = true;
        for (std::size_t omit = 0; omit <= k; ++omit) {
          json sub = json::array();
          for (const auto& row : m) {
            json r = json::array();
            for (std::size_t j = 0; j <= k; ++j)
              if (j != omit) r.push_back(row[j]);
            sub.push_back(r);
          }
          check(pv_permanent(sub.dump().c_str(), 0, &s));
          all_zero = all_zero && take(s) == "0";
        }
        result["all_permanents_vanish"] = all_zero;
        text += "all " + std::to_string(k) + "×" + std::to_string(k) +
                " permanents vanish: " + (all_zero ? "true" : "false") + "\n";
        if (!all_zero) status = kExitFail;
      }
      emit(g, cfg, "kirkup", result, text);
    };
  });

  // b1 / lp / type
  std::string mode = "B1", vectors;
  auto derivative = [&](const char* name, const char* fixed_mode) {
    auto* sub = app.add_subcommand(name, std::string("Derivative matrix in mode ") + fixed_mode);
    sub->add_option("--matrix", matrix, "A_p as JSON rows, or @file")->required();
    sub->callback([&, name, fixed_mode] {
      action = [&, name, fixed_mode](pv_config* cfg) {
        char* s = nullptr;
        check(pv_derivative_matrix(inline_or_file(matrix).c_str(), fixed_mode, &s));
        json m = json::parse(take(s));
        emit(g, cfg, name, json{{"matrix", m}}, matrix_text(m));
      };
    });
  };
  derivative("b1", "B1");
  derivative("lp", "L");

  auto* type = app.add_subcommand("type", "Rank, corank and type of B1 or L_p at a fixed point");
  type->add_option("--matrix", matrix, "A_p as JSON rows, or @file")->required();
  type->add_option("--mode", mode, "B1 or L")->check(CLI::IsMember({"B1", "L"}));
  type->add_option("--extend", vectors, "Also run the kernel extension check on these vectors (JSON rows)");
  type->callback([&] {
    action = [&](pv_config* cfg) {
      char* s = nullptr;
      const std::string m = inline_or_file(matrix);
      check(pv_classify_type(m.c_str(), mode.c_str(), &s));
      json r = json::parse(take(s));
      std::string text = "rank " + r.at("rank").dump() + "\ncorank " + r.at("corank").dump() + "\ntype " +
                         r.at("type").dump() + "\nkernel " + r.at("kernel_basis").dump() + "\n";
      if (!vectors.empty()) {
        int ok = 0;
        check(pv_kernel_extension(m.c_str(), mode.c_str(), inline_or_file(vectors).c_str(), &ok));
        r["extension"] = ok == 1;
        text += std::string("extension ") + (ok ? "true" : "false") + "\n";
      }
      emit(g, cfg, "type", r, text);
    };
  });

  // slice / census
  std::string slice_kind;
  auto* slice = app.add_subcommand("slice", "Codimension bound from a linear slice");
  slice->add_option("--kind", slice_kind, "circulant3, circulant4, hankel2xn:N or circulant2xn:K")->required();
  slice->add_option("--size", h, "Permanent size (default: rows of the slice)");
  slice->callback([&] {
    action = [&](pv_config* cfg) {
      char* s = nullptr;
      check(pv_slice_bound(slice_kind.c_str(), h, cfg, &s));
      json b = json::parse(take(s));
      emit(g, cfg, "slice", b,
           "sliced height " + b.at("sliced_height").dump() + "\ncodim bound " + b.at("bound").dump());
    };
  });

  auto* census = app.add_subcommand("census", "Component census of P(2,n) for n = 3 or 4");
  census->add_option("--n", n, "Columns")->required();
  census->callback([&] {
    action = [&](pv_config* cfg) {
      char* s = nullptr;
      check(pv_census(n, cfg, &s));
      json r = json::parse(take(s));
      if (r.at("status") != "pass") status = kExitFail;
      emit(g, cfg, "census", r, report_line(r) + r.at("measured").dump(2));
    };
  });

  // reproduce
  std::string case_id, results, overrides;
  long n_override = -1, k_override = -1;
  auto* reproduce = app.add_subcommand("reproduce", "Run a reproduction case, or 'all'");
  reproduce->add_option("case", case_id, "Case id or 'all'")->required();
  reproduce->add_option("--n", n_override, "Override the case's n parameter");
  reproduce->add_option("--k", k_override, "Override the case's k parameter");
  reproduce->add_option("--set", overrides, "Parameter overrides as a JSON object");
  reproduce->add_option("--results", results, "Append JSON lines to this file");
  reproduce->footer("Cases:\n" + case_list_text());
  reproduce->callback([&] {
    action = [&](pv_config* cfg) {
      json ov = overrides.empty() ? json::object() : json::parse(overrides);
      if (!ov.is_object()) throw CliError{kExitUsage, "--set needs a JSON object"};
      if (n_override >= 0) ov["n"] = n_override;
      if (k_override >= 0) ov["k"] = k_override;
      check(pv_config_set_overrides(cfg, ov.dump().c_str()));
      auto show = [&](const json& r) {
        append_line(results, r);
        if (g.json_out)
          std::cout << r.dump(2) << '\n';
        else
          std::cout << report_line(r);
        std::cout.flush();
        if (r.at("status") == "fail") status = kExitFail;
      };
      if (case_id == "all") {
        int passed = 0;
        auto cb = [](const char* text, void* user) { (*static_cast<decltype(show)*>(user))(json::parse(text)); };
        check(pv_reproduce_all(cfg, cb, &show, &passed));
      } else {
        char* s = nullptr;
        check(pv_reproduce(case_id.c_str(), cfg, &s));
        show(json::parse(take(s)));
      }
    };
  });

  try {
    app.parse(argc, argv);
    auto cfg = make_config(g, app);
    if (action) action(cfg.get());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}
