// cubicalg: algebraic spectra, identity verification, and finite-difference
// cross-checks for the two ladder-constructed models.
//
// Exit codes: 0 all checks pass, 1 invalid configuration, 2 at least one
// invariant check failed (or an oracle refinement did not converge).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicalg/models.hpp"
#include "cubicalg/verify.hpp"

namespace {

using nlohmann::json;
using namespace cubicalg;

struct CommonConfig {
  int N = 4;
  int n = 2;
  double c0 = 1, c1 = 1, c2 = 1, omega = 1, hbar = 1;
  int l1 = 0, l2 = 0, l = 0;
  int pmax = 10, max_level = 10, grid_points = 900;
  double rmax = 0;
  std::vector<std::string> mutate;
  std::string format = "json";
  std::string out;
  bool no_timing = false;
};

std::string branch_str(int k1, int k2) {
  return std::string("(") + (k1 > 0 ? "+" : "-") + "," + (k2 > 0 ? "+" : "-") + ")";
}

json dso_params_json(const models::DsoParams& p) {
  return {{"N", p.N},         {"n", p.n},       {"c1", p.c1}, {"c2", p.c2},
          {"omega", p.omega}, {"hbar", p.hbar}, {"l1", p.l1}, {"l2", p.l2}};
}

json kc_params_json(const models::KcParams& p) {
  return {{"N", p.N},   {"c0", p.c0},     {"c1", p.c1},
          {"c2", p.c2}, {"hbar", p.hbar}, {"l", p.l}};
}

json sector_json(const verify::SectorInfo& s) {
  return {{"alpha1", s.alpha1}, {"alpha2", s.alpha2}, {"delta1", s.delta1},
          {"delta2", s.delta2}, {"scale", s.scale}};
}

json make_document(const std::string& model, json params, const verify::Report& rep,
                   double seconds, bool timing) {
  json doc;
  doc["schema_version"] = 1;
  doc["version"] = CUBICALG_VERSION;
  doc["model"] = model;
  doc["params"] = std::move(params);
  if (rep.sectors.size() == 1) {
    doc["sector"] = sector_json(rep.sectors[0]);
  } else {
    json s;
    for (const auto& x : rep.sectors) s[x.model] = sector_json(x);
    doc["sector"] = s;
  }
  json spectrum = json::array();
  for (const auto& r : rep.spectrum)
    spectrum.push_back({{"p", r.p},
                        {"energy", r.energy},
                        {"multiplicity", r.multiplicity},
                        {"branch", branch_str(r.k1, r.k2)},
                        {"physical", r.physical}});
  doc["spectrum"] = std::move(spectrum);
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.pass ? "pass" : "fail"},
                      {"max_residual", c.max_residual},
                      {"witness", c.witness}});
  doc["checks"] = std::move(checks);
  if (timing) doc["timing"] = {{"seconds", std::round(seconds * 1e6) / 1e6}};
  return doc;
}

std::string csv_report(const verify::Report& rep) {
  std::string out = "p,energy,multiplicity,branch,physical\n";
  char line[128];
  for (const auto& r : rep.spectrum) {
    std::snprintf(line, sizeof line, "%d,%.17g,%d,\"%s\",%d\n", r.p, r.energy,
                  r.multiplicity, branch_str(r.k1, r.k2).c_str(), r.physical ? 1 : 0);
    out += line;
  }
  return out;
}

std::string text_report(const std::string& model, const verify::Report& rep,
                        double seconds, bool timing) {
  std::string out;
  char line[256];
  auto add = [&](const char* pattern, auto... args) {
    std::snprintf(line, sizeof line, pattern, args...);
    out += line;
    out += '\n';
  };
  add("cubicalg %s  model=%s", CUBICALG_VERSION, model.c_str());
  for (const auto& s : rep.sectors)
    add("sector %-4s alpha1=%.10g alpha2=%.10g delta1=%.8g delta2=%.8g scale=%.8g",
        s.model.c_str(), s.alpha1, s.alpha2, s.delta1, s.delta2, s.scale);
  if (!rep.spectrum.empty()) {
    add("spectrum:");
    add("  %4s  %-20s %4s  %-6s %s", "p", "energy", "mult", "branch", "physical");
    for (const auto& r : rep.spectrum)
      add("  %4d  %-20.12g %4d  %-6s %s", r.p, r.energy, r.multiplicity,
          branch_str(r.k1, r.k2).c_str(), r.physical ? "yes" : "no");
  }
  if (!rep.checks.empty()) {
    add("checks:");
    int failed = 0;
    for (const auto& c : rep.checks) {
      failed += c.pass ? 0 : 1;
      add("  %s %-32s max_residual=%-12.4g %s", c.pass ? "PASS" : "FAIL", c.name.c_str(),
          c.max_residual, c.witness.c_str());
    }
    if (failed == 0)
      add("summary: all %zu checks passed", rep.checks.size());
    else
      add("summary: %d of %zu checks FAILED", failed, rep.checks.size());
  }
  if (timing) add("time: %.3fs", seconds);
  return out;
}

void add_output_flags(CLI::App* cmd, CommonConfig& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write the report to PATH instead of stdout");
  cmd->add_flag("--no-timing", c.no_timing,
                "Omit the timing block so identical runs emit identical bytes");
}

void add_dso_model_flags(CLI::App* cmd, CommonConfig& c) {
  cmd->add_option("--n", c.n, "First block dimension (second has N-n)")->capture_default_str();
  cmd->add_option("--c1", c.c1, "Singular coupling of block 1")->capture_default_str();
  cmd->add_option("--c2", c.c2, "Singular coupling of block 2")->capture_default_str();
  cmd->add_option("--omega", c.omega, "Oscillator frequency")->capture_default_str();
  cmd->add_option("--hbar", c.hbar, "Planck constant")->capture_default_str();
  cmd->add_option("--l1", c.l1, "Angular momentum of block 1")->capture_default_str();
  cmd->add_option("--l2", c.l2, "Angular momentum of block 2")->capture_default_str();
}

void add_kc_model_flags(CLI::App* cmd, CommonConfig& c) {
  cmd->add_option("--c0", c.c0, "Coulomb strength")->capture_default_str();
  cmd->add_option("--c1", c.c1, "First non-central coupling")->capture_default_str();
  cmd->add_option("--c2", c.c2, "Second non-central coupling")->capture_default_str();
  cmd->add_option("--hbar", c.hbar, "Planck constant")->capture_default_str();
  cmd->add_option("--l", c.l, "Angular momentum")->capture_default_str();
}

void add_combined_model_flags(CLI::App* cmd, CommonConfig& c, CLI::Option*& n_opt) {
  n_opt = cmd->add_option("--N", c.N,
                          "Ambient dimension for both models (defaults: dso 4, kc 3)");
  cmd->add_option("--n", c.n, "dso first block dimension")->capture_default_str();
  cmd->add_option("--c0", c.c0, "kc Coulomb strength")->capture_default_str();
  cmd->add_option("--c1", c.c1, "First coupling, both models")->capture_default_str();
  cmd->add_option("--c2", c.c2, "Second coupling, both models")->capture_default_str();
  cmd->add_option("--omega", c.omega, "dso oscillator frequency")->capture_default_str();
  cmd->add_option("--hbar", c.hbar, "Planck constant, both models")->capture_default_str();
  cmd->add_option("--l1", c.l1, "dso block 1 angular momentum")->capture_default_str();
  cmd->add_option("--l2", c.l2, "dso block 2 angular momentum")->capture_default_str();
  cmd->add_option("--l", c.l, "kc angular momentum")->capture_default_str();
}

int emit(const CommonConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    std::cerr << "cubicalg: cannot open " << cfg.out << " for writing\n";
    return 1;
  }
  f << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic spectra and verification for two ladder-constructed models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CUBICALG_VERSION);

  CommonConfig dso_cfg, kc_cfg, verify_cfg, oracle_cfg;
  kc_cfg.N = 3;

  auto* dso_cmd = app.add_subcommand("dso", "Double singular oscillator model");
  dso_cmd->require_subcommand(1);
  auto* dso_spec =
      dso_cmd->add_subcommand("spectrum", "Energy levels from the ladder construction");
  dso_spec->add_option("--N", dso_cfg.N, "Ambient dimension")->capture_default_str();
  add_dso_model_flags(dso_spec, dso_cfg);
  dso_spec->add_option("--pmax", dso_cfg.pmax, "Highest level")->capture_default_str();
  add_output_flags(dso_spec, dso_cfg);

  auto* kc_cmd = app.add_subcommand("kc", "Kepler-Coulomb model");
  kc_cmd->require_subcommand(1);
  auto* kc_spec =
      kc_cmd->add_subcommand("spectrum", "Branch energies with physical labeling");
  kc_spec->add_option("--N", kc_cfg.N, "Ambient dimension")->capture_default_str();
  add_kc_model_flags(kc_spec, kc_cfg);
  kc_spec->add_option("--pmax", kc_cfg.pmax, "Highest level")->capture_default_str();
  add_output_flags(kc_spec, kc_cfg);

  CLI::Option* verify_n_opt = nullptr;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the full identity battery on both models");
  add_combined_model_flags(verify_cmd, verify_cfg, verify_n_opt);
  verify_cmd->add_option("--pmax", verify_cfg.pmax, "Structure-function range")
      ->capture_default_str();
  verify_cmd->add_option("--max-level", verify_cfg.max_level, "Lattice states up to n1+n2")
      ->capture_default_str();
  verify_cmd->add_option("--grid-points", verify_cfg.grid_points, "Base oracle grid size")
      ->check(CLI::Range(50, 200000))
      ->capture_default_str();
  verify_cmd->add_option("--rmax", verify_cfg.rmax, "Oracle box radius (0 = automatic)")
      ->capture_default_str();
  verify_cmd
      ->add_option("--mutate", verify_cfg.mutate,
                   "Inject NAME DELTA fault into one ladder coefficient or exponent")
      ->expected(2);
  add_output_flags(verify_cmd, verify_cfg);

  CLI::Option* oracle_n_opt = nullptr;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Cross-check algebraic spectra against the finite-difference solver");
  add_combined_model_flags(oracle_cmd, oracle_cfg, oracle_n_opt);
  oracle_cmd->add_option("--grid-points", oracle_cfg.grid_points, "Base oracle grid size")
      ->check(CLI::Range(50, 200000))
      ->capture_default_str();
  oracle_cmd->add_option("--rmax", oracle_cfg.rmax, "Oracle box radius (0 = automatic)")
      ->capture_default_str();
  add_output_flags(oracle_cmd, oracle_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const bool spectrum_cmd = dso_spec->parsed() || kc_spec->parsed();
  const CommonConfig& cfg = dso_spec->parsed()    ? dso_cfg
                            : kc_spec->parsed()   ? kc_cfg
                            : verify_cmd->parsed() ? verify_cfg
                                                   : oracle_cfg;
  if (cfg.format == "csv" && !spectrum_cmd) {
    std::cerr << "cubicalg: csv is a flat projection of the spectrum table; "
                 "use json or text for verify and oracle reports\n";
    return 1;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    verify::Report rep;
    std::string model;
    json params;

    if (dso_spec->parsed()) {
      const models::DsoParams p{dso_cfg.N,     dso_cfg.n,    dso_cfg.c1, dso_cfg.c2,
                                dso_cfg.omega, dso_cfg.hbar, dso_cfg.l1, dso_cfg.l2};
      rep = verify::run_dso_spectrum(p, dso_cfg.pmax);
      model = "dso";
      params = dso_params_json(p);
    } else if (kc_spec->parsed()) {
      const models::KcParams p{kc_cfg.N,  kc_cfg.c0,   kc_cfg.c1,
                               kc_cfg.c2, kc_cfg.hbar, kc_cfg.l};
      rep = verify::run_kc_spectrum(p, kc_cfg.pmax);
      model = "kc";
      params = kc_params_json(p);
    } else {
      const bool n_given = verify_cmd->parsed() ? verify_n_opt->count() > 0
                                                : oracle_n_opt->count() > 0;
      const models::DsoParams dp{n_given ? cfg.N : 4, cfg.n,    cfg.c1, cfg.c2,
                                 cfg.omega,           cfg.hbar, cfg.l1, cfg.l2};
      const models::KcParams kp{n_given ? cfg.N : 3, cfg.c0,   cfg.c1,
                                cfg.c2,              cfg.hbar, cfg.l};
      verify::Options opts;
      opts.pmax = cfg.pmax;
      opts.max_level = cfg.max_level;
      opts.grid_points = cfg.grid_points;
      opts.rmax = cfg.rmax;
      model = "all";
      params = {{"dso", dso_params_json(dp)}, {"kc", kc_params_json(kp)}};
      if (!cfg.mutate.empty()) {
        opts.mutation.target = cfg.mutate[0];
        std::size_t pos = 0;
        try {
          opts.mutation.delta = std::stod(cfg.mutate[1], &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != cfg.mutate[1].size()) {
          std::cerr << "cubicalg: --mutate delta must be a number, got '" << cfg.mutate[1]
                    << "'\n";
          return 1;
        }
        params["mutate"] = {{"target", opts.mutation.target},
                            {"delta", opts.mutation.delta}};
      }
      rep = verify_cmd->parsed() ? verify::run_verify(dp, kp, opts)
                                 : verify::run_oracle(dp, kp, opts);
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string payload;
    if (cfg.format == "json")
      payload = make_document(model, std::move(params), rep, seconds, !cfg.no_timing).dump(2) + "\n";
    else if (cfg.format == "csv")
      payload = csv_report(rep);
    else
      payload = text_report(model, rep, seconds, !cfg.no_timing);

    if (const int rc = emit(cfg, payload); rc != 0) return rc;
    return rep.all_pass ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cubicalg: invalid configuration: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "cubicalg: invalid configuration: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cubicalg: check aborted: " << e.what() << "\n";
    return 2;
  }
}
