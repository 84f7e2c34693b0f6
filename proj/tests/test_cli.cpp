#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

// Drives the installed binary through a shell pipe; CUBICALG_CLI_PATH is
// injected by the build so the test always runs the binary it was built with.

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CUBICALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::string out;
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("oscillator spectrum reproduces the decoupled limit") {
  const auto r = run_cli(
      "dso spectrum --N 4 --n 2 --c1 1e-12 --c2 1e-12 --omega 1 --hbar 1 "
      "--l1 0 --l2 0 --pmax 2 --no-timing");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["model"] == "dso");
  CHECK(doc["params"]["N"] == 4);
  CHECK(doc.contains("version"));
  CHECK_FALSE(doc.contains("timing"));
  REQUIRE(doc["spectrum"].size() == 3);
  for (int p = 0; p <= 2; ++p) {
    const auto& row = doc["spectrum"][p];
    CHECK(row["p"] == p);
    CHECK(row["energy"].get<double>() == doctest::Approx(2.0 * p + 2).epsilon(1e-5));
    CHECK(row["multiplicity"] == p + 1);
    CHECK(row["branch"] == "(+,+)");
    CHECK(row["physical"] == true);
  }
}

TEST_CASE("Kepler-Coulomb spectrum reproduces the hydrogen-like limit") {
  const auto r = run_cli(
      "kc spectrum --N 3 --c0 1 --c1 1e-12 --c2 1e-12 --l 0 --pmax 1 --hbar 1 --no-timing");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["model"] == "kc");
  double e0 = 0, e1 = 0;
  int physical_rows = 0, labeled_rows = 0;
  for (const auto& row : doc["spectrum"]) {
    ++labeled_rows;
    if (!row["physical"].get<bool>()) continue;
    ++physical_rows;
    if (row["p"] == 0) e0 = row["energy"].get<double>();
    if (row["p"] == 1) e1 = row["energy"].get<double>();
  }
  CHECK(physical_rows == 2);
  CHECK(labeled_rows > 2);  // non-physical branches are listed, flagged
  CHECK(e0 == doctest::Approx(-1.0).epsilon(1e-5));
  CHECK(e1 == doctest::Approx(-0.25).epsilon(1e-5));
}

TEST_CASE("identical configuration emits identical bytes") {
  const auto a = run_cli("verify --no-timing");
  const auto b = run_cli("verify --no-timing");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.size() > 1000);

  const json doc = json::parse(a.out);
  CHECK(doc["model"] == "all");
  CHECK(doc["sector"].contains("dso"));
  CHECK(doc["sector"].contains("kc"));
  int passes = 0;
  for (const auto& c : doc["checks"]) {
    CHECK(c["status"] == "pass");
    ++passes;
  }
  CHECK(passes >= 25);
}

TEST_CASE("timing block appears unless suppressed") {
  const auto r = run_cli("dso spectrum --pmax 1");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.contains("timing"));
  CHECK(doc["timing"]["seconds"].get<double>() >= 0);
}

TEST_CASE("fault injection names the broken identity and exits 2") {
  const auto r = run_cli("verify --mutate alpha1 1e-3 --no-timing");
  CHECK(r.exit_code == 2);
  const json doc = json::parse(r.out);
  CHECK(doc["params"]["mutate"]["target"] == "alpha1");
  CHECK(doc["params"]["mutate"]["delta"].get<double>() == doctest::Approx(1e-3));
  int failures = 0;
  bool witnessed = false;
  for (const auto& c : doc["checks"])
    if (c["status"] == "fail") {
      ++failures;
      witnessed = witnessed || !c["witness"].get<std::string>().empty();
    }
  CHECK(failures > 0);
  CHECK(witnessed);
}

TEST_CASE("csv is a spectrum projection only") {
  const auto ok = run_cli("kc spectrum --pmax 1 --format csv");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.rfind("p,energy,multiplicity,branch,physical\n", 0) == 0);
  CHECK(ok.out.find("\"(+,+)\"") != std::string::npos);

  const auto bad = run_cli("verify --format csv");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("invalid configurations exit 1") {
  CHECK(run_cli("dso spectrum --omega -1").exit_code == 1);
  CHECK(run_cli("dso spectrum --bogus-flag 3").exit_code == 1);
  CHECK(run_cli("verify --mutate bogus 1e-3").exit_code == 1);
  CHECK(run_cli("verify --mutate alpha1 notanumber").exit_code == 1);
  CHECK(run_cli("dso").exit_code == 1);  // missing required subcommand
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("oracle battery passes and its raw grid error drops with refinement") {
  const auto coarse = run_cli("oracle --grid-points 500 --no-timing");
  REQUIRE(coarse.exit_code == 0);
  const auto fine = run_cli("oracle --grid-points 1000 --no-timing");
  REQUIRE(fine.exit_code == 0);

  auto raw_error = [](const std::string& out) {
    const json doc = json::parse(out);
    for (const auto& c : doc["checks"])
      if (c["name"] == "dso_grid_error_coarse") return c["max_residual"].get<double>();
    return -1.0;
  };
  const double e500 = raw_error(coarse.out);
  const double e1000 = raw_error(fine.out);
  REQUIRE(e500 > 0);
  REQUIRE(e1000 > 0);
  // second-order discretization: doubling the grid must shrink the raw
  // (non-extrapolated) error by roughly 4, so at least 3
  CHECK(e500 / e1000 >= 3.0);

  const json doc = json::parse(fine.out);
  bool has_increment = false;
  for (const auto& c : doc["checks"]) {
    if (c["name"] == "kc_ccm_increment") has_increment = true;
    CHECK(c["status"] == "pass");
  }
  CHECK(has_increment);
}

TEST_CASE("text format renders a summary") {
  const auto r = run_cli("verify --format text --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("cubicalg ", 0) == 0);
  CHECK(r.out.find("summary: all") != std::string::npos);
}
