// cnct: convergence acceleration for slowly convergent and divergent series.
// SPDX-License-Identifier: MIT
//
// End-to-end CLI tests: spawn the installed binary, compare benchmark CSV
// output byte-for-byte against the committed golden files, round-trip the
// JSON format through the document model, and pin the exit-code contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "render.hpp"

namespace {

struct cli_run {
  std::string out;
  int exit_code = -1;
};

/// Run the CLI with `args`, capturing stdout (stderr is merged in when
/// `merge_stderr`, discarded otherwise).
cli_run run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(CNCT_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  cli_run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (f == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int st = pclose(f);
  if (WIFEXITED(st)) r.exit_code = WEXITSTATUS(st);
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

std::complex<double> scalar_of(const nlohmann::ordered_json& v) {
  if (v.is_array()) return {v.at(0).get<double>(), v.at(1).get<double>()};
  return {v.get<double>(), 0.0};
}

/// Rebuild the document model from its JSON rendering.
cnct_render::output_document document_of(const nlohmann::ordered_json& j) {
  cnct_render::output_document d;
  d.problem = j.at("problem").get<std::string>();
  for (const auto& [k, v] : j.at("params").items())
    d.params.emplace_back(k, v.get<std::string>());
  d.scale = j.at("scale").get<double>();
  d.is_complex = j.at("value").is_array();
  for (const auto& row : j.at("rows")) {
    cnct_render::output_row r;
    r.n = row.at("n").get<std::uint64_t>();
    r.partial_sum = scalar_of(row.at("partial_sum"));
    if (row.contains("euler")) r.euler = scalar_of(row.at("euler"));
    if (row.contains("levin_d")) r.levin_d = scalar_of(row.at("levin_d"));
    if (row.contains("weniger_delta"))
      r.weniger_delta = scalar_of(row.at("weniger_delta"));
    d.rows.push_back(r);
  }
  d.value = scalar_of(j.at("value"));
  d.error_estimate = j.at("error_estimate").get<double>();
  d.term_evaluations = j.at("term_evaluations").get<std::uint64_t>();
  d.order_used = j.at("order_used").get<std::uint64_t>();
  d.converged = j.at("converged").get<bool>();
  return d;
}

const char* const kTableIds[] = {"4.1", "4.2", "4.3", "5.1", "5.2", "5.3",
                                 "5.4", "6.1", "6.2", "6.3", "7.1"};

}  // namespace

TEST_CASE("benchmark tables match the golden csv files byte for byte") {
  for (const char* id : kTableIds) {
    CAPTURE(id);
    const cli_run r = run_cli(std::string("table ") + id + " --format csv");
    CHECK(r.exit_code == 0);
    const std::string golden =
        read_file(std::filesystem::path(CNCT_GOLDEN_DIR) /
                  (std::string("table_") + id + ".csv"));
    REQUIRE_FALSE(golden.empty());
    CHECK(r.out == golden);
  }
}

TEST_CASE("csv output is deterministic across runs") {
  const cli_run a = run_cli("table 7.1 --format csv");
  const cli_run b = run_cli("table 7.1 --format csv");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json output round-trips through the document model") {
  for (const char* id : {"4.1", "4.3"}) {
    CAPTURE(id);
    const cli_run text = run_cli(std::string("table ") + id);
    const cli_run json = run_cli(std::string("table ") + id + " --format json");
    REQUIRE(text.exit_code == 0);
    REQUIRE(json.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(json.out);
    const cnct_render::output_document doc = document_of(j);
    CHECK(cnct_render::render_text(doc) + "\n" == text.out);
  }
}

TEST_CASE("reference checks pass for every table") {
  const cli_run one = run_cli("table 4.1 --check", true);
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("check 4.1: ok") != std::string::npos);

  const cli_run all = run_cli("table all --check", true);
  CHECK(all.exit_code == 0);
  for (const char* id : kTableIds) {
    CAPTURE(id);
    CHECK(all.out.find(std::string("check ") + id + ": ok") !=
          std::string::npos);
  }
  CHECK(all.out.find("FAIL") == std::string::npos);

  const cli_run flag = run_cli("table --all --check", true);
  CHECK(flag.exit_code == 0);
}

TEST_CASE("function commands") {
  SUBCASE("polylog json value") {
    const cli_run r = run_cli("polylog --s 2 --z 0.5 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.at("converged").get<bool>());
    const double v = j.at("value").get<double>();
    CHECK(std::fabs(v - 0.5822405264650125) <= 1e-13);
    CHECK(j.at("params").at("s").get<std::string>() == "2");
  }

  SUBCASE("zeta carries the euler column even for a single transform") {
    const cli_run r = run_cli("zeta --z 2 --transform levin-d --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    const auto& last = j.at("rows").back();
    CHECK(last.contains("levin_d"));
    CHECK(last.contains("euler"));
    CHECK_FALSE(last.contains("weniger_delta"));
    CHECK(std::fabs(j.at("value").get<double>() - 1.6449340668482264) <=
          1e-13);
  }

  SUBCASE("scale flag multiplies the displayed values") {
    const cli_run r = run_cli("zeta --z 2 --scale 0.1 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(std::fabs(j.at("value").get<double>() - 0.16449340668482264) <=
          1e-14);
    CHECK(j.at("scale").get<double>() == 0.1);
  }
}

TEST_CASE("alternating terms from a file") {
  SUBCASE("converging input") {
    std::string content = "# eta(2) scaled by 2: sums to pi^2/6\n";
    for (int j = 0; j < 20; ++j) {
      const double mag = 2.0 / ((j + 1.0) * (j + 1.0));
      content += cnct_render::shortest((j % 2 == 0) ? mag : -mag) + "\n";
    }
    const auto path = write_temp("cnct_cli_eta.txt", content);
    const cli_run r =
        run_cli("accelerate --input " + path.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    const double pi = 3.14159265358979323846;
    CHECK(std::fabs(j.at("value").get<double>() - pi * pi / 6.0) <= 1e-12);
    CHECK(j.at("params").at("terms").get<std::string>() == "20");
    std::filesystem::remove(path);
  }

  SUBCASE("complex pairs") {
    // Geometric q^j with q = -0.5+0.3i; the limit is 1/(1-q).
    std::string content;
    std::complex<double> t{1.0, 0.0};
    const std::complex<double> q{-0.5, 0.3};
    for (int j = 0; j < 12; ++j) {
      content += cnct_render::shortest(t.real()) + " " +
                 cnct_render::shortest(t.imag()) + "\n";
      t *= q;
    }
    const auto path = write_temp("cnct_cli_geo.txt", content);
    const cli_run r =
        run_cli("accelerate --input " + path.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    const std::complex<double> limit = 1.0 / (1.0 - q);
    const std::complex<double> v = scalar_of(j.at("value"));
    CHECK(std::abs(v - limit) <= 1e-12);
    std::filesystem::remove(path);
  }
}

TEST_CASE("exit codes") {
  SUBCASE("usage and domain errors exit 2") {
    CHECK(run_cli("table 9.9").exit_code == 2);
    CHECK(run_cli("table").exit_code == 2);
    CHECK(run_cli("zeta --z 1").exit_code == 2);
    CHECK(run_cli("zeta --z nonsense").exit_code == 2);
    CHECK(run_cli("zeta --z 2 --max-order 1").exit_code == 2);
    CHECK(run_cli("polylog --s 2 --z 1.5").exit_code == 2);
    CHECK(run_cli("accelerate --input /nonexistent/terms.txt").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required

    const auto path = write_temp("cnct_cli_short.txt", "1\n-0.5\n0.25\n");
    CHECK(run_cli("accelerate --input " + path.string()).exit_code == 2);
    std::filesystem::remove(path);

    const auto mixed = write_temp("cnct_cli_mixed.txt", "1\n-0.5 0.1\n");
    CHECK(run_cli("accelerate --input " + mixed.string()).exit_code == 2);
    std::filesystem::remove(mixed);
  }

  SUBCASE("an unconverged run exits 3 but still reports its value") {
    const auto path = write_temp("cnct_cli_grandi.txt", "1\n-1\n1\n-1\n");
    const cli_run r = run_cli("accelerate --input " + path.string());
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("value: 0.5") != std::string::npos);
    CHECK(r.out.find("converged: no") != std::string::npos);
    std::filesystem::remove(path);
  }

  SUBCASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("zeta --help").exit_code == 0);
  }
}
