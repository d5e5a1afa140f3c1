#include <doctest.h>

#include <cstdlib>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "severi/json_io.hpp"
#include "severi/report.hpp"
#include "support/known_templates.hpp"

using namespace severi;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SEVERI_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string run_cli_stdout(const std::string& args) {
  const std::string cmd = std::string(SEVERI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[256];
  while (fgets(buffer, sizeof(buffer), pipe) != nullptr) out += buffer;
  pclose(pipe);
  return out;
}

}  // namespace

TEST_CASE("template table matches the known statistics rows") {
  std::map<TauGraph, testing::KnownTemplateRow> expected;
  for (const auto& row : testing::known_template_rows()) expected.emplace(row.graph, row);

  for (unsigned delta = 1; delta <= 2; ++delta) {
    const auto rows = template_table(delta, std::nullopt);
    for (const TemplateRow& row : rows) {
      REQUIRE(expected.count(row.graph) == 1);
      const auto& want = expected.at(row.graph);
      CAPTURE(row.graph.to_string());
      CHECK(row.delta == want.delta);
      CHECK(row.length == want.length);
      CHECK(row.mu == want.mu);
      CHECK(row.eps0 == want.eps0);
      CHECK(row.eps1 == want.eps1);
      CHECK(row.lambda == want.lambda);
      CHECK(row.lambda_bar == want.lambda_bar);
      CHECK(row.kmin == want.kmin);
      CHECK(row.p == want.p);
      CHECK(row.phi == want.phi);
      CHECK(row.zeta0 == want.zeta0);
      CHECK(row.zeta1 == want.zeta1);
      CHECK(row.eta0 == want.eta0);
      CHECK(row.shift_slope == want.shift_slope);
      CHECK(row.shift_intercept == want.shift_intercept);
    }
  }
}

TEST_CASE("JSON round trip is byte identical") {
  const auto rows = template_table(2, std::nullopt);
  const std::string rendered = render_template_rows(rows, 2, OutputFormat::Json);

  const auto doc = nlohmann::json::parse(rendered);
  CHECK(doc.at("format_version").get<int>() == kJsonFormatVersion);
  std::vector<TemplateRow> reparsed;
  for (const auto& record : doc.at("templates")) {
    reparsed.push_back(template_row(Template(tau_graph_from_json(record.at("edges")))));
  }
  const std::string again = render_template_rows(reparsed, 2, OutputFormat::Json);
  CHECK(rendered == again);
}

TEST_CASE("qpoly and series JSON payloads") {
  const auto q1 = q_poly_delta(1);
  const auto doc = qpoly_json(q1, 1, "Q_delta");
  CHECK(doc.at("polynomial").get<std::string>() == "3*d^2 - 6*d + 3");
  CHECK(doc.at("validity_threshold").get<unsigned>() == 1);
  CHECK(doc.at("coefficients")[0].get<std::string>() == "3");

  const auto s = series_json("a1", {a1_coefficient(1), a1_coefficient(2)});
  CHECK(s.at("coefficients")[1].get<std::string>() == "-21");

  CHECK(q_poly_delta(2).to_string() == "-21*d^2 + 117/2*d - 75/2");
  CHECK(node_polynomial(1).to_string() == "3*d^2 - 6*d + 3");
}

TEST_CASE("CLI stdout for the worked calls") {
  CHECK(run_cli_stdout("severi --d 4 --delta 1") == "27\n");
  CHECK(run_cli_stdout("severi --d 3 --delta 1 --method both") == "12 / 12 / match\n");
  CHECK(run_cli_stdout("series a1 --order 2") == "3, -21\n");
  CHECK(run_cli_stdout("qpoly --delta 1") ==
        "3*d^2 - 6*d + 3   (exact for d >= 1)\n");
}

TEST_CASE("verify harness passes clean and fails when a fault is injected") {
  const auto clean = run_verify(VerifyLevel::Quick);
  CHECK(clean.ok());
  CHECK(clean.passed > 50);

  const auto faulty = run_verify(VerifyLevel::Quick, /*inject_fault=*/true);
  CHECK_FALSE(faulty.ok());
  CHECK(faulty.failed == 1);
}

TEST_CASE("CLI exit codes and outputs") {
  CHECK(run_cli("severi --d 3 --delta 1") == 0);
  CHECK(run_cli("severi --d 3 --delta 1 --method both") == 0);
  CHECK(run_cli("templates --delta 0") == 0);
  CHECK(run_cli("templates --delta 2 --format csv") == 0);
  CHECK(run_cli("qpoly --delta 2 --format json") == 0);
  CHECK(run_cli("series a2 --order 2") == 0);
  CHECK(run_cli("words count --tau 0-1:2 --n 2 --t 1") == 0);
  CHECK(run_cli("words fis --tau 0-1:2 --word 100 --height -1") == 0);
  CHECK(run_cli("verify --level quick") == 0);

  CHECK(run_cli("bogus") == 2);                          // usage
  CHECK(run_cli("templates") == 2);                      // missing required flag
  CHECK(run_cli("series a3 --order 1") == 2);            // bad argument
  CHECK(run_cli("templates --delta 9") == 3);            // ceiling
  CHECK(run_cli("severi --d 11 --delta 1") == 3);        // ceiling
  CHECK(run_cli("words count --tau 0-1:2 --n 9 --t 1") == 3);  // letter budget
  CHECK(run_cli("verify --level quick --inject-fault") == 1);
}

TEST_CASE("CLI respects the cache directory flag and environment variable") {
  const std::string dir = "/tmp/severi_cli_cache_test";
  std::filesystem::remove_all(dir);
  CHECK(run_cli("--cache-dir " + dir + " templates --delta 2") == 0);
  CHECK(std::filesystem::exists(dir + "/templates_delta_2.json"));
  CHECK(run_cli("--cache-dir " + dir + " templates --delta 2 --format json") == 0);
  std::filesystem::remove_all(dir);

  const std::string env_dir = "/tmp/severi_cli_cache_env_test";
  std::filesystem::remove_all(env_dir);
  const std::string cmd = "SEVERI_CACHE_DIR=" + env_dir + " " +
                          std::string(SEVERI_CLI_PATH) +
                          " templates --delta 1 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(std::filesystem::exists(env_dir + "/templates_delta_1.json"));
  std::filesystem::remove_all(env_dir);
}
