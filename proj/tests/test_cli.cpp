// End-to-end checks of the CLI binary: exit codes, schema stability and
// byte-determinism of the rendered output.
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef ZBHYP_CLI_PATH
#error "ZBHYP_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "zbhyp_cli_test_out.tmp";
  const std::string cmd = std::string(ZBHYP_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("eval golden output at x = 0") {
  const RunResult r = run_cli("eval --a 0.5 --b 0.5 --c 1 --x 0");
  CHECK(r.exit_code == 0);
  const std::string expected =
      "{\n"
      "  \"a\": 0.5,\n"
      "  \"b\": 0.5,\n"
      "  \"c\": 1.0,\n"
      "  \"x\": 0.0,\n"
      "  \"value\": 1.0,\n"
      "  \"route\": \"series\",\n"
      "  \"accuracy_warning\": false\n"
      "}\n";
  CHECK(r.out == expected);
}

TEST_CASE("eval gauss point and csv format") {
  const RunResult r = run_cli("eval --a 0.5 --b 0.5 --c 2 --x 1");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["route"] == "gauss");
  CHECK(std::abs(j["value"].get<double>() - 4.0 / 3.14159265358979323846) <=
        1e-12);

  const RunResult c = run_cli("--format csv eval --a 0.5 --b 0.5 --c 2 --x 1");
  CHECK(c.exit_code == 0);
  CHECK(c.out.rfind("a,b,c,x,value,route,accuracy_warning\n", 0) == 0);
}

TEST_CASE("eval domain error exits 2") {
  CHECK(run_cli("eval --a 0.5 --b 0.5 --c 1 --x 1").exit_code == 2);
  CHECK(run_cli("eval --a 0.5 --b 0.5 --c -1 --x 0.5").exit_code == 2);
}

TEST_CASE("thresholds command") {
  const RunResult r = run_cli("thresholds --a 0.5 --b 0.5");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["R"].get<double>() - std::log(16.0)) <= 1e-12);
  CHECK(j["inv_sum"] == 4.0);
  CHECK(j["c_ab"] == 3.2);
  CHECK(std::abs(j["delta_plus"].get<double>() - 8.0 / 3.0) <= 1e-8);
  // degenerate parameters: exit 2 naming the undefined quantity
  CHECK(run_cli("thresholds --a 0 --b 0.5").exit_code == 2);
}

TEST_CASE("classify command") {
  const RunResult concave = run_cli("classify --a 0.5 --b 0.5 --c 3.3");
  CHECK(concave.exit_code == 0);
  auto j = nlohmann::json::parse(concave.out);
  CHECK(j["curvature"] == "concave");

  const RunResult convex = run_cli("classify --a 0.5 --b 0.5 --c 2.5");
  j = nlohmann::json::parse(convex.out);
  CHECK(j["curvature"] == "convex");
  CHECK(j["monotonicity"] == "increasing");

  const RunResult neither = run_cli("classify --a 0.5 --b 0.5 --c 3");
  j = nlohmann::json::parse(neither.out);
  CHECK(j["curvature"] == "neither");
  CHECK(j["monotonicity"] == "neither");
  CHECK(j["witness"].is_number());

  CHECK(run_cli("classify --a 0.5 --b 0.5 --c 3 --target bogus").exit_code ==
        2);
}

TEST_CASE("verify command exit codes") {
  CHECK(run_cli("verify --suite sandwich").exit_code == 0);
  CHECK(run_cli("verify --suite corollary2 --grid 256").exit_code == 0);
  CHECK(run_cli("verify --suite all --grid 0").exit_code == 0);
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);

  const RunResult zero = run_cli("verify --suite all --grid 0");
  const auto j = nlohmann::json::parse(zero.out);
  CHECK(j["checks_run"] == 0);
  CHECK(j["violations"].empty());
}

TEST_CASE("verify csv schema") {
  const RunResult r = run_cli("--format csv verify --suite sandwich --grid 64");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind(
            "suite,claim_id,a,b,c,x,lhs,rhs,margin,passed,known_discrepancy\n",
            0) == 0);
}

TEST_CASE("verify config file handling") {
  {
    std::ofstream out("zbhyp_cli_cfg.tmp");
    out << "na = 1\nnb = 1\ngrid_n = 64\nclassify_n = 64\n";
  }
  CHECK(run_cli("verify --suite lemmas --config zbhyp_cli_cfg.tmp")
            .exit_code == 0);
  {
    std::ofstream out("zbhyp_cli_cfg.tmp");
    out << "no_such_key = 3\n";
  }
  CHECK(run_cli("verify --suite lemmas --config zbhyp_cli_cfg.tmp")
            .exit_code == 2);
  std::remove("zbhyp_cli_cfg.tmp");
}

TEST_CASE("series command") {
  const RunResult r = run_cli("--format csv series --family g_final_d --n 10");
  CHECK(r.exit_code == 0);
  // first data row is d_0
  const auto line_start = r.out.find('\n') + 1;
  const std::string first = r.out.substr(line_start, r.out.find('\n', line_start) - line_start);
  CHECK(first.rfind("0,0.25931459936794", 0) == 0);
  CHECK(run_cli("series --family not_a_family --n 5").exit_code == 2);
  CHECK(run_cli("series --family R_series --n 500").exit_code == 2);

  const RunResult j = run_cli("series --family R_series --n 0");
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["values"].size() == 1);
  CHECK(std::abs(parsed["values"][0].get<double>() - std::log(16.0)) <= 1e-14);
}

TEST_CASE("byte-identical reruns") {
  const std::string cmd = "verify --suite sandwich --grid 128";
  const RunResult r1 = run_cli(cmd);
  const RunResult r2 = run_cli(cmd);
  CHECK(r1.out == r2.out);
  CHECK(!r1.out.empty());
}
