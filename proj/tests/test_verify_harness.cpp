#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "zbhyp/claims.hpp"
#include "zbhyp/phi_aux.hpp"
#include "zbhyp/scalar_special.hpp"
#include "zbhyp/verify_harness.hpp"

using namespace zbhyp;

namespace {

bool has_note_containing(const Report& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

HarnessConfig tiny_config() {
  HarnessConfig cfg;
  cfg.na = 2;
  cfg.nb = 2;
  cfg.a_min = 0.2;
  cfg.a_max = 0.5;
  cfg.b_min = 0.2;
  cfg.b_max = 0.5;
  cfg.grid_n = 64;
  cfg.classify_n = 64;
  return cfg;
}

}  // namespace

TEST_CASE("config file parsing") {
  const std::string path = "zbhyp_test_config.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "a_min = 0.2\n"
        << "na = 3\n"
        << "grid_n = 128   # trailing comment\n"
        << "\n";
  }
  const HarnessConfig cfg = HarnessConfig::from_file(path);
  CHECK(cfg.a_min == 0.2);
  CHECK(cfg.na == 3);
  CHECK(cfg.grid_n == 128);
  {
    std::ofstream out(path);
    out << "bogus_key = 1\n";
  }
  CHECK_THROWS_AS(HarnessConfig::from_file(path), precondition_error);
  {
    std::ofstream out(path);
    out << "a_min = 0.001\n";  // below the 0.05 floor
  }
  CHECK_THROWS_AS(HarnessConfig::from_file(path), precondition_error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(HarnessConfig::from_file("does_not_exist.cfg"),
                  precondition_error);
}

TEST_CASE("parameter grid skips a + b > 1") {
  HarnessConfig cfg;
  cfg.a_min = cfg.b_min = 0.2;
  cfg.a_max = cfg.b_max = 0.8;
  cfg.na = cfg.nb = 2;
  const auto grid = cfg.parameter_grid();
  CHECK(grid.size() == 3);  // only (0.8,0.8) violates a + b <= 1
}

TEST_CASE("corollary1 at the boundary c = c(a,b)") {
  const ZbParams p(0.5, 0.5);
  const Report r = verify_corollary1(p, 3.2, 256, 1e-9);
  CHECK(r.checks_run > 0);
  CHECK_FALSE(r.has_enforced_violations());
  CHECK(r.violations.empty());
  CHECK_THROWS_AS(verify_corollary1(p, 2.0, 64, 1e-9), precondition_error);
}

TEST_CASE("corollary2 in derived form, stated form flagged") {
  const ZbParams p(0.5, 0.5);
  const Report r = verify_corollary2(p, 8.0 / 3.0, 256, 1e-10);
  CHECK_FALSE(r.has_enforced_violations());
  // the stated upper bound is the known factor-4 discrepancy
  bool found_known = false;
  for (const auto& v : r.violations)
    if (v.claim_id == "cor2.upper.stated") found_known = v.known_discrepancy;
  CHECK(found_known);
  CHECK(has_note_containing(r, "4"));
  CHECK_THROWS_AS(verify_corollary2(p, 5.0, 64, 1e-9), precondition_error);
}

TEST_CASE("sandwich suite") {
  const Report r = verify_sandwich(1024, 1e-9);
  CHECK_FALSE(r.has_enforced_violations());
  bool stated_violation = false;
  for (const auto& v : r.violations)
    if (v.claim_id == "sandwich.chain3.upper.stated" && v.known_discrepancy)
      stated_violation = true;
  CHECK(stated_violation);
  CHECK(has_note_containing(r, "19 pi/16"));
}

TEST_CASE("lemma probes") {
  for (const auto& ab : {std::pair{0.5, 0.5}, {0.3, 0.5}, {0.1, 0.4}}) {
    const Report r =
        verify_lemma_probes(ZbParams(ab.first, ab.second), 512, 1e-9);
    CHECK(r.checks_run > 0);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("report merge is associative") {
  const Report r1 = verify_sandwich(64, 1e-9);
  const Report r2 = verify_lemma_probes(ZbParams(0.3, 0.5), 64, 1e-9);
  const Report r3 = verify_corollary1(ZbParams(0.5, 0.5), 3.3, 64, 1e-9);

  Report left;
  left.merge(r1);
  left.merge(r2);
  Report lhs = left;
  lhs.merge(r3);

  Report right23;
  right23.merge(r2);
  right23.merge(r3);
  Report rhs;
  rhs.merge(r1);
  rhs.merge(right23);

  CHECK(lhs.checks_run == rhs.checks_run);
  CHECK(lhs.checks_passed == rhs.checks_passed);
  CHECK(lhs.violations.size() == rhs.violations.size());
  CHECK(lhs.to_csv() == rhs.to_csv());
}

TEST_CASE("every emitted claim id is registered") {
  HarnessConfig cfg = tiny_config();
  const Report r = run_suite(Suite::all, cfg);
  for (const auto& c : r.checks) CHECK(claim_registered(c.claim_id));
  CHECK(r.checks_run == r.checks_passed + long(r.violations.size()));
}

TEST_CASE("run_suite determinism") {
  HarnessConfig cfg = tiny_config();
  const Report r1 = run_suite(Suite::lemmas, cfg);
  const Report r2 = run_suite(Suite::lemmas, cfg);
  CHECK(r1.to_json().dump() == r2.to_json().dump());
  CHECK(r1.to_csv() == r2.to_csv());
}

TEST_CASE("empty grids yield zero checks") {
  HarnessConfig cfg = tiny_config();
  cfg.grid_n = 0;
  const Report r = run_suite(Suite::all, cfg);
  CHECK(r.checks_run == 0);
  CHECK(r.violations.empty());

  // empty parameter grid: everything is skipped, including the
  // parameter-independent suites
  HarnessConfig cfg2 = tiny_config();
  cfg2.a_min = cfg2.a_max = 0.6;
  cfg2.b_min = cfg2.b_max = 0.6;
  cfg2.na = cfg2.nb = 1;
  const Report r2 = run_suite(Suite::all, cfg2);
  CHECK(r2.checks_run == 0);
}

TEST_CASE("first sandwich chain is tight at the midpoint") {
  // direct arithmetic: R(1/2) = log 16 and B(1/2)/(1 + 1/4) = 4 pi / 5
  const double pi = 3.14159265358979323846;
  const double lhs = std::log(16.0) - 4.0 * pi / 5.0 +
                     zbhyp::beta(0.5, 0.5) / 1.25;
  CHECK(std::abs(lhs - zbhyp::ramanujan_r(0.5, 0.5)) <= 1e-13);
}

TEST_CASE("violations are monotone in the tolerance") {
  // loose-tolerance violations must be a subset of strict-tolerance ones
  HarnessConfig cfg = tiny_config();
  Report strict, loose;
  for (const auto& p : cfg.parameter_grid()) {
    strict.merge(verify_corollary1(p, c_threshold(p) + 1e-3, 64, 1e-9));
    loose.merge(verify_corollary1(p, c_threshold(p) + 1e-3, 64, 1e-3));
  }
  for (const auto& v : loose.violations) {
    bool found = false;
    for (const auto& w : strict.violations)
      found = found || (w.claim_id == v.claim_id && w.x == v.x);
    CHECK(found);
  }
}

TEST_CASE("full default suite has no enforced violations") {
  HarnessConfig cfg;  // the 5x5 default grid
  cfg.grid_n = 256;   // lighter x grid for the unit run
  const Report r = run_suite(Suite::all, cfg);
  CHECK(r.checks_run > 0);
  CHECK_FALSE(r.has_enforced_violations());
  CHECK(has_note_containing(r, "b_1 three ways"));
}
