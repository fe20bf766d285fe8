#include "zbhyp/report.hpp"

#include <cmath>
#include <cstdio>

#include "zbhyp/claims.hpp"

namespace zbhyp {
namespace {

nlohmann::ordered_json num_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

void append_num(std::string& out, double v) {
  if (std::isnan(v)) return;  // empty cell
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

void Report::merge(const Report& other) {
  if (suite.empty())
    suite = other.suite;
  else if (!other.suite.empty() && other.suite != suite)
    suite += "+" + other.suite;
  if (grid.empty())
    grid = other.grid;
  else if (!other.grid.empty() && other.grid != grid)
    grid += "; " + other.grid;
  checks_run += other.checks_run;
  checks_passed += other.checks_passed;
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& n : other.notes) note(n);
}

void Report::note(std::string text) {
  for (const auto& n : notes)
    if (n == text) return;
  notes.push_back(std::move(text));
}

void Report::check(const std::string& claim_id, double lhs, double rhs,
                   double margin, double tol, double a, double b, double c,
                   double x) {
  const bool known = claim_info(claim_id).known_discrepancy;
  CheckRecord rec{claim_id, a, b, c, x, lhs, rhs, margin, true, known};
  ++checks_run;
  if (margin < -tol) {
    rec.passed = false;
    violations.push_back(Violation{claim_id, a, b, c, x, lhs, rhs, margin,
                                   known});
  } else {
    ++checks_passed;
  }
  checks.push_back(std::move(rec));
}

bool Report::has_enforced_violations() const {
  for (const auto& v : violations)
    if (!v.known_discrepancy) return true;
  return false;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["grid"] = grid;
  j["checks_run"] = checks_run;
  j["checks_passed"] = checks_passed;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json jv;
    jv["claim_id"] = v.claim_id;
    jv["a"] = num_or_null(v.a);
    jv["b"] = num_or_null(v.b);
    jv["c"] = num_or_null(v.c);
    jv["x"] = num_or_null(v.x);
    jv["lhs"] = v.lhs;
    jv["rhs"] = v.rhs;
    jv["margin"] = v.margin;
    jv["known_discrepancy"] = v.known_discrepancy;
    j["violations"].push_back(std::move(jv));
  }
  j["notes"] = notes;
  return j;
}

std::string Report::to_csv() const {
  std::string out =
      "suite,claim_id,a,b,c,x,lhs,rhs,margin,passed,known_discrepancy\n";
  for (const auto& r : checks) {
    out += suite;
    out += ',';
    out += r.claim_id;
    out += ',';
    append_num(out, r.a);
    out += ',';
    append_num(out, r.b);
    out += ',';
    append_num(out, r.c);
    out += ',';
    append_num(out, r.x);
    out += ',';
    append_num(out, r.lhs);
    out += ',';
    append_num(out, r.rhs);
    out += ',';
    append_num(out, r.margin);
    out += ',';
    out += r.passed ? "1" : "0";
    out += ',';
    out += r.known_discrepancy ? "1" : "0";
    out += '\n';
  }
  return out;
}

}  // namespace zbhyp
