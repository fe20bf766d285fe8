#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace zbhyp {

// One failed check. margin is the signed slack of the claim at the point;
// a violation is only recorded when margin < -tol for that claim.
struct Violation {
  std::string claim_id;
  double a = 0.0, b = 0.0, c = 0.0, x = 0.0;  // NaN where not applicable
  double lhs = 0.0, rhs = 0.0;
  double margin = 0.0;
  bool known_discrepancy = false;
};

// One evaluated check, pass or fail; the CSV serialization emits one row
// per check.
struct CheckRecord {
  std::string claim_id;
  double a = 0.0, b = 0.0, c = 0.0, x = 0.0;
  double lhs = 0.0, rhs = 0.0;
  double margin = 0.0;
  bool passed = true;
  bool known_discrepancy = false;
};

struct Report {
  std::string suite;
  std::string grid;
  long checks_run = 0;
  long checks_passed = 0;
  std::vector<Violation> violations;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;

  void merge(const Report& other);
  void note(std::string text);

  // Record one check outcome; registers a Violation when margin < -tol.
  void check(const std::string& claim_id, double lhs, double rhs,
             double margin, double tol, double a, double b, double c,
             double x);

  bool has_enforced_violations() const;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

}  // namespace zbhyp
