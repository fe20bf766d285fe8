#pragma once

#include <map>
#include <string>
#include <string_view>

namespace zbhyp {

// Registry entry for one verifiable claim. Claims marked known_discrepancy
// are statements whose printed form is internally inconsistent with the
// surrounding derivation; the harness still evaluates them and records the
// outcome in notes, but they do not fail a suite.
struct ClaimInfo {
  std::string_view statement;
  bool known_discrepancy = false;
};

const std::map<std::string, ClaimInfo>& claim_registry();

bool claim_registered(const std::string& id);

// Throws precondition_error for unregistered ids.
const ClaimInfo& claim_info(const std::string& id);

}  // namespace zbhyp
