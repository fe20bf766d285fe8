#pragma once

#include <string>
#include <vector>

#include "zbhyp/phi_aux.hpp"
#include "zbhyp/report.hpp"

namespace zbhyp {

// Suite configuration. Parameter grid points with a + b > 1 are skipped.
// Loaded from a flat key = value file (# comments); unknown keys are
// configuration errors.
struct HarnessConfig {
  double a_min = 0.1, a_max = 0.5;
  int na = 5;
  double b_min = 0.1, b_max = 0.5;
  int nb = 5;
  int grid_n = 1024;      // abscissa grid for inequality checks
  int classify_n = 256;   // classifier grid size
  int coeff_order = 64;   // series table order for the series suite
  double tol_identity = 1e-9;
  double c_offset = 1e-3;  // band around thresholds in sharpness checks

  static HarnessConfig from_file(const std::string& path);
  void validate() const;
  std::vector<ZbParams> parameter_grid() const;
  std::string describe_grid() const;
};

enum class Suite {
  corollary1,
  corollary2,
  sandwich,
  lemmas,
  thresholds,
  series,
  all
};

Suite suite_from_name(const std::string& name);
const char* suite_name(Suite s);

/// Symmetric-sum bounds for phi at one (a,b,c); requires c >= c(a,b).
/// Also runs the reversed chain at the control point c = R(a,b) - 0.1.
Report verify_corollary1(const ZbParams& p, double c, int n, double tol);

/// Symmetric-sum bounds for f = 1/phi at one (a,b,c); requires
/// c in [delta-, delta+]. Checks the stated upper bound and the derived
/// (concavity) form separately.
Report verify_corollary2(const ZbParams& p, double c, int n, double tol);

/// The three R(x)/B(x) inequality chains on an n-point grid of (0,1).
Report verify_sandwich(int n, double tol);

/// Lemma-level numeric probes (h, Delta, roots, S, A, phi range) at one
/// parameter pair.
Report verify_lemma_probes(const ZbParams& p, int n, double tol);

/// Threshold sharpness, endpoint identities and bundle invariants at one
/// parameter pair.
Report verify_thresholds(const ZbParams& p, const HarnessConfig& cfg);

/// Coefficient positivity, series-vs-closed-form and complete-monotonicity
/// probes (parameter-grid independent).
Report verify_series(const HarnessConfig& cfg);

/// Run one suite (or all) over the configured parameter grid and merge the
/// per-claim reports. Deterministic for a fixed config.
Report run_suite(Suite s, const HarnessConfig& cfg);

}  // namespace zbhyp
