#pragma once

#include <optional>

#include "zbhyp/phi_aux.hpp"

namespace zbhyp {

// The seven thresholds attached to one parameter pair:
//   r        = R(a,b)                      (convexity bound for phi)
//   inv_sum  = 1/a + 1/b                   (monotonicity bound for phi)
//   c_ab     = c(a,b)                      (concavity bound for phi)
//   alpha0   = max phi_plus on [0,1]       (convexity bound for 1/phi)
//   delta_-  = max phi_minus, delta_+ = min phi_plus (concavity band for 1/phi)
//   g_ratio_up = (R(a,b) - R(a+1/2,b+1/2)) / B(a+1/2,b+1/2)
struct ThresholdBundle {
  double r = 0.0;
  double inv_sum = 0.0;
  double c_ab = 0.0;
  double alpha0 = 0.0;
  double delta_minus = 0.0;
  double delta_plus = 0.0;
  double g_ratio_up = 0.0;
};

struct PhiExtrema {
  double alpha0 = 0.0;
  double delta_minus = 0.0;
  double delta_plus = 0.0;
};

/// Extrema of phi_plus (over [0,1], endpoint value R included) and of
/// phi_minus (over [0, 1-1e-6]): coarse scan on scan_points abscissae,
/// then golden-section refinement of any interior bracket to x-tolerance
/// 1e-10; extrema at scan boundaries are taken as the endpoint values.
PhiExtrema extrema_phi_pm(const ZbParams& p, int scan_points = 4096);

ThresholdBundle thresholds(const ZbParams& p);

enum class Curvature { convex, concave, neither };
enum class Monotonicity { increasing, decreasing, neither };
enum class CurvatureTarget { phi, f_ratio };

const char* to_string(Curvature v);
const char* to_string(Monotonicity v);

struct CurvatureVerdict {
  Curvature verdict = Curvature::neither;
  std::optional<double> witness;  // present iff verdict == neither
  double min_second = 0.0;
  double max_second = 0.0;
};

/// Sign test of the second derivative on n points of
/// (1e-4, 1-1e-4): analytic (via Psi) for f_ratio, Richardson-extrapolated
/// central differences for phi. Requires n >= 64.
CurvatureVerdict classify_curvature(const ZbParams& p, double c,
                                    CurvatureTarget target, int n);

/// First-difference sign test of phi on n uniform points of
/// (1e-4, 1-1e-4) plus geometric tails toward both endpoints (down to
/// 1e-7), which resolve the monotonicity flips that happen within
/// ~1e-5 of an endpoint when c sits near a threshold. Requires n >= 64.
Monotonicity classify_monotonicity(const ZbParams& p, double c, int n);

/// Same first-difference test for
/// G_{a,b,c}(x) = (c + x 2F1(a+1/2,b+1/2;a+b+1;x)) / 2F1(a,b;a+b;x),
/// normalized to a <= b via the symmetry G(a,b) = G(b,a).
Monotonicity classify_g_ratio(const ZbParams& p, double c, int n);

}  // namespace zbhyp
