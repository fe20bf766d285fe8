#pragma once

#include "zbhyp/errors.hpp"

namespace zbhyp {

// Parameter pair (a,b) of the zero-balanced family. The convexity and
// concavity characterizations of phi_{a,b,c} and its reciprocal hold for
// a + b <= 1; thresholds built on R(a,b) additionally need a, b > 0.
struct ZbParams {
  double a = 0.0;
  double b = 0.0;

  ZbParams(double a_, double b_);

  bool zero_balanced_theorem_domain() const { return a + b <= 1.0; }
  bool degenerate() const { return a == 0.0 || b == 0.0; }
  void require_positive(const char* who) const;
  void require_theorem_domain(const char* who) const;
};

// Everything the quadratic auxiliary system yields at one abscissa:
//   F  = 2F1(a,b;a+b;x)      F1 = 2F1(a,b;a+b+1;x)   F2 = 2F1(a+1,b+1;a+b+2;x)
//   h, g as below, delta = g^2 - 8 h F,
//   omega_pm the roots of h t^2 + g t + 2F = 0,
//   phi_pm = log(1-x) + omega_pm.
struct AuxEval {
  double x = 0.0;
  double F = 0.0, F1 = 0.0, F2 = 0.0;
  double h = 0.0, g = 0.0, delta = 0.0;
  double omega_minus = 0.0, omega_plus = 0.0;
  double phi_minus = 0.0, phi_plus = 0.0;
};

/// phi_{a,b,c}(x) = (c - log(1-x)) / 2F1(a,b;a+b;x) on (0,1).
/// Degenerates to c - log(1-x) when a = 0 or b = 0.
double phi(const ZbParams& p, double c, double x);

/// f_{a,b,c}(x) = 2F1(a,b;a+b;x) / (c - log(1-x)) on [0,1); requires c > 0.
double f_ratio(const ZbParams& p, double c, double x);

/// Populate the full auxiliary system at x in [0,1). Requires a, b > 0.
AuxEval aux_eval(const ZbParams& p, double x);

/// phi_plus on [0,1]: the endpoint value at x = 1 is R(a,b) exactly; for
/// x > 1 - 1e-6 the value is linearly interpolated between the last stable
/// evaluation and R(a,b).
double phi_plus_extended(const ZbParams& p, double x);

/// Closed-form convexity threshold
/// c(a,b) = (a+b)(a+b-2ab)(a+b+1) / (ab((a+b+1)(a+b-2ab)+ab(a+b))).
double c_threshold(const ZbParams& p);

/// Psi(x) = h(x) D^2 + g(x) D + 2 F(x) with D = c - log(1-x); the numerator
/// of the closed form of f''.
double psi_big(const ZbParams& p, double c, double x);

/// f''_{a,b,c}(x) = Psi(x) / ((1-x)^2 (c - log(1-x))^3).
double f_second_deriv(const ZbParams& p, double c, double x);

/// phi''(0) = (a+b-2ab)/(a+b)
///          - c ab ((a+b+1)(a+b-2ab) + ab(a+b)) / ((a+b)^2 (a+b+1)),
/// the variant whose root in c equals c_threshold.
double phi_second_deriv0(const ZbParams& p, double c);

/// S(a,b,c) = 1 - (ab)^2/((a+b+1)(a+b))
///          - c ab(a+1)(b+1)(a+b+ab+2) / ((a+b)(a+b+1)(a+b+2)), affine in c.
double s_poly(const ZbParams& p, double c);

}  // namespace zbhyp
