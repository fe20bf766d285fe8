#pragma once

#include "zbhyp/errors.hpp"

namespace zbhyp {

// Arguments of 2F1(a,b;c;x) on [0,1]. c must be positive; evaluation at
// x = 1 additionally needs c - a - b > 0 (Gauss summation).
struct HypParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double x = 0.0;
};

enum class Hyp2F1Route { series, zb_near1, gauss_at_1, euler_series };

const char* route_name(Hyp2F1Route r);

struct Hyp2F1Eval {
  double value = 0.0;
  Hyp2F1Route route = Hyp2F1Route::series;
  bool accuracy_warning = false;
};

/// Direct power series, truncated when the next term falls below
/// 1e-16 x |partial sum|; capped at 10000 terms. Throws
/// non_convergence_error if the cap is hit while the term ratio is
/// still >= 1 - 1e-6.
double hyp2f1_series(const HypParams& p);

/// Zero-balanced expansion of 2F1(a,b;a+b;x) in powers of (1-x) with the
/// log(1-x) terms, prefactor 1/B(a,b). Intended for x >= 3/4; requesting
/// x < 1/2 sets *accuracy_warning (the series still converges there).
double hyp2f1_zb_near1(double a, double b, double x,
                       bool* accuracy_warning = nullptr);

/// Dispatcher: direct series for x < 3/4; for x >= 3/4 the zero-balanced
/// expansion when c = a+b, the Gauss closed form when x = 1 and c > a+b,
/// otherwise the Euler transformation followed by the direct series.
Hyp2F1Eval hyp2f1_routed(const HypParams& p);

double hyp2f1(const HypParams& p);

inline double hyp2f1(double a, double b, double c, double x) {
  return hyp2f1(HypParams{a, b, c, x});
}

/// d/dx 2F1(a,b;c;x) via the contiguous relation (ab/c) 2F1(a+1,b+1;c+1;x).
double d_hyp2f1(const HypParams& p);

}  // namespace zbhyp
