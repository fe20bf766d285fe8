#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zbhyp/errors.hpp"

namespace zbhyp {

enum class CoeffFamily { R_series, B_series, f_final_b, g_final_d, H_gamma };

const char* family_name(CoeffFamily f);
CoeffFamily family_from_name(const std::string& name);

// Indexed series coefficients with sign verdicts. The expansion variable is
// (1-2x)^2 for the first four families and (1/2 - x) for H_gamma. A sign
// verdict of 0 means |value| <= 1e-14 * max(1, |values[0]|).
struct CoeffTable {
  CoeffFamily family = CoeffFamily::R_series;
  int order = 0;                // max index N; values has N+1 entries
  std::vector<double> values;
  std::vector<int> signs;       // +1 / -1 / 0
  bool all_nonnegative = true;

  std::string to_csv() const;   // columns: index,value,sign
  nlohmann::ordered_json to_json() const;
};

/// Coefficients of R(x) = R(x,1-x) and B(x) = B(x,1-x) in powers of
/// (1-2x)^2: R has constant term log 16 and then 4 lambda(2n+1); B has
/// 4 beta(2n+1). Requires N <= 200.
std::pair<CoeffTable, CoeffTable> coeffs_R_B(int N);

/// b_n coefficients of f(x) = (1+x(1-x)-(x(1-x))^2) B(x) - R(x), assembled
/// from the re-derived quartic weight polynomial; indices >= 2 are computed
/// in deficit form so the geometric decay survives double rounding.
CoeffTable coeffs_f_final(int N);

/// d_n coefficients of g(x) = R(x) - B(x)/(1+x(1-x)); d_0 = log16 - (16/5)beta(1),
/// d_n = 4(lambda(2n+1) - (4/5) c_n) with c_n = sum beta(2m+1)/5^(n-m),
/// computed in deficit form (a sum of positive terms).
CoeffTable coeffs_g_final(int N);

/// gamma_n coefficients of H(x) = Gamma(3/2-x)Gamma(1/2+x)/x + psi(x)
/// - psi(1/2+x) in powers of (1/2-x).
CoeffTable coeffs_H_gamma(int N);

CoeffTable coeffs_family(CoeffFamily f, int N);

/// Evaluate a table's truncated series at x in (0,1).
double eval_series(const CoeffTable& t, double x);

/// Quartic weight 1 + x(1-x) - (x(1-x))^2 as coefficients of
/// t = (1-2x)^2, re-derived by polynomial arithmetic from x(1-x) = (1-t)/4.
std::array<double, 3> quartic_weight_coeffs();

/// Closed forms the truncated series are checked against.
double f_closed_form(double x);  // (1+u-u^2) B(x,1-x) - R(x,1-x), u = x(1-x)
double g_closed_form(double x);  // R(x,1-x) - B(x,1-x)/(1+u)

/// F(x) = B(1/2+x,3/2-x)/(x(1-x)) + R(1/2+x,3/2-x) - R(x,1-x) on (0,1).
double eval_F_pro1(double x);

/// H_b(x) = B(x,b) - R(x,b); its derivative (analytic, via trigamma);
/// G_b(x) = B(x,b) - 1/x;
/// f_b(x) = (1/x + 1/b) B(1/2+x,1/2+b) + R(1/2+x,1/2+b) - R(x,b).
double eval_H_b(double b, double x);
double eval_H_b_prime(double b, double x);
double eval_G_b(double b, double x);
double eval_f_b(double b, double x);

enum class CmTarget { H_b_prime, G_b, F_pro1, f_b };

struct CmOrderResult {
  int order = 0;
  bool pass = false;
  double worst_margin = 0.0;  // min over the grid of (-1)^m f^(m)
  double worst_x = 0.0;
};

/// Complete-monotonicity probe: for each derivative order m <= orders
/// (orders <= 4), checks sign of (-1)^m times the m-th Richardson-
/// extrapolated central difference at every grid point. Throws
/// step_underflow_error if adjacent grid points are closer than 100x the
/// 1e-3 base step.
std::vector<CmOrderResult> cm_probe(CmTarget target, double b, int orders,
                                    std::span<const double> grid);

/// m-th derivative probe of an arbitrary callable (used by the harness for
/// the f/g series closed forms). dist_to_singularity bounds the step.
double richardson_derivative(const std::function<double(double)>& f, double x,
                             int m, double dist_to_singularity);

/// Taylor-coefficient oracle for b_1: numerical second derivative of
/// f((1-u)/2) in u at u = 0, Richardson-extrapolated.
double b1_taylor_oracle();

}  // namespace zbhyp
