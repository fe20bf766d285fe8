#include "zbhyp/phi_aux.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zbhyp/gauss_2f1.hpp"
#include "zbhyp/scalar_special.hpp"

namespace zbhyp {
namespace {

constexpr double kNearOneBand = 1e-6;  // phi_plus switches to interpolation

}  // namespace

ZbParams::ZbParams(double a_, double b_) : a(a_), b(b_) {
  if (!(a >= 0.0) || !(b >= 0.0))
    throw domain_error("ZbParams: requires a >= 0 and b >= 0");
}

void ZbParams::require_positive(const char* who) const {
  if (degenerate())
    throw domain_error(std::string(who) + ": undefined for a = 0 or b = 0");
}

void ZbParams::require_theorem_domain(const char* who) const {
  if (!zero_balanced_theorem_domain())
    throw precondition_error(std::string(who) + ": requires a + b <= 1");
}

double phi(const ZbParams& p, double c, double x) {
  if (!(x > 0.0) || !(x < 1.0)) throw domain_error("phi: requires x in (0,1)");
  const double num = c - std::log1p(-x);
  if (p.degenerate()) return num;
  return num / hyp2f1(p.a, p.b, p.a + p.b, x);
}

double f_ratio(const ZbParams& p, double c, double x) {
  if (!(c > 0.0)) throw domain_error("f_ratio: requires c > 0");
  if (!(x >= 0.0) || !(x < 1.0))
    throw domain_error("f_ratio: requires x in [0,1)");
  const double den = c - std::log1p(-x);
  const double F = p.degenerate() ? 1.0 : hyp2f1(p.a, p.b, p.a + p.b, x);
  return F / den;
}

AuxEval aux_eval(const ZbParams& p, double x) {
  p.require_positive("aux_eval");
  if (!(x >= 0.0) || !(x < 1.0))
    throw domain_error("aux_eval: requires x in [0,1)");
  const double a = p.a, b = p.b;
  const double s = a + b, pr = a * b;
  const double u = pr / s;
  const double q = pr * pr / (s * (s + 1.0));

  AuxEval out;
  out.x = x;
  out.F = hyp2f1(a, b, s, x);
  if (x >= 0.75) {
    // F2 is itself zero balanced in (a+1, b+1); F1 then follows from the
    // contiguous relation F = F1 + (ab x/(s(s+1))) F2, which stays accurate
    // where the direct series for F1 would truncate at the term cap.
    out.F2 = hyp2f1_zb_near1(a + 1.0, b + 1.0, x);
    out.F1 = out.F - (pr * x / (s * (s + 1.0))) * out.F2;
  } else {
    out.F1 = hyp2f1(a, b, s + 1.0, x);
    out.F2 = hyp2f1(a + 1.0, b + 1.0, s + 2.0, x);
  }
  out.h = q * (1.0 - x) * out.F2 + u * out.F1;
  out.g = -(2.0 * u * out.F1 + out.F);
  double delta = out.g * out.g - 8.0 * out.h * out.F;
  if (delta < 0.0) {
    // Delta(0) = 0 at a = b = 1/2; rounding may put tiny x barely below zero.
    const double scale =
        std::max(out.g * out.g, std::abs(8.0 * out.h * out.F));
    if (delta > -1e-12 * scale)
      delta = 0.0;
    else
      throw domain_error("aux_eval: negative discriminant");
  }
  out.delta = delta;
  const double root = std::sqrt(delta);
  out.omega_plus = (-out.g + root) / (2.0 * out.h);
  // Vieta product form avoids the cancellation of -g - sqrt(delta) near x=1.
  out.omega_minus = 2.0 * out.F / (out.h * out.omega_plus);
  const double log_term = std::log1p(-x);
  out.phi_plus = log_term + out.omega_plus;
  out.phi_minus = log_term + out.omega_minus;
  return out;
}

double phi_plus_extended(const ZbParams& p, double x) {
  p.require_positive("phi_plus_extended");
  if (!(x >= 0.0) || !(x <= 1.0))
    throw domain_error("phi_plus_extended: requires x in [0,1]");
  const double r = ramanujan_r(p.a, p.b);
  if (x == 1.0) return r;
  if (x > 1.0 - kNearOneBand) {
    const double x0 = 1.0 - kNearOneBand;
    const double f0 = aux_eval(p, x0).phi_plus;
    return f0 + (x - x0) / (1.0 - x0) * (r - f0);
  }
  return aux_eval(p, x).phi_plus;
}

double c_threshold(const ZbParams& p) {
  p.require_positive("c_threshold");
  const double s = p.a + p.b, pr = p.a * p.b;
  return s * (s - 2.0 * pr) * (s + 1.0) /
         (pr * ((s + 1.0) * (s - 2.0 * pr) + pr * s));
}

double psi_big(const ZbParams& p, double c, double x) {
  const AuxEval e = aux_eval(p, x);
  const double d = c - std::log1p(-x);
  return e.h * d * d + e.g * d + 2.0 * e.F;
}

double f_second_deriv(const ZbParams& p, double c, double x) {
  const double d = c - std::log1p(-x);
  const double om = 1.0 - x;
  return psi_big(p, c, x) / (om * om * d * d * d);
}

double phi_second_deriv0(const ZbParams& p, double c) {
  p.require_positive("phi_second_deriv0");
  const double s = p.a + p.b, pr = p.a * p.b;
  return (s - 2.0 * pr) / s -
         c * pr * ((s + 1.0) * (s - 2.0 * pr) + pr * s) /
             (s * s * (s + 1.0));
}

double s_poly(const ZbParams& p, double c) {
  const double s = p.a + p.b, pr = p.a * p.b;
  if (s == 0.0) return 1.0;
  return 1.0 - pr * pr / ((s + 1.0) * s) -
         c * pr * (p.a + 1.0) * (p.b + 1.0) * (s + pr + 2.0) /
             (s * (s + 1.0) * (s + 2.0));
}

}  // namespace zbhyp
