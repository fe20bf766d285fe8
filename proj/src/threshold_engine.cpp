#include "zbhyp/threshold_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "zbhyp/gauss_2f1.hpp"
#include "zbhyp/scalar_special.hpp"

namespace zbhyp {
namespace {

constexpr double kGoldenXTol = 1e-10;
constexpr double kGridMargin = 1e-4;
constexpr double kTailStart = 1e-7;
constexpr double kSignTol = 1e-9;  // weak-sign tolerance for strictness tests

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > kGoldenXTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return std::max(fc, fd);
}

// Scan values vs[i] at xs[i]; refine the best interior bracket (sign = +1
// for a maximum, -1 for a minimum). A best point at the scan boundary is
// the extremum itself.
double refine_extremum(const std::vector<double>& xs,
                       const std::vector<double>& vs,
                       const std::function<double(double)>& f, double sign) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (sign * vs[i] > sign * vs[best]) best = i;
  if (best == 0 || best + 1 == vs.size()) return vs[best];
  const double v = golden_section_max(
      [&](double x) { return sign * f(x); }, xs[best - 1], xs[best + 1]);
  return sign * v;
}

std::vector<double> uniform_grid(int n, double lo, double hi) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / double(n - 1);
  return xs;
}

// Uniform interior grid plus geometric tails toward both endpoints.
std::vector<double> sign_test_grid(int n) {
  std::set<double> pts;
  for (double x : uniform_grid(n, kGridMargin, 1.0 - kGridMargin))
    pts.insert(x);
  for (double t = kTailStart; t < 0.05; t *= 2.0) {
    pts.insert(t);
    pts.insert(1.0 - t);
  }
  return {pts.begin(), pts.end()};
}

// phi'' by central second difference with one Richardson extrapolation;
// the step shrinks near the interval ends so the stencil stays in (0,1).
double phi_second_fd(const ZbParams& p, double c, double x) {
  const double h0 = std::min({1e-3, 0.25 * x, 0.25 * (1.0 - x)});
  const auto d2 = [&](double h) {
    return (phi(p, c, x + h) - 2.0 * phi(p, c, x) + phi(p, c, x - h)) /
           (h * h);
  };
  return (4.0 * d2(h0 / 2) - d2(h0)) / 3.0;
}

Monotonicity first_difference_verdict(const std::vector<double>& xs,
                                      const std::vector<double>& vs) {
  bool up = false, down = false;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double d = vs[i] - vs[i - 1];
    const double tol = kSignTol * std::max(1.0, std::abs(vs[i]));
    if (d > tol) up = true;
    if (d < -tol) down = true;
  }
  if (up && !down) return Monotonicity::increasing;
  if (down && !up) return Monotonicity::decreasing;
  return Monotonicity::neither;
}

}  // namespace

const char* to_string(Curvature v) {
  switch (v) {
    case Curvature::convex: return "convex";
    case Curvature::concave: return "concave";
    case Curvature::neither: return "neither";
  }
  return "?";
}

const char* to_string(Monotonicity v) {
  switch (v) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::neither: return "neither";
  }
  return "?";
}

PhiExtrema extrema_phi_pm(const ZbParams& p, int scan_points) {
  p.require_positive("extrema_phi_pm");
  p.require_theorem_domain("extrema_phi_pm");
  if (scan_points < 16)
    throw precondition_error("extrema_phi_pm: scan_points too small");

  const auto fp = [&](double x) { return phi_plus_extended(p, x); };
  const auto fm = [&](double x) {
    return aux_eval(p, std::min(x, 1.0 - 1e-6)).phi_minus;
  };

  const auto xs_p = uniform_grid(scan_points, 0.0, 1.0);
  std::vector<double> vp(xs_p.size());
  for (std::size_t i = 0; i < xs_p.size(); ++i) vp[i] = fp(xs_p[i]);

  const auto xs_m = uniform_grid(scan_points, 0.0, 1.0 - 1e-6);
  std::vector<double> vm(xs_m.size());
  for (std::size_t i = 0; i < xs_m.size(); ++i) vm[i] = fm(xs_m[i]);

  PhiExtrema out;
  out.alpha0 = refine_extremum(xs_p, vp, fp, +1.0);
  out.delta_plus = refine_extremum(xs_p, vp, fp, -1.0);
  out.delta_minus = refine_extremum(xs_m, vm, fm, +1.0);
  return out;
}

ThresholdBundle thresholds(const ZbParams& p) {
  if (p.degenerate())
    throw domain_error(
        "thresholds: R(a,b) and c(a,b) are undefined for a = 0 or b = 0");
  ThresholdBundle out;
  out.r = ramanujan_r(p.a, p.b);
  out.inv_sum = 1.0 / p.a + 1.0 / p.b;
  out.c_ab = c_threshold(p);
  out.g_ratio_up = (out.r - ramanujan_r(p.a + 0.5, p.b + 0.5)) /
                   beta(p.a + 0.5, p.b + 0.5);
  const PhiExtrema e = extrema_phi_pm(p);
  out.alpha0 = e.alpha0;
  out.delta_minus = e.delta_minus;
  out.delta_plus = e.delta_plus;
  return out;
}

CurvatureVerdict classify_curvature(const ZbParams& p, double c,
                                    CurvatureTarget target, int n) {
  if (n < 64) throw precondition_error("classify_curvature: requires n >= 64");
  p.require_positive("classify_curvature");

  CurvatureVerdict out;
  bool has_pos = false, has_neg = false;
  double min_s = std::numeric_limits<double>::infinity();
  double max_s = -std::numeric_limits<double>::infinity();
  std::optional<double> first_pos, first_neg;
  for (double x : uniform_grid(n, kGridMargin, 1.0 - kGridMargin)) {
    const double v = target == CurvatureTarget::f_ratio
                         ? f_second_deriv(p, c, x)
                         : phi_second_fd(p, c, x);
    min_s = std::min(min_s, v);
    max_s = std::max(max_s, v);
    const double tol = kSignTol * std::max(1.0, std::abs(v));
    if (v > tol) {
      has_pos = true;
      if (!first_pos) first_pos = x;
    }
    if (v < -tol) {
      has_neg = true;
      if (!first_neg) first_neg = x;
    }
  }
  out.min_second = min_s;
  out.max_second = max_s;
  if (has_pos && has_neg) {
    out.verdict = Curvature::neither;
    // witness: where the minority sign shows up
    out.witness = *first_pos < *first_neg ? first_neg : first_pos;
  } else if (has_neg) {
    out.verdict = Curvature::concave;
  } else {
    out.verdict = Curvature::convex;
  }
  return out;
}

Monotonicity classify_monotonicity(const ZbParams& p, double c, int n) {
  if (n < 64)
    throw precondition_error("classify_monotonicity: requires n >= 64");
  p.require_positive("classify_monotonicity");
  const auto xs = sign_test_grid(n);
  std::vector<double> vs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) vs[i] = phi(p, c, xs[i]);
  return first_difference_verdict(xs, vs);
}

Monotonicity classify_g_ratio(const ZbParams& p, double c, int n) {
  if (n < 64) throw precondition_error("classify_g_ratio: requires n >= 64");
  p.require_positive("classify_g_ratio");
  p.require_theorem_domain("classify_g_ratio");
  const double a = std::min(p.a, p.b);  // G is symmetric in (a,b)
  const double b = std::max(p.a, p.b);
  const auto xs = sign_test_grid(n);
  std::vector<double> vs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double num = c + x * hyp2f1(a + 0.5, b + 0.5, a + b + 1.0, x);
    vs[i] = num / hyp2f1(a, b, a + b, x);
  }
  return first_difference_verdict(xs, vs);
}

}  // namespace zbhyp
