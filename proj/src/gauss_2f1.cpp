#include "zbhyp/gauss_2f1.hpp"

#include <cmath>

#include "zbhyp/scalar_special.hpp"

namespace zbhyp {
namespace {

constexpr int kTermCap = 10000;
constexpr double kRelStop = 1e-16;

bool is_nonpositive_integer(double c) {
  return c <= 0.0 && c == std::floor(c);
}

void validate(const HypParams& p) {
  if (is_nonpositive_integer(p.c))
    throw domain_error("hyp2f1: c must not be a nonpositive integer");
  if (!(p.c > 0.0)) throw domain_error("hyp2f1: requires c > 0");
  if (!(p.x >= 0.0) || !(p.x <= 1.0))
    throw domain_error("hyp2f1: requires x in [0,1]");
}

bool zero_balanced(const HypParams& p) {
  return std::abs(p.c - (p.a + p.b)) <= 1e-13 * (1.0 + std::abs(p.c));
}

}  // namespace

const char* route_name(Hyp2F1Route r) {
  switch (r) {
    case Hyp2F1Route::series: return "series";
    case Hyp2F1Route::zb_near1: return "near-1";
    case Hyp2F1Route::gauss_at_1: return "gauss";
    case Hyp2F1Route::euler_series: return "euler";
  }
  return "?";
}

double hyp2f1_series(const HypParams& p) {
  if (!(p.x >= 0.0) || !(p.x < 1.0))
    throw domain_error("hyp2f1_series: requires 0 <= x < 1");
  double sum = 1.0;
  double term = 1.0;
  double ratio = 0.0;
  for (int n = 0; n < kTermCap; ++n) {
    ratio = (p.a + n) * (p.b + n) / ((p.c + n) * (1.0 + n)) * p.x;
    term *= ratio;
    sum += term;
    if (std::abs(term) < kRelStop * std::abs(sum)) return sum;
  }
  if (std::abs(ratio) >= 1.0 - 1e-6)
    throw non_convergence_error("hyp2f1_series: term cap reached near radius");
  return sum;
}

double hyp2f1_zb_near1(double a, double b, double x, bool* accuracy_warning) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("hyp2f1_zb_near1: requires a, b > 0");
  if (!(x > 0.0) || !(x < 1.0))
    throw domain_error("hyp2f1_zb_near1: requires 0 < x < 1");
  if (accuracy_warning) *accuracy_warning = (x < 0.5);

  const double om = 1.0 - x;
  const double log_term = -std::log(om);
  double r = 1.0;                     // (a)_n (b)_n / (n!)^2
  double psi_part = ramanujan_r(a, b);  // 2 psi(n+1) - psi(a+n) - psi(b+n)
  double w = 1.0;                     // (1-x)^n
  double sum = 0.0;
  for (int n = 0; n < kTermCap; ++n) {
    const double term = r * (psi_part + log_term) * w;
    sum += term;
    if (n > 0 && std::abs(term) < kRelStop * std::abs(sum)) break;
    r *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0));
    psi_part += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n);
    w *= om;
  }
  return sum / beta(a, b);
}

Hyp2F1Eval hyp2f1_routed(const HypParams& p) {
  validate(p);
  Hyp2F1Eval out;
  if (p.x == 0.0 || p.a == 0.0 || p.b == 0.0) {
    // empty sum past n = 0
    out.value = 1.0;
    out.route = Hyp2F1Route::series;
    return out;
  }
  if (p.x < 0.75) {
    out.value = hyp2f1_series(p);
    out.route = Hyp2F1Route::series;
    return out;
  }
  if (zero_balanced(p)) {
    if (p.x == 1.0)
      throw domain_error("hyp2f1: diverges at x = 1 when c = a + b");
    out.value = hyp2f1_zb_near1(p.a, p.b, p.x, &out.accuracy_warning);
    out.route = Hyp2F1Route::zb_near1;
    return out;
  }
  if (p.x == 1.0) {
    if (!(p.c - p.a - p.b > 0.0))
      throw domain_error("hyp2f1: x = 1 requires c - a - b > 0");
    out.value = std::exp(ln_gamma(p.c) + ln_gamma(p.c - p.a - p.b) -
                         ln_gamma(p.c - p.a) - ln_gamma(p.c - p.b));
    out.route = Hyp2F1Route::gauss_at_1;
    return out;
  }
  const double om = 1.0 - p.x;
  out.value = std::pow(om, p.c - p.a - p.b) *
              hyp2f1_series(HypParams{p.c - p.a, p.c - p.b, p.c, p.x});
  out.route = Hyp2F1Route::euler_series;
  return out;
}

double hyp2f1(const HypParams& p) { return hyp2f1_routed(p).value; }

double d_hyp2f1(const HypParams& p) {
  if (!(p.x >= 0.0) || !(p.x < 1.0))
    throw domain_error("d_hyp2f1: requires 0 <= x < 1");
  return p.a * p.b / p.c *
         hyp2f1(HypParams{p.a + 1.0, p.b + 1.0, p.c + 1.0, p.x});
}

}  // namespace zbhyp
