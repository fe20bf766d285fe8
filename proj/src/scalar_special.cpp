#include "zbhyp/scalar_special.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace zbhyp {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Bernoulli-number coefficients of the asymptotic series.
// ln Gamma: sum B_2n / (2n(2n-1) x^(2n-1))
constexpr double kLnGammaAsym[7] = {
    1.0 / 12,  -1.0 / 360,       1.0 / 1260, -1.0 / 1680,
    1.0 / 1188, -691.0 / 360360, 7.0 / 1092};
// digamma: sum B_2n / (2n x^2n)
constexpr double kDigammaAsym[7] = {
    1.0 / 12,  -1.0 / 120,      1.0 / 252, -1.0 / 240,
    1.0 / 132, -691.0 / 32760,  1.0 / 12};
// trigamma: sum B_2n / x^(2n+1)
constexpr double kTrigammaAsym[7] = {
    1.0 / 6,  -1.0 / 30,       1.0 / 42, -1.0 / 30,
    5.0 / 66, -691.0 / 2730,   7.0 / 6};

struct KahanSum {
  double s = 0.0;
  double c = 0.0;
  void add(double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// sum_{k>=0} (x0 + step*k)^(-s): direct summation until the term drops
// below 1e-18 (capped), then an Euler-Maclaurin tail correction.
double power_tail(double s, double x0, double step) {
  KahanSum sum;
  int k = 0;
  const int cap = 20000;
  while (k < cap) {
    const double t = std::pow(x0 + step * k, -s);
    sum.add(t);
    ++k;
    if (t < 1e-18) break;
  }
  const double y = x0 + step * k;
  const double f0 = std::pow(y, -s);
  const double integral = std::pow(y, 1.0 - s) / (step * (s - 1.0));
  const double f1 = -s * step * std::pow(y, -s - 1.0);
  const double f3 =
      -s * (s + 1.0) * (s + 2.0) * step * step * step * std::pow(y, -s - 3.0);
  const double f5 = -s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) *
                    std::pow(step, 5) * std::pow(y, -s - 5.0);
  sum.add(integral);
  sum.add(0.5 * f0);
  sum.add(-f1 / 12.0);
  sum.add(f3 / 720.0);
  sum.add(-f5 / 30240.0);
  return sum.value();
}

// sum_{k>=0} (-1)^k (x0 + step*k)^(-s): direct head, then the Euler
// transform of the tail (forward-difference table, weights 1/2^(m+1)).
double alternating_power_sum(double s, double x0, double step) {
  const int head = 60;
  const int diffs = 40;
  KahanSum sum;
  double sign = 1.0;
  for (int k = 0; k < head; ++k) {
    sum.add(sign * std::pow(x0 + step * k, -s));
    sign = -sign;
  }
  std::vector<double> d(diffs + 1);
  for (int j = 0; j <= diffs; ++j) d[j] = std::pow(x0 + step * (head + j), -s);
  double corr = 0.0;
  double half = 0.5;
  double msign = 1.0;
  for (int m = 0; m <= diffs; ++m) {
    corr += msign * half * d[0];
    half *= 0.5;
    msign = -msign;
    for (int j = 0; j + m < diffs; ++j) d[j] = d[j + 1] - d[j];
  }
  // head is even, so the tail starts with a + term
  sum.add(corr);
  return sum.value();
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("ln_gamma: requires x > 0");
  double shift = 0.0;
  while (x < 12.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = (x - 0.5) * std::log(x) - x + kHalfLog2Pi;
  double p = inv;
  for (double c : kLnGammaAsym) {
    s += c * p;
    p *= inv2;
  }
  return s + shift;
}

double digamma(double x) {
  if (!(x > 0.0)) throw domain_error("digamma: requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = std::log(x) - 0.5 * inv;
  double p = inv2;
  for (double c : kDigammaAsym) {
    s -= c * p;
    p *= inv2;
  }
  return s + shift;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw domain_error("trigamma: requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = inv + 0.5 * inv2;
  double p = inv * inv2;
  for (double c : kTrigammaAsym) {
    s += c * p;
    p *= inv2;
  }
  return s + shift;
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw domain_error("beta: requires x, y > 0");
  return std::exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y));
}

double pochhammer(double x, int n) {
  if (n < 0) throw domain_error("pochhammer: requires n >= 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= x + k;
  return p;
}

double ramanujan_r(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("ramanujan_r: requires a, b > 0");
  return -2.0 * kEulerGamma - digamma(a) - digamma(b);
}

DirichletConstants dirichlet_constants(int n) {
  if (n < 1) throw domain_error("dirichlet_constants: requires n >= 1");
  DirichletConstants out;
  out.order = n;
  const double s = n;
  out.beta_n = alternating_power_sum(s, 1.0, 2.0);
  out.eta_n = alternating_power_sum(s, 1.0, 1.0);
  if (n == 1) {
    out.lambda_n = std::numeric_limits<double>::infinity();
    out.zeta_n = std::numeric_limits<double>::infinity();
  } else {
    out.lambda_n = power_tail(s, 1.0, 2.0);
    out.zeta_n = power_tail(s, 1.0, 1.0);
  }
  return out;
}

double dirichlet_lambda(int n) {
  if (n == 1) throw divergence_error("lambda(1) diverges");
  return dirichlet_constants(n).lambda_n;
}

double dirichlet_beta(int n) { return dirichlet_constants(n).beta_n; }

double dirichlet_eta(int n) { return dirichlet_constants(n).eta_n; }

double riemann_zeta(int n) {
  if (n == 1) throw divergence_error("zeta(1) diverges");
  return dirichlet_constants(n).zeta_n;
}

double dirichlet_lambda_excess(int n) {
  if (n == 1) throw divergence_error("lambda(1) diverges");
  return power_tail(double(n), 3.0, 2.0);
}

double dirichlet_beta_deficit(int n) {
  if (n < 1) throw domain_error("dirichlet_beta_deficit: requires n >= 1");
  return alternating_power_sum(double(n), 3.0, 2.0);
}

}  // namespace zbhyp
