#pragma once

#include "zbhyp/errors.hpp"

namespace zbhyp {

// Euler-Mascheroni constant to full double precision.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;

/// log Gamma(x) for x > 0. Relative error <= 1e-13 on [1e-3, 1e3].
double ln_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0, via upward recurrence to x >= 10
/// followed by the asymptotic series through the 1/x^14 Bernoulli term.
double digamma(double x);

/// psi'(x) for x > 0. Same recurrence/asymptotic scheme as digamma.
double trigamma(double x);

/// B(x,y) = exp(lnGamma(x) + lnGamma(y) - lnGamma(x+y)), x, y > 0.
double beta(double x, double y);

/// Rising factorial x(x+1)...(x+n-1); (x)_0 = 1.
double pochhammer(double x, int n);

/// R(a,b) = -2*gamma - psi(a) - psi(b), a, b > 0.
double ramanujan_r(double a, double b);

// The four Dirichlet-type constants of order n:
//   lambda(n) = sum 1/(2k+1)^n        (k >= 0, n >= 2)
//   beta(n)   = sum (-1)^k/(2k+1)^n   (k >= 0, n >= 1)
//   eta(n)    = sum (-1)^(k-1)/k^n    (k >= 1, n >= 1)
//   zeta(n)   = sum 1/k^n             (k >= 1, n >= 2)
struct DirichletConstants {
  int order = 0;
  double lambda_n = 0.0;
  double beta_n = 0.0;
  double eta_n = 0.0;
  double zeta_n = 0.0;
};

/// All four constants of order n, each accurate to <= 1e-14 relative.
/// For n == 1, lambda and zeta diverge and are reported as +infinity.
DirichletConstants dirichlet_constants(int n);

/// Scalar accessors. The divergent orders lambda(1), zeta(1) throw.
double dirichlet_lambda(int n);
double dirichlet_beta(int n);
double dirichlet_eta(int n);
double riemann_zeta(int n);

/// lambda(n) - 1 and 1 - beta(n) without the cancellation of forming the
/// constant first; both are sums of terms of magnitude 3^-n and below, so
/// they stay fully accurate deep into the regime where lambda(n), beta(n)
/// round to 1.0.
double dirichlet_lambda_excess(int n);
double dirichlet_beta_deficit(int n);

}  // namespace zbhyp
