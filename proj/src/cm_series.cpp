#include "zbhyp/cm_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "zbhyp/scalar_special.hpp"

namespace zbhyp {
namespace {

constexpr int kOrderCap = 200;
constexpr double kLog16 = 2.7725887222397812376689284858327;

void check_order(int N) {
  if (N < 0 || N > kOrderCap)
    throw precondition_error("coeff table: requires 0 <= N <= 200");
}

void finish(CoeffTable& t) {
  const double tol = 1e-14 * std::max(1.0, std::abs(t.values.empty()
                                                        ? 0.0
                                                        : t.values[0]));
  t.signs.resize(t.values.size());
  t.all_nonnegative = true;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (std::abs(t.values[i]) <= tol)
      t.signs[i] = 0;
    else
      t.signs[i] = t.values[i] > 0.0 ? 1 : -1;
    if (t.values[i] < -tol) t.all_nonnegative = false;
  }
}

// Per-order base steps for the finite-difference probes. 1e-3 is fine for
// values and first differences; orders 3 and 4 sit below the double-
// precision noise floor at that step and need a wider stencil.
constexpr double kBaseStep[5] = {1e-3, 1e-3, 2e-3, 1e-2, 4e-2};

double central_difference(const std::function<double(double)>& f, double x,
                          int m, double h) {
  switch (m) {
    case 0:
      return f(x);
    case 1:
      return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2:
      return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) /
             (2.0 * h * h * h);
    case 4:
      return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) +
              f(x - 2 * h)) /
             (h * h * h * h);
    default:
      throw precondition_error("central_difference: order must be <= 4");
  }
}

}  // namespace

const char* family_name(CoeffFamily f) {
  switch (f) {
    case CoeffFamily::R_series: return "R_series";
    case CoeffFamily::B_series: return "B_series";
    case CoeffFamily::f_final_b: return "f_final_b";
    case CoeffFamily::g_final_d: return "g_final_d";
    case CoeffFamily::H_gamma: return "H_gamma";
  }
  return "?";
}

CoeffFamily family_from_name(const std::string& name) {
  for (CoeffFamily f :
       {CoeffFamily::R_series, CoeffFamily::B_series, CoeffFamily::f_final_b,
        CoeffFamily::g_final_d, CoeffFamily::H_gamma})
    if (name == family_name(f)) return f;
  throw precondition_error("unknown coefficient family: " + name);
}

std::string CoeffTable::to_csv() const {
  std::string out = "index,value,sign\n";
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%s\n", i, values[i],
                  signs[i] > 0 ? "+" : (signs[i] < 0 ? "-" : "0"));
    out += buf;
  }
  return out;
}

nlohmann::ordered_json CoeffTable::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  j["order"] = order;
  j["values"] = values;
  auto sig = nlohmann::ordered_json::array();
  for (int s : signs) sig.push_back(s > 0 ? "+" : (s < 0 ? "-" : "0"));
  j["signs"] = sig;
  j["all_nonnegative"] = all_nonnegative;
  return j;
}

std::pair<CoeffTable, CoeffTable> coeffs_R_B(int N) {
  check_order(N);
  CoeffTable r, b;
  r.family = CoeffFamily::R_series;
  b.family = CoeffFamily::B_series;
  r.order = b.order = N;
  r.values.resize(N + 1);
  b.values.resize(N + 1);
  r.values[0] = kLog16;
  b.values[0] = 4.0 * dirichlet_beta(1);
  for (int n = 1; n <= N; ++n) {
    r.values[n] = 4.0 * dirichlet_lambda(2 * n + 1);
    b.values[n] = 4.0 * dirichlet_beta(2 * n + 1);
  }
  finish(r);
  finish(b);
  return {r, b};
}

std::array<double, 3> quartic_weight_coeffs() {
  // u = x(1-x) = (1 - t)/4 with t = (1-2x)^2; weight = 1 + u - u^2.
  const std::array<double, 2> u = {0.25, -0.25};
  std::array<double, 3> u2{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) u2[i + j] += u[i] * u[j];
  std::array<double, 3> w = {1.0, 0.0, 0.0};
  for (int i = 0; i < 2; ++i) w[i] += u[i];
  for (int i = 0; i < 3; ++i) w[i] -= u2[i];
  return w;  // {19/16, -1/8, -1/16}
}

CoeffTable coeffs_f_final(int N) {
  check_order(N);
  const auto w = quartic_weight_coeffs();
  CoeffTable t;
  t.family = CoeffFamily::f_final_b;
  t.order = N;
  t.values.resize(N + 1);
  // b_0, b_1 directly from the assembly (O(1) magnitudes).
  t.values[0] = 4.0 * w[0] * dirichlet_beta(1) - kLog16;
  if (N >= 1)
    t.values[1] = 4.0 * (w[0] * dirichlet_beta(3) + w[1] * dirichlet_beta(1)) -
                  4.0 * dirichlet_lambda(3);
  // For n >= 2 the weight coefficients sum to exactly 1, so the 1's of
  // beta and lambda cancel identically and the deficit form keeps full
  // relative accuracy down to b_n ~ 9^-n.
  for (int n = 2; n <= N; ++n) {
    const double v = -4.0 * (w[0] * dirichlet_beta_deficit(2 * n + 1) +
                             w[1] * dirichlet_beta_deficit(2 * n - 1) +
                             w[2] * dirichlet_beta_deficit(2 * n - 3)) -
                     4.0 * dirichlet_lambda_excess(2 * n + 1);
    t.values[n] = v;
  }
  finish(t);
  return t;
}

CoeffTable coeffs_g_final(int N) {
  check_order(N);
  CoeffTable t;
  t.family = CoeffFamily::g_final_d;
  t.order = N;
  t.values.resize(N + 1);
  t.values[0] = kLog16 - 3.2 * dirichlet_beta(1);
  for (int n = 1; n <= N; ++n) {
    // d_n = 4(lambda(2n+1) - 1) + (16/5)(5/4 - c_n), all terms positive:
    // 5/4 - c_n = (5/4) 5^-(n+1) + sum_m (1 - beta(2m+1)) 5^(m-n).
    double gap = 1.25 * std::pow(5.0, -(n + 1));
    double p = std::pow(5.0, -n);
    for (int m = 0; m <= n; ++m) {
      gap += dirichlet_beta_deficit(2 * m + 1) * p;
      p *= 5.0;
    }
    t.values[n] = 4.0 * dirichlet_lambda_excess(2 * n + 1) + 3.2 * gap;
  }
  finish(t);
  return t;
}

CoeffTable coeffs_H_gamma(int N) {
  check_order(N);
  CoeffTable t;
  t.family = CoeffFamily::H_gamma;
  t.order = N;
  t.values.resize(N + 1);
  // gamma_n = alpha_n - 2^(n+1) eta(n+1) with
  // alpha_n = sum_{k<=n} 2^(n-k+1) etatilde(k), etatilde(0) = 1,
  // etatilde(2j) = 2 eta(2j), odd indices vanish.
  std::vector<double> etat(N + 1, 0.0);
  etat[0] = 1.0;
  for (int k = 2; k <= N; k += 2) etat[k] = 2.0 * dirichlet_eta(k);
  for (int n = 0; n <= N; ++n) {
    double alpha = 0.0;
    double p = 2.0;  // 2^(n-k+1) at k = n
    for (int k = n; k >= 0; --k) {
      alpha += p * etat[k];
      p *= 2.0;
    }
    t.values[n] = alpha - std::pow(2.0, n + 1) * dirichlet_eta(n + 1);
  }
  finish(t);
  return t;
}

CoeffTable coeffs_family(CoeffFamily f, int N) {
  switch (f) {
    case CoeffFamily::R_series: return coeffs_R_B(N).first;
    case CoeffFamily::B_series: return coeffs_R_B(N).second;
    case CoeffFamily::f_final_b: return coeffs_f_final(N);
    case CoeffFamily::g_final_d: return coeffs_g_final(N);
    case CoeffFamily::H_gamma: return coeffs_H_gamma(N);
  }
  throw precondition_error("coeffs_family: bad family");
}

double eval_series(const CoeffTable& t, double x) {
  const double var = t.family == CoeffFamily::H_gamma
                         ? 0.5 - x
                         : (1.0 - 2.0 * x) * (1.0 - 2.0 * x);
  double acc = 0.0;
  for (std::size_t i = t.values.size(); i-- > 0;)
    acc = acc * var + t.values[i];
  return acc;
}

double f_closed_form(double x) {
  const double u = x * (1.0 - x);
  return (1.0 + u - u * u) * beta(x, 1.0 - x) - ramanujan_r(x, 1.0 - x);
}

double g_closed_form(double x) {
  const double u = x * (1.0 - x);
  return ramanujan_r(x, 1.0 - x) - beta(x, 1.0 - x) / (1.0 + u);
}

double eval_F_pro1(double x) {
  if (!(x > 0.0) || !(x < 1.0))
    throw domain_error("eval_F_pro1: requires x in (0,1)");
  return beta(0.5 + x, 1.5 - x) / (x * (1.0 - x)) +
         ramanujan_r(0.5 + x, 1.5 - x) - ramanujan_r(x, 1.0 - x);
}

double eval_H_b(double b, double x) { return beta(x, b) - ramanujan_r(x, b); }

double eval_H_b_prime(double b, double x) {
  // d/dx B(x,b) = B(x,b)(psi(x) - psi(x+b)) and d/dx R(x,b) = -psi'(x)
  return beta(x, b) * (digamma(x) - digamma(x + b)) + trigamma(x);
}

double eval_G_b(double b, double x) { return beta(x, b) - 1.0 / x; }

double eval_f_b(double b, double x) {
  return (1.0 / x + 1.0 / b) * beta(0.5 + x, 0.5 + b) +
         ramanujan_r(0.5 + x, 0.5 + b) - ramanujan_r(x, b);
}

double richardson_derivative(const std::function<double(double)>& f, double x,
                             int m, double dist_to_singularity) {
  if (m == 0) return f(x);
  const double h0 =
      std::min(kBaseStep[m], dist_to_singularity / (2.0 * m + 2.0));
  const double d0 = central_difference(f, x, m, h0);
  const double d1 = central_difference(f, x, m, h0 / 2.0);
  const double d2 = central_difference(f, x, m, h0 / 4.0);
  const double r1 = (4.0 * d1 - d0) / 3.0;
  const double r2 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

std::vector<CmOrderResult> cm_probe(CmTarget target, double b, int orders,
                                    std::span<const double> grid) {
  if (orders < 0 || orders > 4)
    throw precondition_error("cm_probe: orders must be in [0,4]");
  if (grid.empty()) return {};
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] - grid[i - 1] < 100.0 * kBaseStep[0] * (1.0 - 1e-9))
      throw step_underflow_error(
          "cm_probe: grid spacing below 100x the difference step");

  std::function<double(double)> f;
  std::function<double(double)> dist;
  switch (target) {
    case CmTarget::H_b_prime:
      f = [b](double x) { return eval_H_b_prime(b, x); };
      dist = [](double x) { return x; };
      break;
    case CmTarget::G_b:
      f = [b](double x) { return eval_G_b(b, x); };
      dist = [](double x) { return x; };
      break;
    case CmTarget::F_pro1:
      f = [](double x) { return eval_F_pro1(x); };
      dist = [](double x) { return std::min(x, 1.0 - x); };
      break;
    case CmTarget::f_b:
      f = [b](double x) { return eval_f_b(b, x); };
      dist = [](double x) { return x; };
      break;
  }

  std::vector<CmOrderResult> out;
  for (int m = 0; m <= orders; ++m) {
    CmOrderResult r;
    r.order = m;
    r.worst_margin = std::numeric_limits<double>::infinity();
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (double x : grid) {
      const double v = sign * richardson_derivative(f, x, m, dist(x));
      if (v < r.worst_margin) {
        r.worst_margin = v;
        r.worst_x = x;
      }
    }
    r.pass = r.worst_margin > 0.0;
    out.push_back(r);
  }
  return out;
}

double b1_taylor_oracle() {
  // f is even in u = 1-2x: f = b0 + b1 u^2 + b2 u^4 + ...
  const auto S = [](double u) { return f_closed_form((1.0 - u) / 2.0); };
  const double b0 = S(0.0);
  const auto P = [&](double u) { return (S(u) - b0) / (u * u); };
  const double u0 = 0.02;
  const double p0 = P(u0), p1 = P(u0 / 2.0), p2 = P(u0 / 4.0);
  const double q0 = (4.0 * p1 - p0) / 3.0;
  const double q1 = (4.0 * p2 - p1) / 3.0;
  return (16.0 * q1 - q0) / 15.0;
}

}  // namespace zbhyp
