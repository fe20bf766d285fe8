#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zbhyp/cm_series.hpp"
#include "zbhyp/scalar_special.hpp"

using namespace zbhyp;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kLog16 = std::log(16.0);
}  // namespace

TEST_CASE("quartic weight re-derivation") {
  const auto w = quartic_weight_coeffs();
  CHECK(w[0] == 19.0 / 16.0);
  CHECK(w[1] == -1.0 / 8.0);
  CHECK(w[2] == -1.0 / 16.0);
}

TEST_CASE("R and B coefficient tables") {
  const auto [rt, bt] = coeffs_R_B(96);
  CHECK(rt.values[0] == doctest::Approx(kLog16).epsilon(1e-15));
  CHECK(bt.values[0] == doctest::Approx(kPi).epsilon(1e-14));  // 4 beta(1)
  CHECK(rt.values[1] ==
        doctest::Approx(4.0 * dirichlet_lambda(3)).epsilon(1e-15));
  CHECK(rt.all_nonnegative);
  CHECK(bt.all_nonnegative);
  // partial sums reproduce the closed forms
  for (double x : {0.1, 0.3, 0.45}) {
    const double rr = ramanujan_r(x, 1.0 - x);
    CHECK(std::abs(eval_series(rt, x) - rr) / rr <= 1e-10);
    const double bb = beta(x, 1.0 - x);
    CHECK(std::abs(eval_series(bt, x) - bb) / bb <= 1e-10);
  }
  CHECK_THROWS_AS(coeffs_R_B(201), precondition_error);
}

TEST_CASE("f-series coefficients b_n") {
  const CoeffTable t = coeffs_f_final(64);
  CHECK(t.values[0] == doctest::Approx(0.9580525538980982).epsilon(1e-13));
  CHECK(t.values[0] >= 0.95);
  CHECK(t.values[0] <= 0.96);
  CHECK(t.values[1] ==
        doctest::Approx(0.0025959519747004036).epsilon(1e-10));
  CHECK(t.values[2] == doctest::Approx(0.032832018206563077).epsilon(1e-12));
  for (int n = 0; n <= 50; ++n) CHECK(t.values[n] >= 0.0);
  // decay: the weight coefficients sum to 1, so b_n ~ (16/3) 9^-n
  CHECK(std::abs(t.values[50]) <= 1e-10);
  CHECK(t.values[50] > 0.0);
  CHECK(t.all_nonnegative);
}

TEST_CASE("b1 Taylor oracle agrees with the displayed formula") {
  const CoeffTable t = coeffs_f_final(2);
  const double oracle = b1_taylor_oracle();
  CHECK(std::abs(t.values[1] - oracle) <= 1e-7);
  // and both reject the reported 0.919
  CHECK(std::abs(t.values[1] - 0.919) > 0.9);
}

TEST_CASE("g-series coefficients d_n") {
  const CoeffTable t = coeffs_g_final(64);
  CHECK(t.values[0] ==
        doctest::Approx(kLog16 - 4.0 * kPi / 5.0).epsilon(1e-13));
  CHECK(t.values[0] == doctest::Approx(0.2593145993679466).epsilon(1e-13));
  CHECK(t.values[1] == doctest::Approx(0.6039166684542311).epsilon(1e-13));
  for (int n = 0; n <= 50; ++n) CHECK(t.values[n] > 0.0);
  // geometric decay ~ 5^-n stays strictly positive in double precision
  CHECK(t.values[50] < 1e-30);
  CHECK(t.signs[50] == 0);  // below the sign-verdict tolerance
  CHECK(t.signs[0] == 1);
}

TEST_CASE("truncated series match their closed forms") {
  const CoeffTable ft = coeffs_f_final(64);
  const CoeffTable gt = coeffs_g_final(64);
  for (double x : {0.1, 0.25, 0.4}) {
    CHECK(std::abs(eval_series(ft, x) - f_closed_form(x)) <= 1e-9);
    CHECK(std::abs(eval_series(gt, x) - g_closed_form(x)) <= 1e-9);
  }
}

TEST_CASE("H series in powers of (1/2 - x)") {
  const CoeffTable t = coeffs_H_gamma(48);
  CHECK(t.values[0] ==
        doctest::Approx(2.0 - 2.0 * std::log(2.0)).epsilon(1e-13));
  for (int n = 0; n <= 48; ++n) CHECK(t.values[n] > 0.0);
  for (double x : {0.3, 0.45}) {
    const double closed = std::exp(ln_gamma(1.5 - x) + ln_gamma(0.5 + x)) / x +
                          digamma(x) - digamma(0.5 + x);
    CHECK(eval_series(t, x) == doctest::Approx(closed).epsilon(1e-11));
  }
  // F(1/2) = 2 gamma_0 = 4 - 4 log 2
  CHECK(2.0 * t.values[0] ==
        doctest::Approx(eval_F_pro1(0.5)).epsilon(1e-13));
}

TEST_CASE("F of the beta/digamma combination") {
  CHECK(eval_F_pro1(0.5) ==
        doctest::Approx(4.0 - 4.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(eval_F_pro1(0.3) ==
        doctest::Approx(1.6217832212840454).epsilon(1e-13));
  for (double x : {0.1, 0.23, 0.41}) {
    CHECK(eval_F_pro1(x) ==
          doctest::Approx(eval_F_pro1(1.0 - x)).epsilon(1e-12));
    CHECK(eval_F_pro1(x) > 4.0 - 4.0 * std::log(2.0));
  }
  CHECK_THROWS_AS(eval_F_pro1(0.0), domain_error);
}

TEST_CASE("complete-monotonicity probes") {
  const std::vector<double> wide = {0.1, 0.5, 1.0, 2.0, 3.5, 5.0};
  for (const auto& r : cm_probe(CmTarget::H_b_prime, 1.0, 4, wide)) {
    CHECK(r.pass);
    CHECK(r.worst_margin > 0.0);
  }
  for (const auto& r : cm_probe(CmTarget::G_b, 0.5, 4, wide)) CHECK(r.pass);

  // b = 2 breaks complete monotonicity of G_b at order 0
  const auto witness = cm_probe(CmTarget::G_b, 2.0, 0, wide);
  CHECK_FALSE(witness[0].pass);
  CHECK(witness[0].worst_margin < 0.0);

  const std::vector<double> half = {0.1, 0.2, 0.3, 0.4};
  for (const auto& r : cm_probe(CmTarget::F_pro1, 0.0, 4, half)) CHECK(r.pass);
  const std::vector<double> fb = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  for (const auto& r : cm_probe(CmTarget::f_b, 0.25, 4, fb)) CHECK(r.pass);

  const std::vector<double> too_fine = {0.1, 0.15};
  CHECK_THROWS_AS(cm_probe(CmTarget::G_b, 0.5, 2, too_fine),
                  step_underflow_error);
  CHECK_THROWS_AS(cm_probe(CmTarget::G_b, 0.5, 5, wide), precondition_error);
}

TEST_CASE("family names and csv") {
  CHECK(family_from_name("g_final_d") == CoeffFamily::g_final_d);
  CHECK_THROWS_AS(family_from_name("nonsense"), precondition_error);
  const CoeffTable t = coeffs_family(CoeffFamily::g_final_d, 3);
  const std::string csv = t.to_csv();
  CHECK(csv.rfind("index,value,sign\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 rows
}
