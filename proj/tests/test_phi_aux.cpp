#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zbhyp/gauss_2f1.hpp"
#include "zbhyp/phi_aux.hpp"
#include "zbhyp/scalar_special.hpp"

using namespace zbhyp;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kLog16 = std::log(16.0);
}  // namespace

TEST_CASE("ZbParams validation") {
  CHECK_THROWS_AS(ZbParams(-0.1, 0.5), domain_error);
  CHECK(ZbParams(0.4, 0.6).zero_balanced_theorem_domain());
  CHECK_FALSE(ZbParams(0.7, 0.7).zero_balanced_theorem_domain());
  CHECK(ZbParams(0.0, 0.5).degenerate());
}

TEST_CASE("phi limits and values") {
  const ZbParams p(0.5, 0.5);
  CHECK(phi(p, 2.5, 1e-12) == doctest::Approx(2.5).epsilon(1e-9));
  // at c = R the endpoint limit is B(a,b) = pi, approached to high order
  CHECK(phi(p, kLog16, 1.0 - 1e-12) == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(phi(p, 4.0 * std::log(2.0), 0.5) ==
        doctest::Approx(2.9362168052922024).epsilon(1e-13));
  // degenerate parameters
  CHECK(phi(ZbParams(0.0, 0.7), 1.5, 0.3) ==
        doctest::Approx(1.5 - std::log(0.7)).epsilon(1e-15));
  CHECK_THROWS_AS(phi(p, 1.0, 0.0), domain_error);
  CHECK_THROWS_AS(phi(p, 1.0, 1.0), domain_error);
}

TEST_CASE("f_ratio") {
  const ZbParams p(0.5, 0.5);
  CHECK(f_ratio(p, 2.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f_ratio(p, 8.0 / 3.0, 0.5) ==
        doctest::Approx(0.3513113085090767).epsilon(1e-13));
  CHECK_THROWS_AS(f_ratio(p, 0.0, 0.5), domain_error);
  CHECK_THROWS_AS(f_ratio(p, -1.0, 0.5), domain_error);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.01, 0.99), uc(0.5, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double x = ux(rng), c = uc(rng);
    CHECK(phi(p, c, x) * f_ratio(p, c, x) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("aux_eval exact values at (1/2,1/2,0)") {
  const AuxEval e = aux_eval(ZbParams(0.5, 0.5), 0.0);
  CHECK(e.F == 1.0);
  CHECK(e.F1 == 1.0);
  CHECK(e.F2 == 1.0);
  CHECK(e.h == 0.28125);  // 9/32
  CHECK(e.g == -1.5);
  CHECK(e.delta == 0.0);
  CHECK(e.omega_plus == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(e.omega_minus == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(e.phi_plus == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("aux_eval closed forms at x = 0") {
  for (const auto& ab : {std::pair{0.2, 0.3}, {0.1, 0.8}, {0.45, 0.45}}) {
    const double a = ab.first, b = ab.second;
    const AuxEval e = aux_eval(ZbParams(a, b), 0.0);
    const double s = a + b, pr = a * b, u = pr / s;
    const double d0 = 1.0 - 4.0 * u + 4.0 * u * u * (1.0 - s) / (s + 1.0);
    CHECK(e.delta == doctest::Approx(d0).epsilon(1e-13));
    const double root = std::sqrt(d0);
    CHECK(e.phi_plus ==
          doctest::Approx((s + 1.0) * (s + 2.0 * pr + s * root) /
                          (2.0 * pr * (s + pr + 1.0)))
              .epsilon(1e-12));
    CHECK(e.phi_minus ==
          doctest::Approx((s + 1.0) * (s + 2.0 * pr - s * root) /
                          (2.0 * pr * (s + pr + 1.0)))
              .epsilon(1e-12));
    CHECK(e.h == doctest::Approx(pr * (pr + s + 1.0) / (s * (s + 1.0)))
                     .epsilon(1e-14));
  }
  CHECK_THROWS_AS(aux_eval(ZbParams(0.0, 0.5), 0.3), domain_error);
}

TEST_CASE("aux_eval invariants on a sample") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ua(0.05, 0.95), ux(0.0, 0.999);
  for (int i = 0; i < 120; ++i) {
    const double a = ua(rng);
    const double b = std::min(ua(rng), 1.0 - a);
    if (b <= 0.0) continue;
    const ZbParams p(a, b);
    const AuxEval e = aux_eval(p, ux(rng));
    CHECK(e.h > 0.0);
    CHECK(e.g < 0.0);
    CHECK(e.delta >= 0.0);
    CHECK(e.omega_minus <= e.omega_plus + 1e-12);
    for (double w : {e.omega_minus, e.omega_plus}) {
      const double res = e.h * w * w + e.g * w + 2.0 * e.F;
      const double scale = std::max(
          {std::abs(e.h * w * w), std::abs(e.g * w), 2.0 * std::abs(e.F)});
      CHECK(std::abs(res) / scale <= 1e-9);
    }
  }
}

TEST_CASE("phi_plus_extended endpoint behaviour") {
  const ZbParams p(0.5, 0.5);
  CHECK(phi_plus_extended(p, 1.0) == ramanujan_r(0.5, 0.5));
  CHECK(phi_plus_extended(p, 0.0) ==
        doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  // continuity probe just inside the interpolation band
  CHECK(std::abs(phi_plus_extended(p, 0.999999) - ramanujan_r(0.5, 0.5)) <=
        1e-3);
  const ZbParams q(0.3, 0.4);
  CHECK(std::abs(phi_plus_extended(q, 0.999999) - ramanujan_r(0.3, 0.4)) <=
        1e-3);
  // no jump across the band edge
  CHECK(std::abs(phi_plus_extended(q, 1.0 - 1e-6) -
                 phi_plus_extended(q, 1.0 - 0.9e-6)) <= 1e-6);
  CHECK_THROWS_AS(phi_plus_extended(p, 1.5), domain_error);
}

TEST_CASE("c_threshold") {
  CHECK(c_threshold(ZbParams(0.5, 0.5)) == 3.2);  // 16/5, exact in binary
  CHECK_THROWS_AS(c_threshold(ZbParams(0.0, 0.5)), domain_error);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(0.05, 0.95);
  for (int i = 0; i < 50; ++i) {
    const double a = ua(rng), b = ua(rng);
    CHECK(c_threshold(ZbParams(a, b)) ==
          doctest::Approx(c_threshold(ZbParams(b, a))).epsilon(1e-14));
  }
  // Kendall form along a + b = 1
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    const double kendall = 2.0 * (1.0 - 2.0 * a + 2.0 * a * a) /
                           (a * (1.0 - a) * (2.0 - 3.0 * a + 3.0 * a * a));
    CHECK(std::abs(c_threshold(ZbParams(a, 1.0 - a)) - kendall) <= 1e-12);
  }
}

TEST_CASE("psi_big factorization and f'' closed form") {
  const ZbParams p(0.5, 0.5);
  for (double c : {2.0, 3.0, 3.5}) {
    for (int i = 1; i <= 19; ++i) {
      const double x = 0.05 * i;
      const AuxEval e = aux_eval(p, x);
      const double lhs = psi_big(p, c, x);
      const double rhs = e.h * (c - e.phi_plus) * (c - e.phi_minus);
      const double scale = std::max(1e-3, std::abs(lhs));
      CHECK(std::abs(lhs - rhs) / scale <= 1e-9);
    }
  }
  // c placed on a root of the factorization
  const AuxEval e = aux_eval(p, 0.37);
  CHECK(std::abs(psi_big(p, e.phi_plus, 0.37)) <= 1e-9);

  // f'' against a Richardson second difference of f_ratio
  const auto f = [&](double x) { return f_ratio(p, 3.0, x); };
  const double fd = oracles::second_deriv(f, 0.4, 1e-4);
  const double an = f_second_deriv(p, 3.0, 0.4);
  CHECK(std::abs(an - fd) / std::abs(an) <= 1e-5);
}

TEST_CASE("phi_second_deriv0") {
  const ZbParams p(0.5, 0.5);
  CHECK(std::abs(phi_second_deriv0(p, c_threshold(p))) <= 1e-12);
  CHECK(std::abs(phi_second_deriv0(p, 16.0 / 5.0)) <= 1e-12);
  for (const auto& ab : {std::pair{0.2, 0.3}, {0.1, 0.6}}) {
    const ZbParams q(ab.first, ab.second);
    CHECK(std::abs(phi_second_deriv0(q, c_threshold(q))) <= 1e-12);
  }
  // sign agrees with a second difference of phi near 0 for c = 3 < 16/5
  const auto ph = [&](double x) { return phi(p, 3.0, x); };
  const double fd = oracles::second_deriv(ph, 1e-3, 1e-4);
  CHECK(phi_second_deriv0(p, 3.0) > 0.0);
  CHECK(fd > 0.0);
  // and flips above the threshold
  CHECK(phi_second_deriv0(p, 3.3) < 0.0);
}

TEST_CASE("s_poly") {
  const ZbParams p(0.5, 0.5);
  CHECK(s_poly(p, 16.0 / 5.0) < 0.0);
  CHECK(s_poly(p, 16.0 / 5.0) == doctest::Approx(-0.00625).epsilon(1e-12));
  CHECK(s_poly(p, 2.0) > s_poly(p, 3.0));  // decreasing in c
  CHECK(s_poly(ZbParams(0.0, 0.5), 7.0) == 1.0);
}
