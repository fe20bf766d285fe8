#include "zbhyp/claims.hpp"

#include "zbhyp/errors.hpp"

namespace zbhyp {

const std::map<std::string, ClaimInfo>& claim_registry() {
  static const std::map<std::string, ClaimInfo> registry = {
      // symmetric-sum bounds for phi, c >= c(a,b)
      {"cor1.lower", {"c + B(a,b) <= phi(x) + phi(1-x) for c >= c(a,b)"}},
      {"cor1.lower.variant",
       {"c + 1/B(a,b) <= phi(x) + phi(1-x); proof-side variant of cor1.lower "
        "with the beta factor inverted, weaker whenever B(a,b) > 1"}},
      {"cor1.upper",
       {"phi(x) + phi(1-x) <= 2(c + log 2)/F(1/2) for c >= c(a,b)"}},
      {"cor1.tight.mid",
       {"the upper bound of cor1 is attained at x = 1/2"}},
      {"cor1.tight.end",
       {"phi(x) + phi(1-x) -> c + B(a,b) as x -> 0+, checked by "
        "extrapolation in 1/(R - log x)"}},
      {"cor1.reversed.lower",
       {"2(c + log 2)/F(1/2) <= phi(x) + phi(1-x) for c <= R(a,b)"}},
      {"cor1.reversed.upper",
       {"phi(x) + phi(1-x) <= c + B(a,b) for c <= R(a,b)"}},

      // symmetric-sum bounds for f = 1/phi, c in [delta-, delta+]
      {"cor2.lower",
       {"1/c + 1/B(a,b) <= f(x) + f(1-x) for c in [delta-, delta+]"}},
      {"cor2.upper.derived",
       {"f(x) + f(1-x) <= 2 F(1/2)/(c + log 2), the bound implied by "
        "concavity of the symmetric sum with maximum at x = 1/2"}},
      {"cor2.upper.stated",
       {"f(x) + f(1-x) <= F(1/2)/(2c + 2 log 2); printed bound equal to one "
        "quarter of cor2.upper.derived, so the symmetric sum exceeds it by "
        "a factor of about 4",
        true}},
      {"cor2.tight.mid",
       {"the derived upper bound of cor2 is attained at x = 1/2"}},
      {"cor2.tight.end",
       {"f(x) + f(1-x) -> 1/c + 1/B(a,b) as x -> 0+, checked by "
        "extrapolation in 1/(R - log x)"}},

      // R(x) vs B(x) sandwich chains, x in (0,1), R(x)=R(x,1-x), B(x)=B(x,1-x)
      {"sandwich.chain1.lower",
       {"log 16 - 4 pi/5 + B(x)/(1 + x(1-x)) < R(x); tight at x = 1/2"}},
      {"sandwich.chain1.upper",
       {"R(x) < 1 + B(x)/(1 + x(1-x)); tight as x -> 0 or 1"}},
      {"sandwich.chain2.lower",
       {"log 16 - 4 pi/5 + (14 zeta(3) - (2 pi/25)(8 + 5 pi^2))(x - 1/2)^2 "
        "+ B(x)/(1 + x(1-x)) < R(x); quadratic refinement of chain1"}},
      {"sandwich.chain3.lower",
       {"(1 + x(1-x) - (x(1-x))^2) B(x) - 1 < R(x); tight as x -> 0 or 1"}},
      {"sandwich.chain3.upper.stated",
       {"R(x) < (1 + x(1-x) - (x(1-x))^2) B(x) - 21 pi/16 + log 16; the "
        "printed constant 21 pi/16 is inconsistent with the series minimum "
        "b_0 = 19 pi/16 - log 16, and the bound fails by pi/8 at x = 1/2",
        true}},
      {"sandwich.chain3.upper.derived",
       {"R(x) < (1 + x(1-x) - (x(1-x))^2) B(x) - 19 pi/16 + log 16; the "
        "constant consistent with the series minimum b_0, tight at x = 1/2"}},
      {"sandwich.symmetry",
       {"every panel margin satisfies margin(x) = margin(1-x)"}},

      // lemma-level probes
      {"lemma.h.monotone", {"h(x) is strictly increasing on [0,1)"}},
      {"lemma.h.at0", {"h(0) = ab(ab+a+b+1)/((a+b)(a+b+1))"}},
      {"lemma.h.at1", {"h(x) -> 1/B(a,b) as x -> 1-"}},
      {"lemma.delta.monotone", {"Delta(x) is strictly increasing on (0,1)"}},
      {"lemma.delta.at0",
       {"Delta(0) = 1 - 4ab/(a+b) + 4(ab/(a+b))^2 (1-a-b)/(a+b+1)"}},
      {"lemma.delta.nonneg", {"Delta(x) >= 0, zero only at a=b=1/2, x=0"}},
      {"lemma.root.identity",
       {"h w^2 + g w + 2F = 0 for both roots w = omega_pm"}},
      {"lemma.ordering", {"omega_minus <= omega_plus, strict for x > 0"}},
      {"lemma.amgm", {"4ab <= a + b whenever a + b <= 1"}},
      {"lemma.spoly",
       {"S(a,b,c) < 0 for every c >= c(a,b) (affine, negative slope)"}},
      {"lemma.aprobe",
       {"A(x) = (1-x) F(x) F1(x) has negative first differences"}},
      {"lemma.phiplus.at0",
       {"phi_plus(0) = (a+b+1)(a+b+2ab+(a+b)sqrt(Delta(0)))/(2ab(a+b+ab+1))"}},
      {"lemma.phiminus.at0",
       {"phi_minus(0) = (a+b+1)(a+b+2ab-(a+b)sqrt(Delta(0)))/(2ab(a+b+ab+1))"}},
      {"lemma.l0.range",
       {"for c <= R(a,b), phi maps (0,1) into (c, B(a,b))"}},
      {"lemma.l0.increasing", {"for c <= R(a,b), phi is increasing"}},

      // threshold sharpness
      {"thm1.convex.below_r", {"phi is convex at c = R - 1e-3"}},
      {"thm1.concave.above_cab", {"phi is concave at c = c(a,b) + 1e-3"}},
      {"thm1.neither.mid",
       {"phi is neither convex nor concave at c = (R + c(a,b))/2 when the "
        "gap exceeds the classifier band"}},
      {"thm1.neither.above_r", {"phi is not convex at c = R + 0.1 < c(a,b)"}},
      {"thm1.neither.below_cab",
       {"phi is not concave at c = c(a,b) - 0.1 > R"}},
      {"thm2.convex.above_alpha0", {"1/phi is convex at c = alpha0 + 1e-3"}},
      {"thm2.concave.mid_delta",
       {"1/phi is concave at c = (delta- + delta+)/2 when the interval "
        "width exceeds 1e-6"}},
      {"l0.increasing.below_r", {"phi is increasing at c = R - 1e-3"}},
      {"l0.neither.above_r", {"phi is not monotone at c = R + 1e-3"}},
      {"l0.decreasing.above_invsum",
       {"phi is decreasing at c = 1/a + 1/b + 1e-3"}},
      {"l0.neither.below_invsum",
       {"phi is not monotone at c = 1/a + 1/b - 1e-3"}},
      {"gratio.decreasing", {"G_{a,b,c} is decreasing for c >= 1/a + 1/b"}},
      {"gratio.increasing",
       {"G_{a,b,c} is increasing for c < (R(a,b) - R(a+1/2,b+1/2))/"
        "B(a+1/2,b+1/2)"}},
      {"phiplus.endpoint.exact", {"phi_plus_extended(1) equals R(a,b)"}},
      {"phiplus.endpoint.near",
       {"|phi_plus(1 - 1e-5) - R(a,b)| <= 1e-2"}},
      {"extrema.grid.invariant",
       {"alpha0 and delta_pm change by <= 1e-8 when the scan grid doubles"}},
      {"bundle.invariants",
       {"delta- <= delta+, alpha0 >= delta+, alpha0 >= R, R < 1/a + 1/b"}},
      {"kendall.form",
       {"c(a,1-a) = 2(1-2a+2a^2)/(a(1-a)(2-3a+3a^2))"}},

      // series / complete monotonicity
      {"series.rb.partial_sums",
       {"truncated R and B expansions reproduce R(x,1-x) and B(x,1-x) to "
        "1e-10 at x in {0.1, 0.3, 0.45}"}},
      {"series.bn.nonneg", {"b_n >= 0 for 0 <= n <= 50"}},
      {"series.dn.positive", {"d_n > 0 for 0 <= n <= 50"}},
      {"series.b0.range", {"b_0 in [0.95, 0.96]"}},
      {"series.b1.consistency",
       {"the displayed b_1 formula and the Taylor-coefficient oracle agree; "
        "the reported value 0.919 near the formula does not match either "
        "(both give ~0.0026)",
        true}},
      {"series.d0.inline",
       {"the inline claim d_0 = (4/5) pi log 16 > 0.25 conflicts with d_0 = "
        "log 16 - (16/5) beta(1) = 0.2593 from the definition; the "
        "definition value is used",
        true}},
      {"series.f.match", {"sum b_n (1-2x)^{2n} = f closed form to 1e-9"}},
      {"series.g.match", {"sum d_n (1-2x)^{2n} = g closed form to 1e-9"}},
      {"series.h.match",
       {"sum gamma_n (1/2-x)^n reproduces H(x) on (0,1/2)"}},
      {"cm.f_series", {"f is completely monotonic on (0,1/2), orders 0-4"}},
      {"cm.g_series", {"g is completely monotonic on (0,1/2), orders 0-4"}},
      {"cm.hb_prime",
       {"H'_b is strictly completely monotonic on (0,inf) for b > 0"}},
      {"cm.gb", {"G_b is strictly completely monotonic for b in (0,1)"}},
      {"cm.gb.witness",
       {"G_b fails complete monotonicity for b = 2 (order-0 witness)"}},
      {"cm.f_pro1", {"F is completely monotonic on (0,1/2), orders 0-4"}},
      {"cm.f_b", {"f_b is completely monotonic on (0,1-b), orders 0-4"}},
      {"prop4.chain",
       {"R(a,b) < B(a,b) < 1/a + 1/b for a > 0, b in (0,1)"}},
  };
  return registry;
}

bool claim_registered(const std::string& id) {
  return claim_registry().count(id) > 0;
}

const ClaimInfo& claim_info(const std::string& id) {
  const auto& reg = claim_registry();
  auto it = reg.find(id);
  if (it == reg.end())
    throw precondition_error("unregistered claim id: " + id);
  return it->second;
}

}  // namespace zbhyp
