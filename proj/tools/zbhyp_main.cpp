// zbhyp: evaluation, thresholds, classification, series tables and
// verification suites for the zero-balanced Gauss hypergeometric family,
// with deterministic JSON/CSV output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zbhyp/cm_series.hpp"
#include "zbhyp/errors.hpp"
#include "zbhyp/gauss_2f1.hpp"
#include "zbhyp/phi_aux.hpp"
#include "zbhyp/scalar_special.hpp"
#include "zbhyp/threshold_engine.hpp"
#include "zbhyp/verify_harness.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw zbhyp::precondition_error("cannot write " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

struct GlobalOpts {
  std::string format = "json";
  std::string out_path;
  double tol = 1e-9;
  bool tol_set = false;
  int grid = -1;  // -1: per-command default
};

int cmd_eval(double a, double b, double c, double x, const GlobalOpts& g) {
  const zbhyp::Hyp2F1Eval e = zbhyp::hyp2f1_routed({a, b, c, x});
  if (g.format == "csv") {
    std::string s = "a,b,c,x,value,route,accuracy_warning\n";
    s += csv_num(a) + "," + csv_num(b) + "," + csv_num(c) + "," + csv_num(x) +
         "," + csv_num(e.value) + "," + zbhyp::route_name(e.route) + "," +
         (e.accuracy_warning ? "1" : "0") + "\n";
    emit(s, g.out_path);
  } else {
    ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["x"] = x;
    j["value"] = e.value;
    j["route"] = zbhyp::route_name(e.route);
    j["accuracy_warning"] = e.accuracy_warning;
    emit(j.dump(2), g.out_path);
  }
  return 0;
}

int cmd_thresholds(double a, double b, const GlobalOpts& g) {
  const zbhyp::ZbParams p(a, b);
  const zbhyp::ThresholdBundle t = zbhyp::thresholds(p);
  static const char* notes =
      "R, inv_sum, c_ab, g_ratio_up are closed forms; alpha0 and delta_pm "
      "come from a 4096-point scan with golden-section refinement";
  if (g.format == "csv") {
    std::string s = "a,b,R,inv_sum,c_ab,alpha0,delta_minus,delta_plus,"
                    "g_ratio_up\n";
    s += csv_num(a) + "," + csv_num(b) + "," + csv_num(t.r) + "," +
         csv_num(t.inv_sum) + "," + csv_num(t.c_ab) + "," +
         csv_num(t.alpha0) + "," + csv_num(t.delta_minus) + "," +
         csv_num(t.delta_plus) + "," + csv_num(t.g_ratio_up) + "\n";
    emit(s, g.out_path);
  } else {
    ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["R"] = t.r;
    j["inv_sum"] = t.inv_sum;
    j["c_ab"] = t.c_ab;
    j["alpha0"] = t.alpha0;
    j["delta_minus"] = t.delta_minus;
    j["delta_plus"] = t.delta_plus;
    j["g_ratio_up"] = t.g_ratio_up;
    j["notes"] = notes;
    emit(j.dump(2), g.out_path);
  }
  return 0;
}

int cmd_classify(double a, double b, double c, const std::string& target,
                 const GlobalOpts& g) {
  const zbhyp::ZbParams p(a, b);
  const int n = g.grid > 0 ? g.grid : 256;
  const zbhyp::CurvatureTarget tgt = target == "f_ratio"
                                         ? zbhyp::CurvatureTarget::f_ratio
                                         : zbhyp::CurvatureTarget::phi;
  if (target != "phi" && target != "f_ratio")
    throw zbhyp::precondition_error("classify: target must be phi or f_ratio");
  const zbhyp::CurvatureVerdict cv = zbhyp::classify_curvature(p, c, tgt, n);
  zbhyp::Monotonicity mono = zbhyp::classify_monotonicity(p, c, n);
  if (tgt == zbhyp::CurvatureTarget::f_ratio) {
    // f = 1/phi with phi > 0, so the orientation flips
    if (mono == zbhyp::Monotonicity::increasing)
      mono = zbhyp::Monotonicity::decreasing;
    else if (mono == zbhyp::Monotonicity::decreasing)
      mono = zbhyp::Monotonicity::increasing;
  }
  if (g.format == "csv") {
    std::string s = "a,b,c,target,curvature,witness,monotonicity\n";
    s += csv_num(a) + "," + csv_num(b) + "," + csv_num(c) + "," + target +
         "," + zbhyp::to_string(cv.verdict) + "," +
         (cv.witness ? csv_num(*cv.witness) : std::string()) + "," +
         zbhyp::to_string(mono) + "\n";
    emit(s, g.out_path);
  } else {
    ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["target"] = target;
    j["curvature"] = zbhyp::to_string(cv.verdict);
    if (cv.witness)
      j["witness"] = *cv.witness;
    else
      j["witness"] = nullptr;
    j["min_second"] = cv.min_second;
    j["max_second"] = cv.max_second;
    j["monotonicity"] = zbhyp::to_string(mono);
    emit(j.dump(2), g.out_path);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& config_path,
               const GlobalOpts& g) {
  zbhyp::HarnessConfig cfg;
  if (!config_path.empty()) cfg = zbhyp::HarnessConfig::from_file(config_path);
  if (g.grid >= 0) cfg.grid_n = g.grid;
  if (g.tol_set) cfg.tol_identity = g.tol;
  const zbhyp::Suite s = zbhyp::suite_from_name(suite);
  const zbhyp::Report rep = zbhyp::run_suite(s, cfg);
  if (g.format == "csv")
    emit(rep.to_csv(), g.out_path);
  else
    emit(rep.to_json().dump(2), g.out_path);
  return rep.has_enforced_violations() ? kExitViolation : 0;
}

int cmd_series(const std::string& family, int n, const GlobalOpts& g) {
  const zbhyp::CoeffFamily f = zbhyp::family_from_name(family);
  const zbhyp::CoeffTable t = zbhyp::coeffs_family(f, n);
  if (g.format == "csv") {
    emit(t.to_csv(), g.out_path);
    return 0;
  }
  ordered_json j = t.to_json();
  if (f == zbhyp::CoeffFamily::f_final_b && n >= 1)
    j["notes"] = "b_1 from the coefficient formula is ~0.0026; the reported "
                 "value 0.919 next to that formula does not match it (see "
                 "the series verification suite)";
  if (f == zbhyp::CoeffFamily::g_final_d)
    j["notes"] = "d_0 = log16 - (16/5) beta(1) = 0.2593 from the definition; "
                 "the inline claim d_0 = (4/5) pi log16 is inconsistent with "
                 "it";
  emit(j.dump(2), g.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-balanced Gauss hypergeometric toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out_path, "output path (default: stdout)");
  auto* tol_opt = app.add_option("--tol", g.tol, "identity tolerance override");
  app.add_option("--grid", g.grid, "grid size override");
  app.fallthrough();

  double a = 0.5, b = 0.5, c = 1.0, x = 0.0;
  std::string target = "phi", suite = "all", config_path, family;
  int order = 10;

  auto* eval = app.add_subcommand("eval", "evaluate 2F1(a,b;c;x)");
  eval->add_option("--a", a)->required();
  eval->add_option("--b", b)->required();
  eval->add_option("--c", c)->required();
  eval->add_option("--x", x)->required();

  auto* thr = app.add_subcommand("thresholds", "threshold bundle for (a,b)");
  thr->add_option("--a", a)->required();
  thr->add_option("--b", b)->required();

  auto* cls = app.add_subcommand(
      "classify", "curvature and monotonicity verdicts at (a,b,c)");
  cls->add_option("--a", a)->required();
  cls->add_option("--b", b)->required();
  cls->add_option("--c", c)->required();
  cls->add_option("--target", target, "phi or f_ratio");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite,
                  "corollary1|corollary2|sandwich|lemmas|thresholds|series|"
                  "all");
  ver->add_option("--config", config_path, "flat key = value config file");

  auto* ser = app.add_subcommand("series", "coefficient table for a family");
  ser->add_option("--family", family,
                  "R_series|B_series|f_final_b|g_final_d|H_gamma")
      ->required();
  ser->add_option("--n", order, "max index N (<= 200)");

  CLI11_PARSE(app, argc, argv);
  g.tol_set = tol_opt->count() > 0;

  try {
    if (eval->parsed()) return cmd_eval(a, b, c, x, g);
    if (thr->parsed()) return cmd_thresholds(a, b, g);
    if (cls->parsed()) return cmd_classify(a, b, c, target, g);
    if (ver->parsed()) return cmd_verify(suite, config_path, g);
    if (ser->parsed()) return cmd_series(family, order, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
