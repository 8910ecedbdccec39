/*
 * Copyright 2026 The bernkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Every subcommand emits either a human-readable
// summary or, with --json, one structured document on stdout. Exact values
// are serialized as canonical "p/q"; floats as decimal strings with an
// explicit digit count. Stdout is byte-identical across runs for identical
// inputs; wall-clock timing goes to stderr in human mode only.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "bernkit/bernoulli.hpp"
#include "bernkit/elliptic.hpp"
#include "bernkit/faulhaber.hpp"
#include "bernkit/kdv.hpp"
#include "bernkit/quadrature.hpp"
#include "bernkit/tangent.hpp"
#include "bernkit/version.hpp"

namespace {

using nlohmann::json;

constexpr int kFloatDigits = 21;

std::string fmt_ld(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", kFloatDigits, v);
  return buf;
}

struct Report {
  json args = json::object();
  json tolerances = json::object();
  json items = json::array();
  std::vector<std::string> human;
  bool pass = true;
};

int emit(const std::string& command, const Report& r, bool as_json) {
  if (as_json) {
    const json doc{{"command", command},         {"arguments", r.args},
                   {"version", BERNKIT_VERSION}, {"float_digits", kFloatDigits},
                   {"tolerances", r.tolerances}, {"items", r.items},
                   {"pass", r.pass}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : r.human) std::cout << line << "\n";
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? 0 : 1;
}

json mono_to_json(const bernkit::DiffPoly::Mono& m) {
  json a = json::array();
  for (unsigned e : m) a.push_back(e);
  return a;
}

struct QuadFlags {
  double truncation = 30.0;
  unsigned panels = 64;
  unsigned nodes_per_panel = 24;
  unsigned precision_bits = 64;
  double tolerance = 1e-10;

  bernkit::QuadratureSpec spec() const {
    return {truncation, panels, nodes_per_panel, precision_bits, tolerance};
  }
  void add_flags(CLI::App* cmd) {
    cmd->add_option("--truncation", truncation,
                    "Half-width X of the integration window [-X, X]")
        ->capture_default_str();
    cmd->add_option("--panels", panels, "Number of uniform panels")->capture_default_str();
    cmd->add_option("--nodes", nodes_per_panel, "Gauss-Legendre nodes per panel")
        ->capture_default_str();
    cmd->add_option("--precision-bits", precision_bits,
                    "Working float precision: 53 (double) or 64 (long double)")
        ->capture_default_str();
    cmd->add_option("--tolerance", tolerance, "Relative accuracy target")
        ->capture_default_str();
  }
  json echo() const {
    return {{"truncation", truncation},
            {"panels", panels},
            {"nodes_per_panel", nodes_per_panel},
            {"precision_bits", precision_bits},
            {"tolerance", fmt_ld(tolerance)}};
  }
};

// ---- bernoulli -------------------------------------------------------

int run_bernoulli(unsigned n, std::vector<std::string> routes, const QuadFlags& qf,
                  bool as_json) {
  if (routes.empty()) routes = {"oracle"};
  Report r;
  r.args = {{"n", n}, {"routes", routes}};
  r.tolerances = {{"numeric_relative", fmt_ld(qf.tolerance)}};

  bool have_exact = false, exact_agree = true;
  bernkit::BigRational exact_value;
  bool have_numeric = false;
  long double numeric_value = 0;

  for (const auto& route : routes) {
    json item{{"route", route}, {"n", n}};
    if (route == "oracle" || route == "tangent" || route == "kdv") {
      bernkit::BigRational v;
      if (route == "oracle") {
        v = bernkit::bernoulli_oracle(n);
      } else if (route == "tangent") {
        if (n < 2)
          throw CLI::ValidationError("bernoulli", "route 'tangent' requires n >= 2");
        v = bernkit::bernoulli_via_tangent(n);
      } else {
        if (n < 2 || n % 2 != 0 || n > 40)
          throw CLI::ValidationError("bernoulli",
                                     "route 'kdv' requires even n in [2, 40]");
        v = bernkit::bernoulli_via_kdv(n / 2);
      }
      item["exact"] = v.to_string();
      item["decimal"] = v.to_decimal_string(20);
      r.human.push_back("B_" + std::to_string(n) + " [" + route + "] = " + v.to_string() +
                        "  (" + v.to_decimal_string(15) + ")");
      if (have_exact && !(v == exact_value)) exact_agree = false;
      exact_value = v;
      have_exact = true;
    } else if (route == "quadrature") {
      if (n < 2 || n % 2 != 0 || n > 24)
        throw CLI::ValidationError("bernoulli",
                                   "route 'quadrature' requires even n in [2, 24]");
      const auto qr = bernkit::bernoulli_numeric(n / 2, qf.spec());
      item["value"] = fmt_ld(qr.value);
      item["abs_error_estimate"] = fmt_ld(qr.abs_error_estimate);
      item["tail_bound"] = fmt_ld(qr.tail_bound);
      item["nodes"] = qr.total_nodes;
      r.human.push_back("B_" + std::to_string(n) + " [quadrature] = " + fmt_ld(qr.value) +
                        "  (est. error " + fmt_ld(qr.abs_error_estimate) + ")");
      numeric_value = qr.value;
      have_numeric = true;
    } else {
      throw CLI::ValidationError(
          "bernoulli", "unknown route '" + route + "' (oracle|tangent|quadrature|kdv)");
    }
    r.items.push_back(item);
  }

  if (routes.size() > 1) {
    bool agree = exact_agree;
    if (have_exact && have_numeric) {
      const long double e = exact_value.to_long_double();
      const long double tol = static_cast<long double>(qf.tolerance);
      agree = agree &&
              std::fabs(numeric_value - e) <= tol * std::max(std::fabs(e), 1e-30L);
    }
    r.pass = agree;
    r.args["agree"] = agree;
    r.human.push_back(std::string("agreement: ") + (agree ? "true" : "false"));
  }
  return emit("bernoulli", r, as_json);
}

// ---- tangent / faulhaber / kdv-density -------------------------------

int run_tangent(unsigned n, bool as_json) {
  Report r;
  r.args = {{"n", n}};
  const bernkit::DensePoly t = bernkit::tangent_poly(n);
  json item{{"n", n}, {"coefficients", bernkit::coefficient_strings(t)}};
  if (n % 2 == 1) item["tangent_number"] = bernkit::tangent_number((n + 1) / 2).get_str();
  r.items.push_back(item);
  r.human.push_back("T_" + std::to_string(n) + "(y) = " +
                    bernkit::format_polynomial(t, "y"));
  return emit("tangent", r, as_json);
}

int run_faulhaber(unsigned m, bool as_json) {
  Report r;
  r.args = {{"m", m}};
  const auto f = bernkit::faulhaber_from_bernoulli(m);
  json alphas = json::array();
  for (const auto& a : f.alphas) alphas.push_back(a.to_string());
  r.items.push_back({{"m", m}, {"alphas", alphas}});
  r.human.push_back("F_" + std::to_string(m) + "(l) = " +
                    bernkit::format_polynomial(f.as_poly(), "l"));
  return emit("faulhaber", r, as_json);
}

int run_kdv_density(unsigned m, bool as_json) {
  if (m > 8)
    throw CLI::ValidationError("kdv-density", "m must be in [0, 8] (term growth)");
  Report r;
  r.args = {{"m", m}};
  const auto ds = bernkit::build_densities(m);
  const auto& d = ds[m];
  json terms = json::array();
  for (const auto& [mono, coeff] : d.density.serialized())
    terms.push_back({{"exponents", mono_to_json(mono)}, {"coefficient", coeff}});
  r.items.push_back({{"m", m}, {"weight", 2 * m + 4}, {"terms", terms}});
  r.human.push_back("P_" + std::to_string(m) + " = " + d.density.to_string());
  return emit("kdv-density", r, as_json);
}

// ---- verify ----------------------------------------------------------

int run_verify(const std::string& suite, unsigned max_m, unsigned max_n, unsigned order,
               bool order_given, bool as_json) {
  Report r;
  const auto record = [&r](const std::string& label, bool ok) {
    r.items.push_back({{"case", label}, {"pass", ok}});
    r.human.push_back(label + ": " + (ok ? "pass" : "FAIL"));
    r.pass = r.pass && ok;
  };

  if (suite == "lemma1") {
    const unsigned ord = order_given ? order : 12;
    r.args = {{"suite", suite}, {"order", ord}};
    const auto rep = bernkit::verify_tangent_generating_function(ord);
    for (unsigned k = 0; k <= ord; ++k)
      record("lemma1 z^" + std::to_string(k), rep.coeff_ok[k]);
  } else if (suite == "lemma2") {
    r.args = {{"suite", suite}, {"max_m", max_m}};
    for (unsigned m = 2; m <= max_m; ++m)
      record("lemma2 m=" + std::to_string(m),
             bernkit::bernoulli_via_tangent(m) == bernkit::bernoulli_oracle(m));
  } else if (suite == "eq1") {
    r.args = {{"suite", suite}, {"max_m", max_m}};
    for (unsigned m = 1; m <= max_m; ++m)
      record("eq1 m=" + std::to_string(m), bernkit::verify_soliton_faulhaber(m));
  } else if (suite == "eq12") {
    r.args = {{"suite", suite}, {"max_n", max_n}};
    for (unsigned n = 1; n <= max_n; ++n)
      record("eq12 n=" + std::to_string(n), bernkit::verify_tangent_integral_identity(n));
  } else if (suite == "alpha2") {
    r.args = {{"suite", suite}, {"max_m", max_m}};
    for (unsigned m = 1; m <= max_m; ++m)
      record("alpha2 m=" + std::to_string(m), bernkit::verify_alpha2(m));
  } else if (suite == "parts") {
    r.args = {{"suite", suite}, {"max_m", max_m}};
    for (unsigned m = 1; m <= max_m; ++m)
      record("parts m=" + std::to_string(m), bernkit::verify_parts_reduction(m));
  } else if (suite == "ode14") {
    const unsigned ord = order_given ? order : 20;
    r.args = {{"suite", suite}, {"order", ord}};
    record("ode14 K=" + std::to_string(ord), bernkit::verify_wp_ode(ord));
  } else {
    throw CLI::ValidationError("verify", "unknown suite '" + suite +
                                             "' (lemma1|lemma2|eq1|eq12|alpha2|parts|ode14)");
  }

  unsigned ok = 0;
  for (const auto& item : r.items)
    if (item["pass"].get<bool>()) ++ok;
  r.human.push_back(std::to_string(ok) + "/" + std::to_string(r.items.size()) + " pass");
  return emit("verify", r, as_json);
}

// ---- bh / bell -------------------------------------------------------

int run_bh(const std::string& g2s, const std::string& g3s, unsigned k, bool as_json) {
  Report r;
  r.args = {{"g2", g2s}, {"g3", g3s}, {"k", k}};
  const bernkit::InvariantPair g{bernkit::BigRational::from_string(g2s),
                                 bernkit::BigRational::from_string(g3s)};
  const auto table = bernkit::wp_laurent(g, k);
  for (unsigned i = 1; i <= k; ++i) {
    r.items.push_back(
        {{"k", i},
         {"laurent", table.laurent[i - 1].to_string()},
         {"bh_index", 2 * i + 2},
         {"bh", table.bh[i - 1].to_string()},
         {"bh_symbolic", bernkit::format_invariant_poly(bernkit::bh_symbolic(i))}});
    r.human.push_back("BH_" + std::to_string(2 * i + 2) + " = " +
                      table.bh[i - 1].to_string() + "  [" +
                      bernkit::format_invariant_poly(bernkit::bh_symbolic(i)) + "]");
  }
  return emit("bh", r, as_json);
}

int run_bell(double omega1, double omega2_im, unsigned m, unsigned nodes, bool as_json) {
  Report r;
  r.args = {{"omega1", omega1}, {"omega2_im", omega2_im}, {"m", m}, {"nodes", nodes}};
  const bernkit::RectLattice l{omega1, omega2_im};
  const long double coarse = bernkit::bell_numeric(l, m, nodes);
  const long double fine = bernkit::bell_numeric(l, m, 2 * nodes);
  const std::string cycle = "z = t + i*" + fmt_ld(omega2_im) + ", t in [0, " +
                            fmt_ld(2 * static_cast<long double>(omega1)) + ")";
  r.items.push_back({{"m", m},
                     {"value", fmt_ld(fine)},
                     {"nodes", 2 * nodes},
                     {"doubling_delta", fmt_ld(std::fabs(fine - coarse))},
                     {"omega1", omega1},
                     {"omega2_im", omega2_im},
                     {"cycle", cycle}});
  r.human.push_back("Bell_" + std::to_string(2 * m) + " = " + fmt_ld(fine) + "  (delta " +
                    fmt_ld(std::fabs(fine - coarse)) + ", cycle " + cycle + ")");
  return emit("bell", r, as_json);
}

// ---- report ----------------------------------------------------------

int run_report(unsigned max_m, const QuadFlags& qf, bool as_json) {
  Report r;
  r.args = {{"max_m", max_m}, {"quadrature", qf.echo()}};
  r.tolerances = {{"numeric_relative", fmt_ld(qf.tolerance)}};
  for (unsigned m = 1; m <= max_m; ++m) {
    const auto qr = bernkit::bernoulli_numeric(m, qf.spec());
    const bernkit::BigRational exact = bernkit::bernoulli_oracle(2 * m);
    const long double e = exact.to_long_double();
    const long double abs_err = std::fabs(qr.value - e);
    const long double rel_err = abs_err / std::fabs(e);
    const bool ok = rel_err <= static_cast<long double>(qf.tolerance);
    r.pass = r.pass && ok;
    r.items.push_back({{"m", m},
                       {"value", fmt_ld(qr.value)},
                       {"exact", exact.to_string()},
                       {"abs_error", fmt_ld(abs_err)},
                       {"rel_error", fmt_ld(rel_err)},
                       {"tail_bound", fmt_ld(qr.tail_bound)},
                       {"nodes", qr.total_nodes},
                       {"pass", ok}});
    r.human.push_back("m=" + std::to_string(m) + "  B_" + std::to_string(2 * m) + " = " +
                      fmt_ld(qr.value) + "  exact " + exact.to_string() + "  rel_err " +
                      fmt_ld(rel_err) + "  " + (ok ? "pass" : "FAIL"));
  }
  return emit("report", r, as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bernoulli numbers by four routes (exact recurrence, tangent-polynomial "
      "integrals, soliton integrals, quadrature) with identity verification"};
  app.set_version_flag("--version", BERNKIT_VERSION);
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json,
               "Emit one structured JSON document on stdout instead of text");

  auto* c_bern = app.add_subcommand("bernoulli", "Compute B_n by one or more routes");
  unsigned bern_n = 0;
  std::vector<std::string> routes;
  QuadFlags bern_qf;
  c_bern->add_option("n", bern_n, "Index of the Bernoulli number")->required();
  c_bern->add_option("--route", routes,
                     "Comma-separated routes: oracle|tangent|quadrature|kdv "
                     "(tangent: n >= 2; kdv: even n in [2, 40]; quadrature: even n in "
                     "[2, 24])")
      ->delimiter(',');
  bern_qf.add_flags(c_bern);

  auto* c_tan = app.add_subcommand("tangent", "Coefficients of T_n");
  unsigned tan_n = 0;
  c_tan->add_option("n", tan_n, "Index")->required();

  auto* c_faul = app.add_subcommand("faulhaber", "Coefficient vector of F_m");
  unsigned faul_m = 1;
  c_faul->add_option("m", faul_m, "Index (m >= 1)")->required();

  auto* c_dens = app.add_subcommand("kdv-density", "Canonical conserved density P_m");
  unsigned dens_m = 0;
  c_dens->add_option("m", dens_m, "Index (0 <= m <= 8)")->required();

  auto* c_verify = app.add_subcommand(
      "verify", "Run a verification suite; exit status is nonzero on any failure");
  std::string suite;
  unsigned v_max_m = 0, v_max_n = 20, v_order = 0;
  c_verify->add_option("suite", suite, "lemma1|lemma2|eq1|eq12|alpha2|parts|ode14")
      ->required();
  auto* opt_max_m = c_verify->add_option("--max-m", v_max_m,
                                         "Largest m (defaults: lemma2 20, eq1 4, "
                                         "alpha2 12, parts 10)");
  c_verify->add_option("--max-n", v_max_n, "Largest n (eq12; default 20)");
  auto* opt_order = c_verify->add_option(
      "--order", v_order, "Series order (lemma1: default 12; ode14: default 20)");

  auto* c_bh =
      app.add_subcommand("bh", "Bernoulli-Hurwitz numbers from exact invariants");
  std::string g2s = "0/1", g3s = "0/1";
  unsigned bh_k = 5;
  c_bh->add_option("--g2", g2s, "g2 as 'p/q'")->required();
  c_bh->add_option("--g3", g3s, "g3 as 'p/q'")->required();
  c_bh->add_option("--k", bh_k, "Number of coefficients")->capture_default_str();

  auto* c_bell = app.add_subcommand("bell",
                                    "Cycle integral of the squared p-function "
                                    "derivative on a rectangular lattice");
  double omega1 = 1.0, omega2_im = 1.0;
  unsigned bell_m = 2, bell_nodes = 256;
  c_bell->add_option("--omega1", omega1, "Real half-period")->capture_default_str();
  c_bell->add_option("--omega2-im", omega2_im,
                     "Imaginary part of the second half-period")
      ->capture_default_str();
  c_bell->add_option("--m", bell_m, "Index (m > 1)")->capture_default_str();
  c_bell->add_option("--nodes", bell_nodes, "Trapezoid nodes on the cycle")
      ->capture_default_str();

  auto* c_report =
      app.add_subcommand("report", "Quadrature-vs-exact table for m = 1..max-m");
  unsigned rep_max_m = 10;
  QuadFlags rep_qf;
  c_report->add_option("--max-m", rep_max_m, "Largest m")->capture_default_str();
  rep_qf.add_flags(c_report);

  // lets --json appear after the subcommand arguments
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  int rc = 1;
  try {
    if (*c_bern) {
      rc = run_bernoulli(bern_n, routes, bern_qf, as_json);
    } else if (*c_tan) {
      rc = run_tangent(tan_n, as_json);
    } else if (*c_faul) {
      if (faul_m < 1) throw CLI::ValidationError("faulhaber", "m must be >= 1");
      rc = run_faulhaber(faul_m, as_json);
    } else if (*c_dens) {
      rc = run_kdv_density(dens_m, as_json);
    } else if (*c_verify) {
      unsigned max_m = v_max_m;
      if (opt_max_m->count() == 0) {
        if (suite == "lemma2") {
          max_m = 20;
        } else if (suite == "eq1") {
          max_m = 4;
        } else if (suite == "alpha2") {
          max_m = 12;
        } else {
          max_m = 10;
        }
      }
      rc = run_verify(suite, max_m, v_max_n, v_order, opt_order->count() > 0, as_json);
    } else if (*c_bh) {
      rc = run_bh(g2s, g3s, bh_k, as_json);
    } else if (*c_bell) {
      rc = run_bell(omega1, omega2_im, bell_m, bell_nodes, as_json);
    } else if (*c_report) {
      rc = run_report(rep_max_m, rep_qf, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!as_json) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << "elapsed_ms=" << elapsed << "\n";
  }
  return rc;
}
