// Command-line front end for the certificate computations.
//
// Exit codes: 0 all checks pass, 1 a certificate failed, 2 configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bubblecert/curvature.hpp"
#include "bubblecert/report.hpp"

namespace {

using namespace bubblecert;

constexpr int kExitPass = 0;
constexpr int kExitCertificateFailure = 1;
constexpr int kExitConfigError = 2;

struct Options {
  std::string json_path;
  std::optional<unsigned> precision_bits;
  std::optional<double> tolerance;

  std::int64_t eta_k_min = 2;
  std::int64_t eta_k_max = 10;

  std::int64_t id_k_max = 30;
  std::int64_t id_samples = 20;
  std::optional<std::uint64_t> id_seed;

  std::optional<std::string> calabi_bound;
  std::optional<std::int64_t> classify_k_max;

  std::optional<std::string> interval_a;
  std::optional<std::string> interval_b;

  std::string config_path;
};

void apply_overrides(Scenario& s, const Options& o) {
  if (o.precision_bits) s.float_precision_bits = *o.precision_bits;
  if (o.tolerance) s.tolerance = *o.tolerance;
  if (o.calabi_bound) apply_setting(s, "calabi_A_bound", *o.calabi_bound);
  if (o.classify_k_max) s.k_max = *o.classify_k_max;
  if (o.interval_a) apply_setting(s, "interval_a", *o.interval_a);
  if (o.interval_b) apply_setting(s, "interval_b", *o.interval_b);
  if (o.id_seed) s.seed = *o.id_seed;
  s.validate();
}

void print_budgets(std::ostream& os, const Rational& bound) {
  const CurvatureBudget b = compact_budgets(bound);
  os << "== compact curvature budgets for A([omega]) < " << to_display_string(bound) << " ==\n";
  os << "int s^2      < " << b.s_squared << "\n";
  os << "int |W-|^2   < " << b.w_minus << "\n";
  os << "int |Ric0|^2 < " << b.ric0 << "\n";
}

int finish(Report report, const Options& o, bool print_sections = true) {
  report.timestamp = utc_timestamp();
  if (print_sections) print_report(std::cout, report);
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) {
      std::cerr << "error: cannot write JSON report to '" << o.json_path << "'\n";
      return kExitConfigError;
    }
    out << report_to_json(report).dump(2) << "\n";
  }
  const auto failed = report.failed_sections();
  for (const std::string& name : failed) std::cerr << "certificate failure in section: " << name << "\n";
  return failed.empty() ? kExitPass : kExitCertificateFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified computations for bubble exclusion on CP^2 # 2(-CP^2)"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--json", o.json_path, "Write the machine-readable report to this path");
  app.add_option("--precision-bits", o.precision_bits, "Floating precision in bits (>= 53)");
  app.add_option("--tolerance", o.tolerance, "Absolute residual tolerance");

  auto* eta = app.add_subcommand("eta", "eta invariants of L(k^2-1, k)");
  eta->add_option("--k-min", o.eta_k_min, "Smallest k")->capture_default_str();
  eta->add_option("--k-max", o.eta_k_max, "Largest k")->capture_default_str();

  auto* ids = app.add_subcommand("identities", "Trigonometric identity residuals");
  ids->add_option("--k-max", o.id_k_max, "Largest k")->capture_default_str();
  ids->add_option("--samples", o.id_samples, "Sample points per k")->capture_default_str();
  ids->add_option("--seed", o.id_seed, "Sample generator seed");

  auto* budgets = app.add_subcommand("budgets", "Curvature budgets of the compact surface");
  budgets->add_option("--calabi-bound", o.calabi_bound, "Upper bound on A([omega]) (default 9)");

  auto* classify = app.add_subcommand("classify", "Classify deepest-bubble topologies");
  classify->add_option("--calabi-bound", o.calabi_bound, "Upper bound on A([omega]) (default 9)");
  classify->add_option("--k-max", o.classify_k_max, "Search cutoff for b2 = 2 (default 100)");

  auto* exclude = app.add_subcommand("exclude", "Certified homology exclusion on [A, B]");
  exclude->add_option("--interval-a", o.interval_a, "Lower end A > 0 (default 1/10)");
  exclude->add_option("--interval-b", o.interval_b, "Upper end B > A or 'inf' (default 10)");

  auto* all = app.add_subcommand("all", "Every section for one scenario");
  all->add_option("--config", o.config_path, "Scenario file with key = value lines");
  all->add_option("--calabi-bound", o.calabi_bound, "Override calabi_A_bound");
  all->add_option("--k-max", o.classify_k_max, "Override k_max");
  all->add_option("--interval-a", o.interval_a, "Override interval_a");
  all->add_option("--interval-b", o.interval_b, "Override interval_b");
  all->add_option("--seed", o.id_seed, "Override seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    Scenario scenario;
    if (*all && !o.config_path.empty()) scenario = load_scenario(o.config_path);
    apply_overrides(scenario, o);
    const FloatContext ctx = scenario.float_context();

    Report report;
    report.scenario = scenario;
    if (*eta) {
      report.sections.eta_table = run_eta(o.eta_k_min, o.eta_k_max, ctx);
    } else if (*ids) {
      report.sections.identity_residuals = run_identities(o.id_k_max, o.id_samples, scenario.seed, ctx);
    } else if (*budgets) {
      print_budgets(std::cout, scenario.calabi_A_bound);
      report.sections.classification = run_classify(scenario.calabi_A_bound, scenario.k_max);
      return finish(std::move(report), o, false);
    } else if (*classify) {
      report.sections.classification = run_classify(scenario.calabi_A_bound, scenario.k_max);
    } else if (*exclude) {
      report.sections.exclusion = run_exclude(scenario);
    } else {
      report = run_all(scenario);
    }
    return finish(std::move(report), o);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error";
    if (!e.field().empty()) std::cerr << " (field '" << e.field() << "')";
    std::cerr << ": " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kExitCertificateFailure;
  }
}
