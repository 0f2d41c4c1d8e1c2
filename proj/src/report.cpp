#include "bubblecert/report.hpp"

#include <chrono>
#include <ctime>
#include <future>
#include <iomanip>
#include <map>
#include <sstream>
#include <ostream>

#include "bubblecert/curvature.hpp"
#include "bubblecert/eta.hpp"
#include "bubblecert/identities.hpp"

namespace bubblecert {

namespace {

// Agreement threshold between the exact and floating eta backends.
constexpr double kEtaCrossTolerance = 1e-8;

FloatValue float_value(const BigFloat& v) { return {v.str(), v.precision()}; }

IdentityRow identity_row(const IdentityReport& r) {
  IdentityRow row;
  row.identity = r.identity_name;
  row.k = r.parameter_k;
  if (r.sample_point) row.x_over_pi = to_fraction_string(*r.sample_point);
  row.lhs = float_value(r.lhs);
  row.rhs = float_value(r.rhs);
  std::ostringstream res;
  res << std::setprecision(6) << r.residual.to_double();
  row.residual = res.str();
  row.tolerance = r.tolerance;
  row.passed = r.passed;
  return row;
}

ClassRow class_row(const ClassInfimum& ci) {
  ClassRow row;
  row.m = ci.cls.m.str();
  row.n = ci.cls.n.str();
  row.k = ci.cls.k;
  row.infimum_sq = to_fraction_string(ci.infimum.infimum_sq);
  if (ci.infimum.vanishing_point) row.vanishing_point = to_fraction_string(*ci.infimum.vanishing_point);
  if (ci.infimum.argmin) row.argmin = to_fraction_string(*ci.infimum.argmin);
  if (ci.infimum.critical_point) row.critical_point = to_fraction_string(*ci.infimum.critical_point);
  return row;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

EtaSection run_eta(std::int64_t k_min, std::int64_t k_max, const FloatContext& ctx,
                   std::int64_t float_k_max) {
  if (k_min > k_max) throw ConfigError("empty k range for the eta table", 0, "k_min");
  if (k_min < 2) throw ConfigError("eta table needs k >= 2 (p = k^2 - 1 must be at least 2)", 0, "k_min");
  ctx.validate();
  EtaSection out;
  out.passed = true;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const LensSpace lens = LensSpace::for_plumbing(k);
    const Rational exact = eta_exact(lens);
    const Rational closed = eta_closed_form(k);
    EtaRow row;
    row.k = k;
    row.p = lens.p().str();
    row.eta_exact = to_fraction_string(exact);
    row.eta_closed_form = to_fraction_string(closed);
    row.agree = exact == closed;
    if (k <= float_k_max) {
      const BigFloat f = eta_float(lens, ctx);
      row.eta_float = float_value(f);
      row.agree = row.agree && abs(f - BigFloat(exact, ctx.precision_bits)).to_double() < kEtaCrossTolerance;
    }
    out.passed = out.passed && row.agree;
    out.rows.push_back(std::move(row));
  }
  return out;
}

IdentitySection run_identities(std::int64_t k_max, std::int64_t samples, std::uint64_t seed,
                               const FloatContext& ctx) {
  if (k_max < 1) throw ConfigError("identities need k_max >= 1", 0, "k_max");
  if (samples < 1) throw ConfigError("identities need at least one sample", 0, "samples");
  ctx.validate();
  IdentitySection out;
  const auto record = [&](const IdentityReport& r) {
    if (!r.passed) ++out.failures;
    out.rows.push_back(identity_row(r));
  };

  SamplePointGenerator gen(seed);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t s = 0; s < samples; ++s) {
      const Rational x = gen.next(k);
      record(verify_sin_product(k, x, ctx));
      record(verify_cot_sum(k, x, ctx));
      record(verify_cot2_sum(k, x, ctx));
    }
  }
  for (std::int64_t k = 1; k <= std::max<std::int64_t>(k_max, 100); ++k) {
    record(verify_cot2_zero_limit(k, ctx));
    out.cot2_exact.push_back({k, to_fraction_string(cot2_zero_limit(k))});
  }
  for (std::int64_t k = 2; k <= k_max; ++k) {
    const MainIdentityReport m = verify_main_identity(k, ctx);
    record(m.numeric);
    if (!m.exact_match) ++out.failures;
    out.main_identity_exact.push_back({k, to_fraction_string(m.dedekind_value)});
  }
  out.passed = out.failures == 0;
  return out;
}

ClassificationSection run_classify(const Rational& calabi_A_bound, std::int64_t k_max) {
  if (calabi_A_bound <= 0) throw ConfigError("calabi bound must be positive", 0, "calabi_A_bound");
  if (k_max < 2) throw ConfigError("classification needs k_max >= 2", 0, "k_max");
  const CurvatureBudget budget = compact_budgets(calabi_A_bound);
  ClassificationSection out;
  out.calabi_A_bound = to_fraction_string(calabi_A_bound);
  out.s_squared_budget = to_fraction_string(budget.s_squared.coefficient);
  out.w_minus_budget = to_fraction_string(budget.w_minus.coefficient);
  out.ric0_budget = to_fraction_string(budget.ric0.coefficient);
  out.b2_1 = classify_b2_1(budget.ric0, budget.strict);
  const PlumbingClassification b22 = classify_b2_2(budget.w_minus, k_max);
  out.b2_2 = b22.admitted;

  // Certificate: each admitted candidate satisfies both scalar-flat formulas.
  out.passed = true;
  for (const std::int64_t k : out.b2_1) {
    const AleCandidate c = AleCandidate::line_bundle(k);
    const bool ok = ale_ric0(c, ale_w_minus(c)) == line_bundle_ric0(k);
    out.passed = out.passed && ok;
  }
  for (const PlumbingRow& r : b22.rows) {
    PlumbingRowOut row{r.k, r.gamma_order.str(), to_fraction_string(r.eta),
                       to_fraction_string(r.implied_ric0.coefficient), r.ric0_negative, r.admitted};
    out.b2_2_rows.push_back(std::move(row));
    if (!r.admitted) continue;
    const AleCandidate c = AleCandidate::plumbing(r.k);
    const PiSquared ric0 = ale_ric0(c, ale_w_minus(c));
    out.passed = out.passed && combined_constraint_residual(c, ric0) == 0 && ric0 == r.implied_ric0;
  }

  if (budget.w_minus != PiSquared(Rational(24)))
    out.deviations.push_back("w_minus budget " + budget.w_minus.str() + " differs from 24π²");
  if (budget.ric0 != PiSquared(Rational(16)))
    out.deviations.push_back("ric0 budget " + budget.ric0.str() + " differs from 16π²");
  if (out.b2_1 != std::vector<std::int64_t>{1, 2, 3, 4, 5})
    out.deviations.push_back("b2=1 set " + join(out.b2_1) + " differs from {1,2,3,4,5}");
  if (out.b2_2 != std::vector<std::int64_t>{2})
    out.deviations.push_back("b2=2 set " + join(out.b2_2) + " differs from {2}");
  return out;
}

ExclusionSection run_exclude(const Scenario& scenario) {
  const ExclusionReport r = exclusion_verdict(scenario.interval());
  ExclusionSection out;
  out.interval_a = to_fraction_string(r.interval.lo());
  if (r.interval.hi()) out.interval_b = to_fraction_string(*r.interval.hi());
  for (const ClassInfimum& ci : r.per_class) out.per_class.push_back(class_row(ci));
  out.global_min_sq = to_fraction_string(r.global_min_sq);
  for (const PellClass& w : r.witnesses) {
    for (const ClassInfimum& ci : r.per_class)
      if (ci.cls == w) out.witnesses.push_back(class_row(ci));
  }
  out.excluded = r.excluded;
  out.tail_bound_m = r.tail_bound_m;
  out.tail_level = to_fraction_string(r.tail_level);
  out.passed = r.excluded;
  return out;
}

Report run_all(const Scenario& scenario) {
  scenario.validate();
  const FloatContext ctx = scenario.float_context();
  auto eta = std::async(std::launch::async, [&] {
    return run_eta(2, scenario.k_max, ctx, std::min<std::int64_t>(scenario.k_max, 50));
  });
  auto ids = std::async(std::launch::async, [&] {
    return run_identities(scenario.identity_k_max, scenario.samples, scenario.seed, ctx);
  });
  auto cls = std::async(std::launch::async,
                        [&] { return run_classify(scenario.calabi_A_bound, scenario.k_max); });
  auto exc = std::async(std::launch::async, [&] { return run_exclude(scenario); });

  Report report;
  report.scenario = scenario;
  report.sections.eta_table = eta.get();
  report.sections.identity_residuals = ids.get();
  report.sections.classification = cls.get();
  report.sections.exclusion = exc.get();
  return report;
}

bool Report::passed() const { return failed_sections().empty(); }

std::vector<std::string> Report::failed_sections() const {
  std::vector<std::string> out;
  if (sections.eta_table && !sections.eta_table->passed) out.push_back("eta_table");
  if (sections.identity_residuals && !sections.identity_residuals->passed)
    out.push_back("identity_residuals");
  if (sections.classification && !sections.classification->passed) out.push_back("classification");
  if (sections.exclusion && !sections.exclusion->passed) out.push_back("exclusion");
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void print_report(std::ostream& os, const Report& report) {
  const Sections& s = report.sections;
  if (s.eta_table) {
    os << "== eta invariants of L(k^2-1, k) ==\n";
    os << std::left << std::setw(6) << "k" << std::setw(10) << "p" << std::setw(22) << "eta exact"
       << std::setw(22) << "closed form" << std::setw(26) << "eta float" << "agree\n";
    for (const EtaRow& r : s.eta_table->rows) {
      os << std::setw(6) << r.k << std::setw(10) << r.p
         << std::setw(22) << to_display_string(parse_rational(r.eta_exact))
         << std::setw(22) << to_display_string(parse_rational(r.eta_closed_form))
         << std::setw(26) << (r.eta_float ? r.eta_float->value.substr(0, 24) : "-")
         << (r.agree ? "yes" : "NO") << "\n";
    }
    os << "eta_table: " << (s.eta_table->passed ? "PASS" : "FAIL") << "\n\n";
  }
  if (s.identity_residuals) {
    const IdentitySection& ids = *s.identity_residuals;
    os << "== trigonometric identities ==\n";
    struct Tally { std::int64_t checks = 0, failed = 0; double worst = 0; };
    std::map<std::string, Tally> tally;
    for (const IdentityRow& r : ids.rows) {
      Tally& t = tally[r.identity];
      ++t.checks;
      if (!r.passed) ++t.failed;
      t.worst = std::max(t.worst, std::stod(r.residual));
    }
    for (const auto& [name, t] : tally) {
      os << std::left << std::setw(18) << name << " checks " << std::setw(6) << t.checks
         << " failed " << std::setw(4) << t.failed << " max residual " << t.worst << "\n";
    }
    os << "cot2_zero_limit exact values emitted for k = 1.." << ids.cot2_exact.size() << "\n";
    os << "main identity exact (Dedekind) checks: " << ids.main_identity_exact.size() << "\n";
    os << "identity_residuals: " << (ids.passed ? "PASS" : "FAIL") << "\n\n";
  }
  if (s.classification) {
    const ClassificationSection& c = *s.classification;
    os << "== curvature budgets and bubble classification ==\n";
    os << "calabi bound A      : " << to_display_string(parse_rational(c.calabi_A_bound)) << "\n";
    os << "int s^2     <       : " << PiSquared(parse_rational(c.s_squared_budget)) << "\n";
    os << "int |W-|^2  <       : " << PiSquared(parse_rational(c.w_minus_budget)) << "\n";
    os << "int |Ric0|^2 <      : " << PiSquared(parse_rational(c.ric0_budget)) << "\n";
    os << "b2 = 1 degrees k    : " << join(c.b2_1) << "\n";
    os << "b2 = 2 plumbings k  : " << join(c.b2_2) << "\n";
    for (const PlumbingRowOut& r : c.b2_2_rows) {
      if (r.k > 6 && !r.admitted) continue;
      os << "  k=" << r.k << " |Gamma|=" << r.gamma_order
         << " eta=" << to_display_string(parse_rational(r.eta))
         << " ric0=" << PiSquared(parse_rational(r.implied_ric0))
         << (r.admitted ? " admitted" : "") << (r.ric0_negative ? " NEGATIVE" : "") << "\n";
    }
    for (const std::string& d : c.deviations) os << "deviation: " << d << "\n";
    os << "classification: " << (c.passed ? "PASS" : "FAIL") << "\n\n";
  }
  if (s.exclusion) {
    const ExclusionSection& e = *s.exclusion;
    os << "== homology exclusion on [" << to_display_string(parse_rational(e.interval_a)) << ", "
       << (e.interval_b ? to_display_string(parse_rational(*e.interval_b)) : "inf") << "] ==\n";
    os << std::left << std::setw(6) << "m" << std::setw(6) << "n" << std::setw(4) << "k"
       << std::setw(24) << "inf eps^2" << "attained at\n";
    for (const ClassRow& r : e.per_class) {
      os << std::setw(6) << r.m << std::setw(6) << r.n << std::setw(4) << r.k << std::setw(24)
         << to_display_string(parse_rational(r.infimum_sq))
         << (r.argmin ? to_display_string(parse_rational(*r.argmin)) : "x -> inf")
         << (r.vanishing_point ? "  (vanishes)" : "") << "\n";
    }
    os << "tail bound |m| <= " << e.tail_bound_m << " (beyond: eps^2 >= "
       << to_display_string(parse_rational(e.tail_level)) << ")\n";
    os << "global min eps^2 = " << to_display_string(parse_rational(e.global_min_sq)) << "\n";
    os << "excluded = " << (e.excluded ? "true" : "false") << "\n";
    os << "exclusion: " << (e.passed ? "PASS" : "FAIL") << "\n\n";
  }
}

}  // namespace bubblecert
