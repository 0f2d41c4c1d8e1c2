#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bubblecert/big_float.hpp"
#include "bubblecert/classifier.hpp"
#include "bubblecert/rational.hpp"

namespace bubblecert {

inline constexpr const char* kToolVersion = "1.0.0";

/// Malformed scenario file or invalid option value. Carries the offending
/// line (0 when not from a file) and field name.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& msg, int line = 0, std::string field = {})
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line),
        field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct Scenario {
  std::string name = "default";
  Rational interval_a{1, 10};
  /// Absent means the unbounded interval [A, infinity).
  std::optional<Rational> interval_b = Rational(10);
  Rational calabi_A_bound{9};
  std::int64_t k_max = 100;
  unsigned float_precision_bits = FloatContext::kDefaultBits;
  double tolerance = 1e-10;
  std::int64_t identity_k_max = 30;
  std::int64_t samples = 20;
  std::uint64_t seed = 20260101;

  /// Throws ConfigError when an invariant does not hold.
  void validate() const;
  ParamInterval interval() const;
  FloatContext float_context() const { return {float_precision_bits, tolerance}; }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Applies one `key = value` assignment. Throws ConfigError naming the field.
void apply_setting(Scenario& s, const std::string& key, const std::string& value, int line = 0);

/// Parses a declarative scenario file: one `key = value` per line, `#`
/// starts a comment. Unset keys keep their defaults.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

/// A floating value together with the precision it was computed at.
struct FloatValue {
  std::string value;
  unsigned precision_bits = 0;
  friend bool operator==(const FloatValue&, const FloatValue&) = default;
};

struct EtaRow {
  std::int64_t k = 0;
  std::string p;
  std::string eta_exact;
  std::string eta_closed_form;
  std::optional<FloatValue> eta_float;
  bool agree = false;
  friend bool operator==(const EtaRow&, const EtaRow&) = default;
};

struct EtaSection {
  std::vector<EtaRow> rows;
  bool passed = false;
  friend bool operator==(const EtaSection&, const EtaSection&) = default;
};

struct IdentityRow {
  std::string identity;
  std::int64_t k = 0;
  std::optional<std::string> x_over_pi;
  FloatValue lhs;
  FloatValue rhs;
  std::string residual;
  double tolerance = 0.0;
  bool passed = false;
  friend bool operator==(const IdentityRow&, const IdentityRow&) = default;
};

struct ExactValueRow {
  std::int64_t k = 0;
  std::string value;
  friend bool operator==(const ExactValueRow&, const ExactValueRow&) = default;
};

struct IdentitySection {
  std::vector<IdentityRow> rows;
  /// k(k-1)/3 for every k of the cot^2 zero-limit identity.
  std::vector<ExactValueRow> cot2_exact;
  /// 4(k^2-1) s(k, k^2-1) for the main identity, compared with the closed form.
  std::vector<ExactValueRow> main_identity_exact;
  std::int64_t failures = 0;
  bool passed = false;
  friend bool operator==(const IdentitySection&, const IdentitySection&) = default;
};

struct PlumbingRowOut {
  std::int64_t k = 0;
  std::string gamma_order;
  std::string eta;
  std::string implied_ric0;
  bool ric0_negative = false;
  bool admitted = false;
  friend bool operator==(const PlumbingRowOut&, const PlumbingRowOut&) = default;
};

struct ClassificationSection {
  std::string calabi_A_bound;
  std::string s_squared_budget;
  std::string w_minus_budget;
  std::string ric0_budget;
  std::vector<std::int64_t> b2_1;
  std::vector<std::int64_t> b2_2;
  std::vector<PlumbingRowOut> b2_2_rows;
  /// Differences from the reference outcome {1..5}, {2}, 24π², 16π².
  std::vector<std::string> deviations;
  bool passed = false;
  friend bool operator==(const ClassificationSection&, const ClassificationSection&) = default;
};

struct ClassRow {
  std::string m;
  std::string n;
  std::int64_t k = 0;
  std::string infimum_sq;
  std::optional<std::string> vanishing_point;
  std::optional<std::string> argmin;
  std::optional<std::string> critical_point;
  friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

struct ExclusionSection {
  std::string interval_a;
  std::optional<std::string> interval_b;
  std::vector<ClassRow> per_class;
  std::string global_min_sq;
  std::vector<ClassRow> witnesses;
  bool excluded = false;
  std::int64_t tail_bound_m = 0;
  std::string tail_level;
  bool passed = false;
  friend bool operator==(const ExclusionSection&, const ExclusionSection&) = default;
};

struct Sections {
  std::optional<EtaSection> eta_table;
  std::optional<IdentitySection> identity_residuals;
  std::optional<ClassificationSection> classification;
  std::optional<ExclusionSection> exclusion;
  friend bool operator==(const Sections&, const Sections&) = default;
};

struct Report {
  Scenario scenario;
  Sections sections;
  std::string version = kToolVersion;
  std::string timestamp;

  /// True when every present section passed.
  bool passed() const;
  /// Names of sections whose certificates failed.
  std::vector<std::string> failed_sections() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// eta table for k_min..k_max; the float column is filled only up to
/// float_k_max. Throws ConfigError for an empty range or k_min < 2.
EtaSection run_eta(std::int64_t k_min, std::int64_t k_max, const FloatContext& ctx,
                   std::int64_t float_k_max = 50);

/// The sine and cotangent identities at `samples` seeded points for k = 1..k_max,
/// the zero-limit identity with its exact value up to max(k_max, 100), and
/// the main identity for k = 2..k_max.
IdentitySection run_identities(std::int64_t k_max, std::int64_t samples, std::uint64_t seed,
                               const FloatContext& ctx);

ClassificationSection run_classify(const Rational& calabi_A_bound, std::int64_t k_max);

ExclusionSection run_exclude(const Scenario& scenario);

/// All sections, computed concurrently. The timestamp is left empty; the
/// caller stamps it.
Report run_all(const Scenario& scenario);

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Plain-text rendering of each present section.
void print_report(std::ostream& os, const Report& report);

std::string utc_timestamp();

}  // namespace bubblecert
