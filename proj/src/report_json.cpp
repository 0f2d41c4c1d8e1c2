#include "bubblecert/report.hpp"

namespace bubblecert {

using nlohmann::json;

namespace {

template <typename T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const Scenario& s) {
  j = json{{"name", s.name},
           {"interval_a", to_fraction_string(s.interval_a)},
           {"calabi_A_bound", to_fraction_string(s.calabi_A_bound)},
           {"k_max", s.k_max},
           {"float_precision_bits", s.float_precision_bits},
           {"tolerance", s.tolerance},
           {"identity_k_max", s.identity_k_max},
           {"samples", s.samples},
           {"seed", s.seed}};
  j["interval_b"] = s.interval_b ? json(to_fraction_string(*s.interval_b)) : json(nullptr);
}

void from_json(const json& j, Scenario& s) {
  s.name = j.at("name").get<std::string>();
  s.interval_a = parse_rational(j.at("interval_a").get<std::string>());
  const auto b = get_opt<std::string>(j, "interval_b");
  s.interval_b = b ? std::optional<Rational>(parse_rational(*b)) : std::nullopt;
  s.calabi_A_bound = parse_rational(j.at("calabi_A_bound").get<std::string>());
  j.at("k_max").get_to(s.k_max);
  j.at("float_precision_bits").get_to(s.float_precision_bits);
  j.at("tolerance").get_to(s.tolerance);
  j.at("identity_k_max").get_to(s.identity_k_max);
  j.at("samples").get_to(s.samples);
  j.at("seed").get_to(s.seed);
}

void to_json(json& j, const FloatValue& v) {
  j = json{{"value", v.value}, {"precision_bits", v.precision_bits}};
}
void from_json(const json& j, FloatValue& v) {
  j.at("value").get_to(v.value);
  j.at("precision_bits").get_to(v.precision_bits);
}

void to_json(json& j, const EtaRow& r) {
  j = json{{"k", r.k},
           {"p", r.p},
           {"eta_exact", r.eta_exact},
           {"eta_closed_form", r.eta_closed_form},
           {"agree", r.agree}};
  put_opt(j, "eta_float", r.eta_float);
}
void from_json(const json& j, EtaRow& r) {
  j.at("k").get_to(r.k);
  j.at("p").get_to(r.p);
  j.at("eta_exact").get_to(r.eta_exact);
  j.at("eta_closed_form").get_to(r.eta_closed_form);
  j.at("agree").get_to(r.agree);
  r.eta_float = get_opt<FloatValue>(j, "eta_float");
}

void to_json(json& j, const EtaSection& s) { j = json{{"rows", s.rows}, {"passed", s.passed}}; }
void from_json(const json& j, EtaSection& s) {
  j.at("rows").get_to(s.rows);
  j.at("passed").get_to(s.passed);
}

void to_json(json& j, const IdentityRow& r) {
  j = json{{"identity", r.identity}, {"k", r.k},           {"lhs", r.lhs},
           {"rhs", r.rhs},           {"residual", r.residual}, {"tolerance", r.tolerance},
           {"passed", r.passed}};
  put_opt(j, "x_over_pi", r.x_over_pi);
}
void from_json(const json& j, IdentityRow& r) {
  j.at("identity").get_to(r.identity);
  j.at("k").get_to(r.k);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("residual").get_to(r.residual);
  j.at("tolerance").get_to(r.tolerance);
  j.at("passed").get_to(r.passed);
  r.x_over_pi = get_opt<std::string>(j, "x_over_pi");
}

void to_json(json& j, const ExactValueRow& r) { j = json{{"k", r.k}, {"value", r.value}}; }
void from_json(const json& j, ExactValueRow& r) {
  j.at("k").get_to(r.k);
  j.at("value").get_to(r.value);
}

void to_json(json& j, const IdentitySection& s) {
  j = json{{"rows", s.rows},
           {"cot2_exact", s.cot2_exact},
           {"main_identity_exact", s.main_identity_exact},
           {"failures", s.failures},
           {"passed", s.passed}};
}
void from_json(const json& j, IdentitySection& s) {
  j.at("rows").get_to(s.rows);
  j.at("cot2_exact").get_to(s.cot2_exact);
  j.at("main_identity_exact").get_to(s.main_identity_exact);
  j.at("failures").get_to(s.failures);
  j.at("passed").get_to(s.passed);
}

void to_json(json& j, const PlumbingRowOut& r) {
  j = json{{"k", r.k},
           {"gamma_order", r.gamma_order},
           {"eta", r.eta},
           {"implied_ric0", r.implied_ric0},
           {"ric0_negative", r.ric0_negative},
           {"admitted", r.admitted}};
}
void from_json(const json& j, PlumbingRowOut& r) {
  j.at("k").get_to(r.k);
  j.at("gamma_order").get_to(r.gamma_order);
  j.at("eta").get_to(r.eta);
  j.at("implied_ric0").get_to(r.implied_ric0);
  j.at("ric0_negative").get_to(r.ric0_negative);
  j.at("admitted").get_to(r.admitted);
}

void to_json(json& j, const ClassificationSection& s) {
  j = json{{"calabi_A_bound", s.calabi_A_bound},
           {"s_squared_budget", s.s_squared_budget},
           {"w_minus_budget", s.w_minus_budget},
           {"ric0_budget", s.ric0_budget},
           {"b2_1", s.b2_1},
           {"b2_2", s.b2_2},
           {"b2_2_rows", s.b2_2_rows},
           {"deviations", s.deviations},
           {"passed", s.passed}};
}
void from_json(const json& j, ClassificationSection& s) {
  j.at("calabi_A_bound").get_to(s.calabi_A_bound);
  j.at("s_squared_budget").get_to(s.s_squared_budget);
  j.at("w_minus_budget").get_to(s.w_minus_budget);
  j.at("ric0_budget").get_to(s.ric0_budget);
  j.at("b2_1").get_to(s.b2_1);
  j.at("b2_2").get_to(s.b2_2);
  j.at("b2_2_rows").get_to(s.b2_2_rows);
  j.at("deviations").get_to(s.deviations);
  j.at("passed").get_to(s.passed);
}

void to_json(json& j, const ClassRow& r) {
  j = json{{"m", r.m}, {"n", r.n}, {"k", r.k}, {"infimum_sq", r.infimum_sq}};
  put_opt(j, "vanishing_point", r.vanishing_point);
  put_opt(j, "argmin", r.argmin);
  put_opt(j, "critical_point", r.critical_point);
}
void from_json(const json& j, ClassRow& r) {
  j.at("m").get_to(r.m);
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  j.at("infimum_sq").get_to(r.infimum_sq);
  r.vanishing_point = get_opt<std::string>(j, "vanishing_point");
  r.argmin = get_opt<std::string>(j, "argmin");
  r.critical_point = get_opt<std::string>(j, "critical_point");
}

void to_json(json& j, const ExclusionSection& s) {
  j = json{{"interval_a", s.interval_a},
           {"per_class", s.per_class},
           {"global_min_sq", s.global_min_sq},
           {"witnesses", s.witnesses},
           {"excluded", s.excluded},
           {"tail_bound_m", s.tail_bound_m},
           {"tail_level", s.tail_level},
           {"passed", s.passed}};
  put_opt(j, "interval_b", s.interval_b);
}
void from_json(const json& j, ExclusionSection& s) {
  j.at("interval_a").get_to(s.interval_a);
  s.interval_b = get_opt<std::string>(j, "interval_b");
  j.at("per_class").get_to(s.per_class);
  j.at("global_min_sq").get_to(s.global_min_sq);
  j.at("witnesses").get_to(s.witnesses);
  j.at("excluded").get_to(s.excluded);
  j.at("tail_bound_m").get_to(s.tail_bound_m);
  j.at("tail_level").get_to(s.tail_level);
  j.at("passed").get_to(s.passed);
}

json report_to_json(const Report& report) {
  json sections = json::object();
  const Sections& s = report.sections;
  if (s.eta_table) sections["eta_table"] = *s.eta_table;
  if (s.identity_residuals) sections["identity_residuals"] = *s.identity_residuals;
  if (s.classification) sections["classification"] = *s.classification;
  if (s.exclusion) sections["exclusion"] = *s.exclusion;
  return json{{"scenario", report.scenario},
              {"sections", std::move(sections)},
              {"version", report.version},
              {"timestamp", report.timestamp}};
}

Report report_from_json(const json& j) {
  Report r;
  r.scenario = j.at("scenario").get<Scenario>();
  const json& s = j.at("sections");
  r.sections.eta_table = get_opt<EtaSection>(s, "eta_table");
  r.sections.identity_residuals = get_opt<IdentitySection>(s, "identity_residuals");
  r.sections.classification = get_opt<ClassificationSection>(s, "classification");
  r.sections.exclusion = get_opt<ExclusionSection>(s, "exclusion");
  j.at("version").get_to(r.version);
  j.at("timestamp").get_to(r.timestamp);
  return r;
}

}  // namespace bubblecert
