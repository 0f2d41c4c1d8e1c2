#include <sstream>

#include <gtest/gtest.h>

#include "bubblecert/report.hpp"

using namespace bubblecert;

namespace {
Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

Scenario small_scenario() {
  Scenario s;
  s.name = "small";
  s.k_max = 12;
  s.identity_k_max = 4;
  s.samples = 3;
  return s;
}
}  // namespace

TEST(ScenarioParse, DefaultsWhenEmpty) {
  EXPECT_EQ(parse(""), Scenario{});
  EXPECT_EQ(parse("# nothing here\n\n   \n"), Scenario{});
}

TEST(ScenarioParse, ReadsEveryField) {
  const Scenario s = parse(
      "name = wide  # trailing comment\n"
      "interval_a = 0.5\n"
      "interval_b = 7/2\n"
      "calabi_A_bound = 8\n"
      "k_max = 40\n"
      "float_precision_bits = 200\n"
      "tolerance = 1e-12\n"
      "identity_k_max = 5\n"
      "samples = 4\n"
      "seed = 99\n");
  EXPECT_EQ(s.name, "wide");
  EXPECT_EQ(s.interval_a, Rational(1, 2));
  EXPECT_EQ(s.interval_b, Rational(7, 2));
  EXPECT_EQ(s.calabi_A_bound, Rational(8));
  EXPECT_EQ(s.k_max, 40);
  EXPECT_EQ(s.float_precision_bits, 200u);
  EXPECT_DOUBLE_EQ(s.tolerance, 1e-12);
  EXPECT_EQ(s.identity_k_max, 5);
  EXPECT_EQ(s.samples, 4);
  EXPECT_EQ(s.seed, 99u);
}

TEST(ScenarioParse, InfinityMeansUnbounded) {
  const Scenario s = parse("interval_b = inf\n");
  EXPECT_FALSE(s.interval_b);
  EXPECT_FALSE(s.interval().is_bounded());
}

TEST(ScenarioParse, ErrorsCarryLineAndField) {
  const auto expect_error = [](const std::string& text, int line, const std::string& field) {
    try {
      parse(text);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_EQ(e.field(), field) << text;
    }
  };
  expect_error("k_max = 10\nbogus = 1\n", 2, "bogus");
  expect_error("\n\nk_max = ten\n", 3, "k_max");
  expect_error("interval_a = 1/0\n", 1, "interval_a");
  expect_error("tolerance = small\n", 1, "tolerance");
  expect_error("just words\n", 1, "");
  expect_error("seed =\n", 1, "seed");
  // Cross-field checks happen after the whole file is read.
  expect_error("interval_a = 5\ninterval_b = 2\n", 0, "interval_b");
  expect_error("float_precision_bits = 20\n", 0, "float_precision_bits");
  expect_error("calabi_A_bound = -1\n", 0, "calabi_A_bound");
}

TEST(ScenarioParse, MissingFileIsConfigError) {
  EXPECT_THROW(load_scenario("/nonexistent/scenario.conf"), ConfigError);
}

TEST(RunEta, RejectsBadRanges) {
  const FloatContext ctx;
  EXPECT_THROW(run_eta(5, 4, ctx), ConfigError);
  EXPECT_THROW(run_eta(1, 4, ctx), ConfigError);
  const EtaSection s = run_eta(2, 6, ctx);
  EXPECT_TRUE(s.passed);
  ASSERT_EQ(s.rows.size(), 5u);
  EXPECT_EQ(s.rows[0].eta_exact, "2/9");
  EXPECT_EQ(s.rows[2].eta_exact, "-38/45");
  EXPECT_EQ(s.rows[2].p, "15");
}

TEST(RunEta, FloatColumnStopsAtCutoff) {
  const EtaSection s = run_eta(2, 8, FloatContext{}, 4);
  EXPECT_TRUE(s.rows[2].eta_float.has_value());
  EXPECT_FALSE(s.rows[3].eta_float.has_value());
  EXPECT_EQ(s.rows[0].eta_float->precision_bits, 113u);
}

TEST(RunClassify, ReferenceBound) {
  const ClassificationSection c = run_classify(Rational(9), 100);
  EXPECT_TRUE(c.passed);
  EXPECT_TRUE(c.deviations.empty());
  EXPECT_EQ(c.b2_1, (std::vector<std::int64_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(c.b2_2, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(c.w_minus_budget, "24/1");
  EXPECT_EQ(c.ric0_budget, "16/1");
}

TEST(RunClassify, TamperedBoundReportsDeviations) {
  const ClassificationSection c = run_classify(Rational(20), 100);
  EXPECT_FALSE(c.deviations.empty());
  // The certificate is about internal consistency, which still holds.
  EXPECT_TRUE(c.passed);
  EXPECT_NE(c.b2_1, (std::vector<std::int64_t>{1, 2, 3, 4, 5}));
}

TEST(RunExclude, PassFollowsVerdict) {
  Scenario s;
  EXPECT_TRUE(run_exclude(s).passed);
  EXPECT_EQ(run_exclude(s).global_min_sq, "2/241");
  s.interval_b.reset();
  const ExclusionSection u = run_exclude(s);
  EXPECT_FALSE(u.passed);
  EXPECT_FALSE(u.interval_b);
  EXPECT_EQ(u.global_min_sq, "0/1");
}

TEST(Report, FailedSectionsDriveExitStatus) {
  Report r;
  EXPECT_TRUE(r.passed());
  r.sections.exclusion = ExclusionSection{};
  EXPECT_EQ(r.failed_sections(), std::vector<std::string>{"exclusion"});
  r.sections.exclusion->passed = true;
  r.sections.eta_table = EtaSection{};
  EXPECT_EQ(r.failed_sections(), std::vector<std::string>{"eta_table"});
}

TEST(ReportJson, TopLevelFieldNames) {
  Report r = run_all(small_scenario());
  r.timestamp = utc_timestamp();
  const nlohmann::json j = report_to_json(r);
  for (const char* key : {"scenario", "sections", "version", "timestamp"}) EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"eta_table", "identity_residuals", "classification", "exclusion"})
    EXPECT_TRUE(j.at("sections").contains(key)) << key;
  EXPECT_EQ(j.at("version"), kToolVersion);
}

TEST(ReportJson, RoundTrip) {
  Report r = run_all(small_scenario());
  r.timestamp = "2026-01-01T00:00:00Z";
  const nlohmann::json j = report_to_json(r);
  EXPECT_EQ(report_from_json(j), r);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);

  Report partial;
  partial.sections.exclusion = run_exclude(Scenario{});
  const nlohmann::json pj = report_to_json(partial);
  EXPECT_FALSE(pj.at("sections").contains("eta_table"));
  EXPECT_EQ(report_from_json(pj), partial);
}

TEST(ReportJson, DeterministicApartFromTimestamp) {
  const Scenario s = small_scenario();
  nlohmann::json a = report_to_json(run_all(s));
  nlohmann::json b = report_to_json(run_all(s));
  a.erase("timestamp");
  b.erase("timestamp");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Timestamp, IsUtcIso8601) {
  const std::string t = utc_timestamp();
  ASSERT_EQ(t.size(), 20u);
  EXPECT_EQ(t[4], '-');
  EXPECT_EQ(t[10], 'T');
  EXPECT_EQ(t.back(), 'Z');
}

TEST(PrintReport, MentionsEachSection) {
  std::ostringstream os;
  print_report(os, run_all(small_scenario()));
  const std::string text = os.str();
  for (const char* s : {"eta_table: PASS", "identity_residuals: PASS"}) EXPECT_NE(text.find(s), std::string::npos) << s;
  EXPECT_NE(text.find("2/241"), std::string::npos);
}
