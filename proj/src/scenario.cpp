#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>

#include "bubblecert/report.hpp"

namespace bubblecert {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value, int line) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value '" + value + "' for field '" + key + "'", line, key);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("invalid value '" + value + "' for field '" + key + "'", line, key);
  }
}

Rational parse_rational_field(const std::string& key, const std::string& value, int line) {
  try {
    return parse_rational(value);
  } catch (const DomainError& e) {
    throw ConfigError("invalid value '" + value + "' for field '" + key + "': " + e.what(), line,
                      key);
  }
}

}  // namespace

void Scenario::validate() const {
  if (interval_a <= 0) {
    throw ConfigError("interval_a must be a positive number", 0, "interval_a");
  }
  if (interval_b && *interval_b <= interval_a) {
    throw ConfigError("interval needs interval_a < interval_b", 0, "interval_b");
  }
  if (calabi_A_bound <= 0) throw ConfigError("calabi_A_bound must be positive", 0, "calabi_A_bound");
  if (k_max < 2) throw ConfigError("k_max must be at least 2", 0, "k_max");
  if (float_precision_bits < 53) {
    throw ConfigError("float_precision_bits must be at least 53", 0, "float_precision_bits");
  }
  if (!(tolerance >= 0.0)) throw ConfigError("tolerance must be nonnegative", 0, "tolerance");
  if (identity_k_max < 1) throw ConfigError("identity_k_max must be at least 1", 0, "identity_k_max");
  if (samples < 1) throw ConfigError("samples must be at least 1", 0, "samples");
}

ParamInterval Scenario::interval() const {
  validate();
  return ParamInterval(interval_a, interval_b);
}

void apply_setting(Scenario& s, const std::string& key, const std::string& raw, int line) {
  const std::string value = trim(raw);
  if (value.empty()) throw ConfigError("missing value for field '" + key + "'", line, key);
  if (key == "name") {
    s.name = value;
  } else if (key == "interval_a") {
    s.interval_a = parse_rational_field(key, value, line);
  } else if (key == "interval_b") {
    if (value == "inf" || value == "infinity") s.interval_b.reset();
    else s.interval_b = parse_rational_field(key, value, line);
  } else if (key == "calabi_A_bound") {
    s.calabi_A_bound = parse_rational_field(key, value, line);
  } else if (key == "k_max") {
    s.k_max = parse_number<std::int64_t>(key, value, line);
  } else if (key == "float_precision_bits") {
    s.float_precision_bits = parse_number<unsigned>(key, value, line);
  } else if (key == "tolerance") {
    s.tolerance = parse_double(key, value, line);
  } else if (key == "identity_k_max") {
    s.identity_k_max = parse_number<std::int64_t>(key, value, line);
  } else if (key == "samples") {
    s.samples = parse_number<std::int64_t>(key, value, line);
  } else if (key == "seed") {
    s.seed = parse_number<std::uint64_t>(key, value, line);
  } else {
    throw ConfigError("unknown field '" + key + "'", line, key);
  }
}

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value', got '" + text + "'", line_no);
    }
    const std::string key = trim(text.substr(0, eq));
    if (key.empty()) throw ConfigError("missing field name before '='", line_no);
    apply_setting(s, key, text.substr(eq + 1), line_no);
  }
  try {
    s.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), 0, e.field());
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

}  // namespace bubblecert
