#include "bubblecert/rational.hpp"

#include <cctype>

namespace bubblecert {

std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string to_display_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return to_fraction_string(r);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not a rational number: '" + std::string(whole) + "'");
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

Integer pow10(std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw DomainError("empty rational literal");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)), s);
    const Integer den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
    return make_rational(num, den);
  }

  // Decimal with optional exponent, converted exactly.
  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    const Integer ex = parse_integer(s.substr(e + 1), s);
    if (abs(ex) > 4096) throw DomainError("exponent out of range in '" + std::string(s) + "'");
    exponent = ex.convert_to<long>();
  }
  std::string digits;
  std::size_t frac_len = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    const std::string_view frac = mantissa.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac))
      throw DomainError("not a rational number: '" + std::string(s) + "'");
    std::string sign;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      sign = int_part.front() == '-' ? "-" : "";
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac.empty())
      throw DomainError("not a rational number: '" + std::string(s) + "'");
    if (!int_part.empty() && !all_digits(int_part))
      throw DomainError("not a rational number: '" + std::string(s) + "'");
    digits = sign + (int_part.empty() ? "0" : std::string(int_part)) + std::string(frac);
    frac_len = frac.size();
  } else {
    digits = std::string(mantissa);
  }
  Rational value(parse_integer(digits, s), pow10(frac_len));
  if (exponent > 0) value *= Rational(pow10(static_cast<std::size_t>(exponent)));
  if (exponent < 0) value /= Rational(pow10(static_cast<std::size_t>(-exponent)));
  return value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  const Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

std::string PiSquared::str() const {
  if (coefficient == 0) return "0";
  const Integer num = numerator_of(coefficient);
  const Integer den = denominator_of(coefficient);
  std::string out;
  if (num == 1) out = "π²";
  else if (num == -1) out = "-π²";
  else out = num.str() + "π²";
  if (den != 1) out += "/" + den.str();
  return out;
}

}  // namespace bubblecert
