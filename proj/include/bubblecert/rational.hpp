#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace bubblecert {

// Exact arithmetic types. Expression templates are disabled so the types
// compose with Eigen and with `auto`.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Raised when an operation's precondition on its arguments is violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical "num/den" text, always with an explicit denominator.
std::string to_fraction_string(const Rational& r);

/// Short form used in tables: "7" for integers, "2/9" otherwise.
std::string to_display_string(const Rational& r);

/// Parses "n", "n/d" or a finite decimal such as "0.1" into an exact rational.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);

/// Returns the integer square root when `n` is a perfect square.
bool is_perfect_square(const Integer& n, Integer* root = nullptr);

// A rational multiple of pi squared. Comparison and arithmetic never expand pi.
struct PiSquared {
  Rational coefficient{0};

  PiSquared() = default;
  explicit PiSquared(Rational c) : coefficient(std::move(c)) {}

  friend bool operator==(const PiSquared& a, const PiSquared& b) {
    return a.coefficient == b.coefficient;
  }
  friend std::strong_ordering operator<=>(const PiSquared& a, const PiSquared& b) {
    if (a.coefficient < b.coefficient) return std::strong_ordering::less;
    if (b.coefficient < a.coefficient) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend PiSquared operator+(const PiSquared& a, const PiSquared& b) {
    return PiSquared(a.coefficient + b.coefficient);
  }
  friend PiSquared operator-(const PiSquared& a, const PiSquared& b) {
    return PiSquared(a.coefficient - b.coefficient);
  }
  friend PiSquared operator*(const Rational& s, const PiSquared& a) {
    return PiSquared(s * a.coefficient);
  }
  friend PiSquared operator*(const PiSquared& a, const Rational& s) { return s * a; }

  std::string str() const;
};

inline std::ostream& operator<<(std::ostream& os, const PiSquared& q) { return os << q.str(); }

}  // namespace bubblecert
