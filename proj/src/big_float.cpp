#include "bubblecert/big_float.hpp"

#include <cmath>

namespace bubblecert {

namespace {

// Extra working bits for the argument reduction pi * (r/b).
constexpr unsigned kGuardBits = 32;

BigFloat pi_times(const Integer& num, const Integer& den, unsigned bits) {
  return BigFloat::pi(bits) * BigFloat(Rational(num, den), bits);
}

}  // namespace

std::string BigFloat::str() const {
  const auto digits = static_cast<int>(std::ceil(precision() * 0.30102999566398120)) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat cot_eval(const Integer& angle_numerator, const Integer& angle_denominator,
                  const FloatContext& ctx) {
  ctx.validate();
  if (angle_denominator <= 0) throw DomainError("cot_eval: denominator must be positive");
  const Integer& b = angle_denominator;
  Integer r = angle_numerator % b;
  if (r < 0) r += b;
  if (r == 0) {
    throw PoleError("cot pole at " + angle_numerator.str() + "π/" + b.str());
  }

  // cot has period pi and is odd: fold r/b into (0, 1/2].
  bool negate = false;
  if (2 * r > b) {
    r = b - r;
    negate = true;
  }
  const unsigned work = ctx.precision_bits + kGuardBits;
  BigFloat value(ctx.precision_bits);
  if (2 * r == b) {
    return value;  // exactly zero
  }
  if (4 * r > b) {
    // cot(t pi) = tan((1/2 - t) pi); the complement lies in (0, 1/4).
    value = tan(pi_times(b - 2 * r, 2 * b, work));
  } else {
    value = cot(pi_times(r, b, work));
  }
  value = value.rounded(ctx.precision_bits);
  return negate ? -value : value;
}

BigFloat cot_pi(const Rational& turns, const FloatContext& ctx) {
  return cot_eval(numerator_of(turns), denominator_of(turns), ctx);
}

BigFloat sin_pi(const Rational& turns, const FloatContext& ctx) {
  ctx.validate();
  const Integer num = numerator_of(turns);
  const Integer den = denominator_of(turns);
  // r in [0, 2)
  Integer r = num % (2 * den);
  if (r < 0) r += 2 * den;
  bool negate = false;
  if (r >= den) {
    r -= den;
    negate = true;
  }
  BigFloat value(ctx.precision_bits);
  if (r == 0) return value;
  if (2 * r > den) r = den - r;
  if (2 * r == den) {
    value = BigFloat(1L, ctx.precision_bits);
  } else {
    value = sin(pi_times(r, den, ctx.precision_bits + kGuardBits)).rounded(ctx.precision_bits);
  }
  return negate ? -value : value;
}

}  // namespace bubblecert
