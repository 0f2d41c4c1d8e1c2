#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "bubblecert/rational.hpp"

namespace bubblecert {

/// Raised when a cotangent is requested at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Precision and acceptance tolerance shared by every floating evaluation
/// in one verification run.
struct FloatContext {
  static constexpr unsigned kDefaultBits = 113;

  unsigned precision_bits = kDefaultBits;
  double tolerance = 1e-10;

  FloatContext() = default;
  FloatContext(unsigned bits, double tol) : precision_bits(bits), tolerance(tol) { validate(); }

  void validate() const {
    if (precision_bits < 53) throw DomainError("precision_bits must be at least 53");
    if (!(tolerance >= 0.0)) throw DomainError("tolerance must be nonnegative");
  }
};

/// Owning MPFR value with a fixed bit precision. Binary operations produce a
/// result at the larger of the two operand precisions, rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(unsigned bits = FloatContext::kDefaultBits) {
    mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(value_, 1);
  }
  BigFloat(long v, unsigned bits) : BigFloat(bits) { mpfr_set_si(value_, v, MPFR_RNDN); }
  BigFloat(const Rational& r, unsigned bits) : BigFloat(bits) {
    mpfr_set_q(value_, r.backend().data(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) : BigFloat(o.precision()) { mpfr_set(value_, o.value_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat(o.precision()) { mpfr_swap(value_, o.value_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(value_, o.precision());
      mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

  /// Rounds to a different precision.
  BigFloat rounded(unsigned bits) const {
    BigFloat r(bits);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
  }

  static BigFloat pi(unsigned bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { return apply(o, mpfr_add); }
  BigFloat& operator-=(const BigFloat& o) { return apply(o, mpfr_sub); }
  BigFloat& operator*=(const BigFloat& o) { return apply(o, mpfr_mul); }
  BigFloat& operator/=(const BigFloat& o) { return apply(o, mpfr_div); }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(BigFloat a) {
    mpfr_neg(a.value_, a.value_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

  friend BigFloat abs(BigFloat a) {
    mpfr_abs(a.value_, a.value_, MPFR_RNDN);
    return a;
  }
  friend BigFloat sin(BigFloat a) { return a.unary(mpfr_sin); }
  friend BigFloat tan(BigFloat a) { return a.unary(mpfr_tan); }
  friend BigFloat cot(BigFloat a) { return a.unary(mpfr_cot); }
  friend BigFloat sqrt(BigFloat a) { return a.unary(mpfr_sqrt); }

  /// Multiplies by 2^e exactly.
  BigFloat ldexp(long e) const {
    BigFloat r(*this);
    mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Decimal text with enough digits to round-trip at this precision.
  std::string str() const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  BigFloat& apply(const BigFloat& o, BinaryOp op) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
    op(value_, value_, o.value_, MPFR_RNDN);
    return *this;
  }
  BigFloat unary(UnaryOp op) {
    op(value_, value_, MPFR_RNDN);
    return std::move(*this);
  }

  mpfr_t value_;
};

/// cot(a*pi/b) at ctx precision. The angle is reduced exactly before any
/// rounding, so values such as cot(pi/2) come out exactly zero.
/// Throws PoleError when b divides a.
BigFloat cot_eval(const Integer& angle_numerator, const Integer& angle_denominator,
                  const FloatContext& ctx);

/// cot(r*pi) for an angle given as a rational multiple of pi.
BigFloat cot_pi(const Rational& turns, const FloatContext& ctx);

/// sin(r*pi) with exact reduction of r modulo 2.
BigFloat sin_pi(const Rational& turns, const FloatContext& ctx);

}  // namespace bubblecert
