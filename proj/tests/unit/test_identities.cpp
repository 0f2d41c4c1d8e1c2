#include <gtest/gtest.h>

#include "bubblecert/dedekind.hpp"
#include "bubblecert/eta.hpp"
#include "bubblecert/identities.hpp"

using namespace bubblecert;

namespace {
const FloatContext kCtx;
}  // namespace

TEST(SinProduct, ReferenceValues) {
  auto r = verify_sin_product(1, Rational(1, 4), kCtx);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.lhs.to_double(), 1.0, 1e-30);
  EXPECT_NEAR(r.rhs.to_double(), 1.0, 1e-30);

  r = verify_sin_product(2, Rational(1, 6), kCtx);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.rhs.to_double(), 1.0, 1e-30);

  r = verify_sin_product(5, Rational(1, 7), kCtx);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.residual.to_double(), 1e-10);
  EXPECT_EQ(r.identity_name, "sin_product");
  ASSERT_TRUE(r.sample_point.has_value());
  EXPECT_EQ(*r.sample_point, Rational(1, 7));
}

TEST(SinProduct, HoldsAtZerosOfTheFactors) {
  // Additive residual: x = 0 makes both sides vanish.
  const auto r = verify_sin_product(3, Rational(0), kCtx);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.residual.is_zero());
}

TEST(CotSum, ReferenceValues) {
  auto r = verify_cot_sum(1, Rational(1, 8), kCtx);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.lhs.to_double(), 2.0, 1e-30);
  EXPECT_NEAR(r.rhs.to_double(), 2.0, 1e-30);

  r = verify_cot_sum(3, Rational(1, 5), kCtx);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.residual.to_double(), 1e-10);
}

TEST(CotSum, PoleIsReportedWithIndex) {
  try {
    verify_cot_sum(1, Rational(1, 2), kCtx);
    FAIL() << "expected a pole error";
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("left side"), std::string::npos);
  }
  // (k+1)x = 3pi/2 is fine on the left, but x + pi/4... with k=3, x=1/4 hits i=3.
  try {
    verify_cot_sum(3, Rational(1, 4), kCtx);
    FAIL() << "expected a pole error";
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("pole"), std::string::npos);
  }
}

TEST(Cot2Sum, ReferenceValues) {
  auto r = verify_cot2_sum(1, Rational(1, 8), kCtx);
  EXPECT_TRUE(r.passed);
  // (1+sqrt2)^2 + (1-sqrt2)^2 = 6
  EXPECT_NEAR(r.rhs.to_double(), 6.0, 1e-30);
  EXPECT_NEAR(r.lhs.to_double(), 6.0, 1e-30);
  EXPECT_TRUE(verify_cot2_sum(2, Rational(1, 9), kCtx).passed);
  EXPECT_TRUE(verify_cot2_sum(4, Rational(1, 11), kCtx).passed);
  EXPECT_THROW(verify_cot2_sum(2, Rational(1, 3), kCtx), PoleError);
}

TEST(Cot2ZeroLimit, ReferenceValues) {
  EXPECT_EQ(cot2_zero_limit(1), Rational(0));
  EXPECT_EQ(cot2_zero_limit(2), Rational(2, 3));
  EXPECT_EQ(cot2_zero_limit(3), Rational(2));
  EXPECT_THROW(cot2_zero_limit(0), DomainError);
  for (std::int64_t k = 1; k <= 40; ++k) EXPECT_TRUE(verify_cot2_zero_limit(k, kCtx).passed) << k;
  EXPECT_TRUE(verify_cot2_zero_limit(1, kCtx).residual.is_zero());
}

TEST(MainIdentity, ReferenceValues) {
  auto r = verify_main_identity(2, kCtx);
  EXPECT_EQ(r.closed_form, Rational(-2, 3));
  EXPECT_TRUE(r.exact_match);
  EXPECT_TRUE(r.numeric.passed);

  r = verify_main_identity(3, kCtx);
  EXPECT_EQ(r.closed_form, Rational(2));
  EXPECT_EQ(r.dedekind_value, Rational(2));

  r = verify_main_identity(10, kCtx);
  EXPECT_EQ(r.closed_form, Rational(1406, 3));
  EXPECT_TRUE(r.exact_match);
  EXPECT_LT(r.numeric.residual.to_double(), 1e-8);
  EXPECT_THROW(verify_main_identity(1, kCtx), DomainError);
}

TEST(MainIdentity, ExactForKUpTo100) {
  for (std::int64_t k = 2; k <= 100; ++k) {
    const Integer kk(k), p = kk * kk - 1;
    EXPECT_EQ(4 * Rational(p) * dedekind_sum(kk, p), Rational(2, 3) * k * k * k - 2 * k * k + 2);
  }
}

// The two regrouped sums in the derivation of the main identity: for
// j = 1..k-2, summing over m = 0..k the index i = j + (k-1)m gives
// (k+1) cot^2(j pi/(k-1)) both with cot(i pi/(k^2-1)) and with
// cot(k i pi/(k^2-1)); the multiples of k-1 contribute -sum cot^2(j pi/(k+1)).
TEST(MainIdentity, RegroupedSums) {
  for (std::int64_t k = 3; k <= 12; ++k) {
    const Integer p(k * k - 1);
    for (std::int64_t j = 1; j <= k - 2; ++j) {
      BigFloat with_i(kCtx.precision_bits), with_ki(kCtx.precision_bits);
      for (std::int64_t m = 0; m <= k; ++m) {
        const Integer i(j + (k - 1) * m);
        const BigFloat outer = cot_eval(i, Integer(k - 1), kCtx);
        with_i += outer * cot_eval(i, p, kCtx);
        with_ki += outer * cot_eval(Integer(k) * i, p, kCtx);
      }
      const BigFloat c = cot_eval(Integer(j), Integer(k - 1), kCtx);
      const BigFloat want = BigFloat(static_cast<long>(k + 1), 113) * c * c;
      EXPECT_LT(abs(with_i - want).to_double(), 1e-25) << k << "," << j;
      EXPECT_LT(abs(with_ki - want).to_double(), 1e-25) << k << "," << j;
    }
    BigFloat tail(kCtx.precision_bits), cot2(kCtx.precision_bits);
    for (std::int64_t j = 1; j <= k; ++j) {
      const Integer i((k - 1) * j);
      tail += cot_eval(i, p, kCtx) * cot_eval(Integer(k) * i, p, kCtx);
      const BigFloat c = cot_eval(Integer(j), Integer(k + 1), kCtx);
      cot2 += c * c;
    }
    EXPECT_LT(abs(tail + cot2).to_double(), 1e-25) << k;
  }
}

TEST(SamplePoints, AreReproducibleAndAvoidPoles) {
  SamplePointGenerator a(42), b(42);
  for (std::int64_t k = 1; k <= 30; ++k) {
    for (int i = 0; i < 20; ++i) {
      const Rational x = a.next(k);
      EXPECT_EQ(x, b.next(k));
      const Rational scaled = x * (k + 1);
      const Integer fl = numerator_of(scaled) / denominator_of(scaled);
      const Rational frac = scaled - Rational(fl);
      EXPECT_GE(std::min(frac, 1 - frac) / (k + 1), Rational(1, 1000));
    }
  }
}

TEST(IdentityChain, RandomSamplesPassTogether) {
  SamplePointGenerator gen(99);
  for (std::int64_t k = 1; k <= 30; ++k) {
    for (int i = 0; i < 5; ++i) {
      const Rational x = gen.next(k);
      const bool s = verify_sin_product(k, x, kCtx).passed;
      if (s) {
        EXPECT_TRUE(verify_cot_sum(k, x, kCtx).passed);
        EXPECT_TRUE(verify_cot2_sum(k, x, kCtx).passed);
      }
    }
  }
}

TEST(IdentityTolerance, ScalesLinearlyBeyond30) {
  const FloatContext ctx(113, 1e-10);
  EXPECT_EQ(identity_tolerance(30, ctx), 1e-10);
  EXPECT_DOUBLE_EQ(identity_tolerance(60, ctx), 2e-10);
}

TEST(IdentityResiduals, GrowNoFasterThanLinearlyInK) {
  // Worst residual over fixed samples, normalised by k, stays far below tolerance.
  SamplePointGenerator gen(5);
  double worst_small = 0, worst_large = 0;
  for (std::int64_t k : {2, 3, 4}) {
    for (int i = 0; i < 5; ++i)
      worst_small = std::max(worst_small, verify_cot2_sum(k, gen.next(k), kCtx).residual.to_double());
  }
  for (std::int64_t k : {60, 61, 62}) {
    for (int i = 0; i < 5; ++i)
      worst_large = std::max(worst_large, verify_cot2_sum(k, gen.next(k), kCtx).residual.to_double() / k);
  }
  EXPECT_LT(worst_large, 1e-20);
  EXPECT_LT(worst_small, 1e-20);
}
