#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bubblecert/big_float.hpp"
#include "bubblecert/dedekind.hpp"
#include "bubblecert/rational.hpp"
#include "oracles.hpp"

using namespace bubblecert;

TEST(Rational, StaysInLowestTerms) {
  const Rational r(Integer(6), Integer(-8));
  EXPECT_EQ(numerator_of(r), -3);
  EXPECT_EQ(denominator_of(r), 4);
  EXPECT_EQ(to_fraction_string(r), "-3/4");
  EXPECT_EQ(to_fraction_string(Rational(7)), "7/1");
  EXPECT_EQ(to_display_string(Rational(7)), "7");
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("2/9"), Rational(2, 9));
  EXPECT_EQ(parse_rational(" -14/6 "), Rational(-7, 3));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("2.5e2"), Rational(250));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_THROW(parse_rational("1/2/3"), DomainError);
}

TEST(Rational, ParseRoundTripsCanonicalText) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000), den(1, 1'000'000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    EXPECT_EQ(parse_rational(to_fraction_string(r)), r);
  }
}

TEST(PiSquared, ComparesByCoefficient) {
  const PiSquared a(Rational(24)), b(Rational(68, 3));
  EXPECT_LT(b, a);
  EXPECT_EQ(a - b, PiSquared(Rational(4, 3)));
  EXPECT_EQ(Rational(1, 2) * a, PiSquared(Rational(12)));
  EXPECT_EQ(a.str(), "24π²");
  EXPECT_EQ(PiSquared(Rational(64, 3)).str(), "64π²/3");
  EXPECT_EQ(PiSquared().str(), "0");
}

TEST(DedekindSum, ReferenceValues) {
  EXPECT_EQ(dedekind_sum(0, 1), Rational(0));
  EXPECT_EQ(dedekind_sum(1, 3), Rational(1, 18));
  EXPECT_EQ(dedekind_sum(2, 3), Rational(-1, 18));
  EXPECT_EQ(dedekind_sum(1, 2), Rational(0));
  EXPECT_EQ(dedekind_sum(3, 8), Rational(1, 16));
}

TEST(DedekindSum, RejectsBadArguments) {
  EXPECT_THROW(dedekind_sum(2, 4), DomainError);
  EXPECT_THROW(dedekind_sum(0, 0), DomainError);
  EXPECT_THROW(dedekind_sum(0, 5), DomainError);
  EXPECT_THROW(dedekind_sum(5, 5), DomainError);
  EXPECT_THROW(dedekind_sum(-1, 5), DomainError);
}

TEST(DedekindSum, MatchesSawtoothDefinition) {
  for (std::int64_t k = 1; k <= 60; ++k)
    for (std::int64_t h = 0; h < k; ++h)
      if (oracle::gcd64(h, k) == 1) EXPECT_EQ(dedekind_sum(h, k), oracle::dedekind_sawtooth(h, k)) << h << "," << k;
}

TEST(DedekindSum, HandlesLargeArguments) {
  // F_{n+1}/F_n gives the longest reciprocity chains.
  Integer a = 1, b = 1;
  for (int i = 0; i < 200; ++i) {
    const Integer c = a + b;
    a = b;
    b = c;
  }
  const Rational s = dedekind_sum(a, b);
  const Rational t = dedekind_sum(b % a, a);
  EXPECT_EQ(s + t, dedekind_reciprocity_rhs(a, b));
}

TEST(CotEval, ReferenceValues) {
  const FloatContext ctx;
  EXPECT_EQ(cot_eval(1, 4, ctx).to_double(), 1.0);
  EXPECT_TRUE(cot_eval(1, 2, ctx).is_zero());
  // 1/sqrt(3) through an independent square root.
  const BigFloat inv_sqrt3 = BigFloat(1L, 113) / sqrt(BigFloat(3L, 113));
  EXPECT_LT(abs(cot_eval(1, 3, ctx) - inv_sqrt3).to_double(), 1e-32);
  EXPECT_NEAR(cot_eval(1, 3, ctx).to_double(), 0.5773502691896258, 2e-16);
}

TEST(CotEval, PoleAndReduction) {
  const FloatContext ctx;
  EXPECT_THROW(cot_eval(3, 3, ctx), PoleError);
  EXPECT_THROW(cot_eval(0, 7, ctx), PoleError);
  EXPECT_THROW(cot_eval(1, 0, ctx), DomainError);
  EXPECT_EQ(cot_eval(-1, 4, ctx).to_double(), -1.0);
  EXPECT_EQ(cot_eval(5, 4, ctx).to_double(), 1.0);   // period pi
  EXPECT_EQ(cot_eval(3, 4, ctx).to_double(), -1.0);  // odd about pi/2
}

TEST(CotEval, AgreesWithDirectMpfrWithinTwoUlpOfDouble) {
  const FloatContext ctx;
  for (std::int64_t b = 2; b <= 90; ++b) {
    for (std::int64_t a = 1; a < b; ++a) {
      const double got = cot_eval(a, b, ctx).to_double();
      const double want = oracle::mpfr_cot_direct(a, b, 400);
      const double ulp = std::nextafter(std::fabs(want), INFINITY) - std::fabs(want);
      // At pi/2 the direct route leaves a ~2^-400 residue; ours is exactly 0.
      EXPECT_LE(std::fabs(got - want), 2 * ulp + 1e-100) << a << "/" << b;
    }
  }
}

TEST(CotEval, PrecisionIsHonored) {
  // At 53 bits cot(pi/7) matches the 113-bit value to about double precision only.
  const BigFloat lo = cot_eval(1, 7, FloatContext(53, 1e-10));
  const BigFloat hi = cot_eval(1, 7, FloatContext(113, 1e-10));
  EXPECT_EQ(lo.precision(), 53u);
  EXPECT_EQ(hi.precision(), 113u);
  const double diff = abs(lo - hi).to_double();
  EXPECT_GT(diff, 0.0);
  EXPECT_LT(diff, 1e-15);
  EXPECT_THROW(FloatContext(52, 1e-10), DomainError);
}

TEST(SinPi, ExactSpecialValues) {
  const FloatContext ctx;
  EXPECT_TRUE(sin_pi(Rational(0), ctx).is_zero());
  EXPECT_TRUE(sin_pi(Rational(3), ctx).is_zero());
  EXPECT_EQ(sin_pi(Rational(1, 2), ctx).to_double(), 1.0);
  EXPECT_EQ(sin_pi(Rational(3, 2), ctx).to_double(), -1.0);
  EXPECT_NEAR(sin_pi(Rational(1, 6), ctx).to_double(), 0.5, 1e-17);
  EXPECT_NEAR(sin_pi(Rational(-1, 6), ctx).to_double(), -0.5, 1e-17);
}
