#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bubblecert/big_float.hpp"
#include "bubblecert/rational.hpp"

namespace bubblecert {

/// Outcome of one numerical check of a trigonometric identity. Residuals are
/// absolute: both sides may vanish, which leaves relative error undefined.
struct IdentityReport {
  std::string identity_name;
  std::int64_t parameter_k = 0;
  /// x / pi for identities evaluated at a sample point.
  std::optional<Rational> sample_point;
  BigFloat lhs;
  BigFloat rhs;
  BigFloat residual;
  double tolerance = 0.0;
  bool passed = false;
};

/// Tolerance used for a given k: the context tolerance up to k = 30, then
/// grown linearly in k since the products involve k+1 rounded factors.
double identity_tolerance(std::int64_t k, const FloatContext& ctx);

/// sin((k+1)x) = 2^k prod_{i=0}^{k} sin(x + i pi/(k+1)).
IdentityReport verify_sin_product(std::int64_t k, const Rational& x_over_pi,
                                  const FloatContext& ctx);

/// (k+1) cot((k+1)x) = sum_{i=0}^{k} cot(x + i pi/(k+1)). Throws PoleError
/// naming the offending term when any cotangent argument is a multiple of pi.
IdentityReport verify_cot_sum(std::int64_t k, const Rational& x_over_pi, const FloatContext& ctx);

/// (k+1)^2 cot^2((k+1)x) + (k+1)k = sum_{i=0}^{k} cot^2(x + i pi/(k+1)).
IdentityReport verify_cot2_sum(std::int64_t k, const Rational& x_over_pi,
                               const FloatContext& ctx);

/// sum_{i=1}^{k} cot^2(i pi/(k+1)) = k(k-1)/3. Returns the exact value.
Rational cot2_zero_limit(std::int64_t k);

/// Float check of cot2_zero_limit against direct summation.
IdentityReport verify_cot2_zero_limit(std::int64_t k, const FloatContext& ctx);

/// sum_{i=1}^{k^2-2} cot(i pi/(k^2-1)) cot(k i pi/(k^2-1)) = (2/3)k^3 - 2k^2 + 2,
/// checked both by direct float summation and exactly through the Dedekind sum.
struct MainIdentityReport {
  IdentityReport numeric;
  Rational closed_form;
  Rational dedekind_value;
  bool exact_match = false;
};
MainIdentityReport verify_main_identity(std::int64_t k, const FloatContext& ctx);

/// Reproducible sample points x/pi in (0,1) that keep a guard band of
/// `guard` (in units of pi) away from every multiple of 1/(k+1).
class SamplePointGenerator {
 public:
  explicit SamplePointGenerator(std::uint64_t seed, Rational guard = Rational(1, 1000))
      : engine_(seed), guard_(std::move(guard)) {}

  Rational next(std::int64_t k);

 private:
  std::mt19937_64 engine_;
  Rational guard_;
};

}  // namespace bubblecert
