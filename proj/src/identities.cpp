#include "bubblecert/identities.hpp"

#include <algorithm>

#include "bubblecert/dedekind.hpp"

namespace bubblecert {

namespace {

void require_k(std::int64_t k, std::int64_t min) {
  if (k < min) throw DomainError("identity parameter k must be at least " + std::to_string(min));
}

IdentityReport finish(std::string name, std::int64_t k, std::optional<Rational> x, BigFloat lhs,
                      BigFloat rhs, const FloatContext& ctx) {
  IdentityReport r;
  r.identity_name = std::move(name);
  r.parameter_k = k;
  r.sample_point = std::move(x);
  r.residual = abs(lhs - rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.tolerance = identity_tolerance(k, ctx);
  r.passed = r.residual.to_double() <= r.tolerance;
  return r;
}

// cot(x + i pi/(k+1)) for every i, reporting the first pole by index.
std::vector<BigFloat> shifted_cotangents(std::int64_t k, const Rational& x_over_pi,
                                         const FloatContext& ctx) {
  std::vector<BigFloat> out;
  out.reserve(static_cast<std::size_t>(k + 1));
  for (std::int64_t i = 0; i <= k; ++i) {
    const Rational arg = x_over_pi + Rational(i, k + 1);
    try {
      out.push_back(cot_pi(arg, ctx));
    } catch (const PoleError&) {
      throw PoleError("cot pole in term i=" + std::to_string(i) + " at x = " +
                      to_display_string(x_over_pi) + "π, k=" + std::to_string(k));
    }
  }
  return out;
}

BigFloat scaled_cot(std::int64_t k, const Rational& x_over_pi, const FloatContext& ctx) {
  try {
    return cot_pi((k + 1) * x_over_pi, ctx);
  } catch (const PoleError&) {
    throw PoleError("cot pole on the left side: (k+1)x = " +
                    to_display_string((k + 1) * x_over_pi) + "π, k=" + std::to_string(k));
  }
}

}  // namespace

double identity_tolerance(std::int64_t k, const FloatContext& ctx) {
  return k <= 30 ? ctx.tolerance : ctx.tolerance * static_cast<double>(k) / 30.0;
}

IdentityReport verify_sin_product(std::int64_t k, const Rational& x_over_pi,
                                  const FloatContext& ctx) {
  require_k(k, 1);
  const unsigned bits = ctx.precision_bits;
  BigFloat lhs = sin_pi((k + 1) * x_over_pi, ctx);
  BigFloat rhs(1L, bits);
  for (std::int64_t i = 0; i <= k; ++i) rhs *= sin_pi(x_over_pi + Rational(i, k + 1), ctx);
  rhs = rhs.ldexp(static_cast<long>(k));
  return finish("sin_product", k, x_over_pi, std::move(lhs), std::move(rhs), ctx);
}

IdentityReport verify_cot_sum(std::int64_t k, const Rational& x_over_pi, const FloatContext& ctx) {
  require_k(k, 1);
  const unsigned bits = ctx.precision_bits;
  const BigFloat scale(static_cast<long>(k + 1), bits);
  BigFloat lhs = scale * scaled_cot(k, x_over_pi, ctx);
  BigFloat rhs(bits);
  for (const BigFloat& c : shifted_cotangents(k, x_over_pi, ctx)) rhs += c;
  return finish("cot_sum", k, x_over_pi, std::move(lhs), std::move(rhs), ctx);
}

IdentityReport verify_cot2_sum(std::int64_t k, const Rational& x_over_pi,
                               const FloatContext& ctx) {
  require_k(k, 1);
  const unsigned bits = ctx.precision_bits;
  const BigFloat scale(static_cast<long>(k + 1), bits);
  const BigFloat c = scaled_cot(k, x_over_pi, ctx);
  BigFloat lhs = scale * scale * c * c + BigFloat(static_cast<long>((k + 1) * k), bits);
  BigFloat rhs(bits);
  for (const BigFloat& t : shifted_cotangents(k, x_over_pi, ctx)) rhs += t * t;
  return finish("cot2_sum", k, x_over_pi, std::move(lhs), std::move(rhs), ctx);
}

Rational cot2_zero_limit(std::int64_t k) {
  require_k(k, 1);
  return Rational(k * (k - 1), 3);
}

IdentityReport verify_cot2_zero_limit(std::int64_t k, const FloatContext& ctx) {
  const Rational exact = cot2_zero_limit(k);
  BigFloat sum(ctx.precision_bits);
  for (std::int64_t i = 1; i <= k; ++i) {
    const BigFloat c = cot_eval(Integer(i), Integer(k + 1), ctx);
    sum += c * c;
  }
  return finish("cot2_zero_limit", k, std::nullopt, std::move(sum),
                BigFloat(exact, ctx.precision_bits), ctx);
}

MainIdentityReport verify_main_identity(std::int64_t k, const FloatContext& ctx) {
  require_k(k, 2);
  const Integer kk(k);
  const Integer p = kk * kk - 1;
  MainIdentityReport out;
  out.closed_form = Rational(2, 3) * Rational(kk * kk * kk) - 2 * Rational(kk * kk) + 2;
  out.dedekind_value = 4 * Rational(p) * dedekind_sum(kk % p, p);
  out.exact_match = out.closed_form == out.dedekind_value;

  BigFloat sum(ctx.precision_bits);
  for (Integer i = 1; i < p; ++i) sum += cot_eval(i, p, ctx) * cot_eval(kk * i, p, ctx);
  out.numeric = finish("main_identity", k, std::nullopt, std::move(sum),
                       BigFloat(out.closed_form, ctx.precision_bits), ctx);
  return out;
}

Rational SamplePointGenerator::next(std::int64_t k) {
  require_k(k, 1);
  constexpr std::int64_t kGrid = 1'000'000;
  std::uniform_int_distribution<std::int64_t> draw(1, kGrid - 1);
  const Rational spacing(1, k + 1);
  for (;;) {
    const Rational x(draw(engine_), kGrid);
    // Distance from x to the nearest multiple of 1/(k+1).
    const Rational scaled = x * (k + 1);
    const Integer below = numerator_of(scaled) / denominator_of(scaled);
    const Rational frac = scaled - Rational(below);
    const Rational dist = std::min(frac, Rational(1) - frac) * spacing;
    if (dist >= guard_) return x;
  }
}

}  // namespace bubblecert
