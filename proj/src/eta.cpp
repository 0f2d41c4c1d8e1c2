#include "bubblecert/eta.hpp"

#include "bubblecert/dedekind.hpp"

namespace bubblecert {

LensSpace::LensSpace(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 2) throw DomainError("lens space L(p,q) needs p >= 2");
  if (q_ < 1 || q_ >= p_) throw DomainError("lens space L(p,q) needs 1 <= q < p");
  if (gcd(p_, q_) != 1) throw DomainError("lens space L(p,q) needs gcd(p,q) = 1");
}

LensSpace LensSpace::for_plumbing(std::int64_t k) {
  if (k < 2) throw DomainError("L(k^2-1, k) needs k >= 2");
  const Integer kk(k);
  return LensSpace(kk * kk - 1, kk);
}

Rational eta_exact(const LensSpace& lens) { return -4 * dedekind_sum(lens.q(), lens.p()); }

Rational eta_closed_form(std::int64_t k) {
  if (k < 2) throw DomainError("eta_closed_form needs k >= 2");
  const Rational kk(k);
  const Rational bracket = Rational(2, 3) * kk * kk * kk - 2 * kk * kk + 2;
  return -bracket / (kk * kk - 1);
}

CotangentTable::CotangentTable(const Integer& p, const FloatContext& ctx)
    : bits_(ctx.precision_bits) {
  if (p < 2) throw DomainError("cotangent table needs p >= 2");
  const auto n = p.convert_to<std::size_t>();
  values_.reserve(n);
  values_.emplace_back(bits_);
  for (std::size_t i = 1; i < n; ++i) values_.push_back(cot_eval(Integer(i), p, ctx));
}

BigFloat CotangentTable::eta(const Integer& q) const {
  const std::size_t p = values_.size();
  const auto step = static_cast<std::size_t>((q % p).convert_to<unsigned long long>());
  BigFloat sum(bits_);
  std::size_t j = 0;
  for (std::size_t i = 1; i < p; ++i) {
    j += step;
    if (j >= p) j -= p;
    sum += values_[i] * values_[j];
  }
  return -(sum / BigFloat(static_cast<long>(p), bits_));
}

BigFloat eta_float(const LensSpace& lens, const FloatContext& ctx) {
  ctx.validate();
  BigFloat sum(ctx.precision_bits);
  const Integer& p = lens.p();
  for (Integer i = 1; i < p; ++i) {
    sum += cot_eval(i, p, ctx) * cot_eval(lens.q() * i, p, ctx);
  }
  return -(sum / BigFloat(Rational(p), ctx.precision_bits));
}

}  // namespace bubblecert
