#pragma once

#include <cstdint>
#include <vector>

#include "bubblecert/big_float.hpp"
#include "bubblecert/rational.hpp"

namespace bubblecert {

/// The lens space L(p,q) = S^3 / Z_p with weights (1,q).
class LensSpace {
 public:
  /// Throws DomainError unless p >= 2, 1 <= q < p and gcd(p,q) = 1.
  LensSpace(Integer p, Integer q);

  /// L(k^2 - 1, k), the link at infinity of the b2 = 2 bubble candidates.
  static LensSpace for_plumbing(std::int64_t k);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  /// Order of the fundamental group Z_p.
  const Integer& group_order() const { return p_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  Integer p_;
  Integer q_;
};

/// eta(L(p,q)) = -(1/p) sum_{i=1}^{p-1} cot(i pi/p) cot(q i pi/p) = -4 s(q,p).
Rational eta_exact(const LensSpace& lens);

/// Direct floating summation of the cotangent pair sum at ctx precision.
BigFloat eta_float(const LensSpace& lens, const FloatContext& ctx);

/// Closed form -((2/3)k^3 - 2k^2 + 2) / (k^2 - 1) for eta(L(k^2-1, k)).
/// Throws DomainError for k < 2.
Rational eta_closed_form(std::int64_t k);

/// Cotangent table cot(i pi/p), i = 0..p-1, reused across all q for one p.
/// Entry 0 is a pole and is left at zero; it is never read by the eta sum.
class CotangentTable {
 public:
  CotangentTable(const Integer& p, const FloatContext& ctx);

  /// -(1/p) sum_i cot(i pi/p) cot(q i pi/p) from the cached values.
  BigFloat eta(const Integer& q) const;

  std::size_t order() const { return values_.size(); }

 private:
  std::vector<BigFloat> values_;
  unsigned bits_;
};

}  // namespace bubblecert
