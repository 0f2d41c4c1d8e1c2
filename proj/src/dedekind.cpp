#include "bubblecert/dedekind.hpp"

#include <utility>

namespace bubblecert {

Rational dedekind_reciprocity_rhs(const Integer& h, const Integer& k) {
  return Rational(-1, 4) + Rational(h * h + k * k + 1, 12 * h * k);
}

Rational dedekind_sum(const Integer& h, const Integer& k) {
  if (k <= 0) throw DomainError("dedekind_sum: k must be positive");
  if (h < 0 || h >= k) throw DomainError("dedekind_sum: requires 0 <= h < k");
  if (gcd(h, k) != 1) throw DomainError("dedekind_sum: h and k must be coprime");

  // s(h,k) = R(h,k) - s(k mod h, h), unrolled with alternating sign.
  Rational total = 0;
  bool add = true;
  Integer a = h;
  Integer b = k;
  while (a != 0) {
    const Rational step = dedekind_reciprocity_rhs(a, b);
    total += add ? step : Rational(-step);
    add = !add;
    Integer next = b % a;
    b = std::move(a);
    a = std::move(next);
  }
  return total;  // s(0,1) = 0 terminates the chain
}

}  // namespace bubblecert
