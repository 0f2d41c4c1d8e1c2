#pragma once

#include "bubblecert/rational.hpp"

namespace bubblecert {

/// Classical Dedekind sum s(h,k) = sum_{i=1}^{k-1} ((i/k))((hi/k)), evaluated
/// exactly in O(log k) steps by the reciprocity law
///   s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1) / (12hk).
/// Requires 0 <= h < k and gcd(h,k) = 1; throws DomainError otherwise.
Rational dedekind_sum(const Integer& h, const Integer& k);

/// Right-hand side of the reciprocity law for coprime positive h, k.
Rational dedekind_reciprocity_rhs(const Integer& h, const Integer& k);

}  // namespace bubblecert
