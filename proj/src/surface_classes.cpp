#include "bubblecert/surface_classes.hpp"

#include <cmath>
#include <stdexcept>

namespace bubblecert {

CohClass symmetric_class(const SymmetricClassParam& x) {
  const Rational& t = x.value();
  return {1 + t, 1 + t, -t};
}

Rational volume_normalizer_sq(const SymmetricClassParam& x) {
  const Rational& t = x.value();
  const Rational v = 1 + 2 * t + t * t / 2;
  const CohClass w = symmetric_class(x);
  if (pair(w, w) != 2 * v) throw std::logic_error("unit-volume normalizer mismatch");
  return v;
}

CohClass c1() { return {Rational(2), Rational(2), Rational(-1)}; }

Rational calabi_bound_first_term(const SymmetricClassParam& x) {
  const CohClass w = symmetric_class(x);
  const Rational c1w = pair(c1(), w);
  return c1w * c1w / pair(w, w);
}

Rational calabi_bound(const SymmetricClassParam& x, const std::optional<Rational>& futaki_over_32pi2) {
  Rational a = calabi_bound_first_term(x);
  if (futaki_over_32pi2) a -= *futaki_over_32pi2;
  return a;
}

double AreaValue::to_double() const {
  return bubblecert::to_double(numerator) / std::sqrt(bubblecert::to_double(denominator_sq));
}

AreaValue area_value(const Integer& m, const Integer& n, const SymmetricClassParam& x) {
  const Rational& t = x.value();
  return {2 * Rational(m) * (1 + t) + Rational(n) * t, 1 + 2 * t + t * t / 2};
}

}  // namespace bubblecert
