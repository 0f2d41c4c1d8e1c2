#pragma once

#include <optional>

#include <Eigen/Core>

#include "bubblecert/rational.hpp"

namespace bubblecert {

/// Gram matrix of the intersection form of CP^2 # 2(-CP^2) in the basis
/// (F1, F2, E): F1.F2 = 1, F1^2 = F2^2 = 0, E^2 = -1.
template <typename Scalar = Rational>
Eigen::Matrix<Scalar, 3, 3> intersection_form() {
  Eigen::Matrix<Scalar, 3, 3> g;
  g << Scalar(0), Scalar(1), Scalar(0),
       Scalar(1), Scalar(0), Scalar(0),
       Scalar(0), Scalar(0), Scalar(-1);
  return g;
}

/// A class aF1 + bF2 + eE in H^2(M; Q).
template <typename Scalar>
class CohomologyClass {
 public:
  using Coords = Eigen::Matrix<Scalar, 3, 1>;

  CohomologyClass() : coords_(Coords::Zero()) {}
  CohomologyClass(Scalar a, Scalar b, Scalar e) { coords_ << a, b, e; }
  explicit CohomologyClass(Coords c) : coords_(std::move(c)) {}

  static CohomologyClass F1() { return {Scalar(1), Scalar(0), Scalar(0)}; }
  static CohomologyClass F2() { return {Scalar(0), Scalar(1), Scalar(0)}; }
  static CohomologyClass E() { return {Scalar(0), Scalar(0), Scalar(1)}; }

  const Scalar& a() const { return coords_(0); }
  const Scalar& b() const { return coords_(1); }
  const Scalar& e() const { return coords_(2); }
  const Coords& coords() const { return coords_; }

  /// Image under the involution F1 <-> F2.
  CohomologyClass swapped() const { return {b(), a(), e()}; }

  friend CohomologyClass operator+(const CohomologyClass& u, const CohomologyClass& v) {
    return CohomologyClass(Coords(u.coords_ + v.coords_));
  }
  friend CohomologyClass operator-(const CohomologyClass& u, const CohomologyClass& v) {
    return CohomologyClass(Coords(u.coords_ - v.coords_));
  }
  friend CohomologyClass operator*(const Scalar& s, const CohomologyClass& u) {
    return CohomologyClass(Coords(u.coords_ * s));
  }
  friend bool operator==(const CohomologyClass& u, const CohomologyClass& v) {
    return u.coords_ == v.coords_;
  }

 private:
  Coords coords_;
};

using CohClass = CohomologyClass<Rational>;

/// Intersection pairing u.v = u.a v.b + u.b v.a - u.e v.e.
template <typename Scalar>
Scalar pair(const CohomologyClass<Scalar>& u, const CohomologyClass<Scalar>& v) {
  return u.coords().dot(intersection_form<Scalar>() * v.coords());
}

/// Parameter of the bilaterally symmetric family; strictly positive.
class SymmetricClassParam {
 public:
  explicit SymmetricClassParam(Rational x) : x_(std::move(x)) {
    if (x_ <= 0) throw DomainError("symmetric class parameter x must be positive");
  }
  const Rational& value() const { return x_; }

 private:
  Rational x_;
};

/// [omega]_x = (1+x)(F1+F2) - xE.
CohClass symmetric_class(const SymmetricClassParam& x);

/// 1 + 2x + x^2/2, the squared normalizer that brings [omega]_x to unit
/// volume. Checks the identity [omega]_x^2 = 2 (1 + 2x + x^2/2).
Rational volume_normalizer_sq(const SymmetricClassParam& x);

/// First Chern class 2F1 + 2F2 - E; c1^2 = 7.
CohClass c1();

/// Leading term (c1.[omega])^2 / [omega]^2 = (4+3x)^2 / (2+4x+x^2) of the
/// Calabi lower bound. The Futaki contribution is not computed here.
Rational calabi_bound_first_term(const SymmetricClassParam& x);

/// First term minus an optional caller-supplied Futaki correction
/// F(Xi,[omega]) / (32 pi^2).
Rational calabi_bound(const SymmetricClassParam& x,
                      const std::optional<Rational>& futaki_over_32pi2 = std::nullopt);

/// Pairing of m(F1+F2) + nE with the unit-volume class, kept as
/// numerator / sqrt(denominator_sq) so that everything stays rational.
struct AreaValue {
  Rational numerator;
  Rational denominator_sq;

  Rational squared() const { return numerator * numerator / denominator_sq; }
  double to_double() const;
};

/// numerator = 2m(1+x) + nx, denominator_sq = 1 + 2x + x^2/2.
AreaValue area_value(const Integer& m, const Integer& n, const SymmetricClassParam& x);

}  // namespace bubblecert
