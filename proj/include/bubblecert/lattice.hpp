#pragma once

#include <Eigen/Core>

#include "bubblecert/rational.hpp"

namespace bubblecert {

/// Inertia of a symmetric form: counts of positive, negative and zero
/// eigenvalues. Computed exactly, never through floating eigenvalues.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int signature() const { return positive - negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Congruence diagonalization P^T G P = diag(d) over Q. Sylvester's law of
/// inertia makes the sign pattern of d independent of the pivoting order.
Eigen::Matrix<Rational, Eigen::Dynamic, 1> congruence_diagonal(RationalMatrix gram);

/// Inertia of any symmetric matrix whose scalar converts to Rational.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& gram) {
  const RationalMatrix q = gram.template cast<Rational>();
  if (q.rows() != q.cols()) throw DomainError("intersection matrix must be square");
  if (q != q.transpose()) throw DomainError("intersection matrix must be symmetric");
  Inertia out;
  for (const Rational& d : congruence_diagonal(q)) {
    if (d > 0) ++out.positive;
    else if (d < 0) ++out.negative;
    else ++out.zero;
  }
  return out;
}

}  // namespace bubblecert
