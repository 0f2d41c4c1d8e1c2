#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

#include "bubblecert/rational.hpp"

namespace bubblecert {

/// Raised when a computed curvature integral comes out negative, i.e. the
/// candidate bubble topology cannot carry the metric in question.
class InfeasibleCandidate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Topology of M = CP^2 # 2(-CP^2).
inline constexpr int kSignatureM = -1;
inline constexpr int kC1SquaredM = 7;

/// Bounds on the curvature integrals of a compact Kahler surface, as
/// multiples of pi^2.
struct CurvatureBudget {
  PiSquared s_squared;
  PiSquared w_minus;
  PiSquared ric0;
  bool strict = true;
};

/// Budgets implied by A([omega]) < calabi_A_bound:
///   int s^2        < 32 A pi^2
///   int |W-|^2     = -12 tau(M) pi^2 + int s^2/24 < (12 + 32A/24) pi^2
///   int |Ric0|^2   = int s^2/4 - 8 pi^2 c1^2 < (8A - 56) pi^2, clamped at 0
/// Throws DomainError for a nonpositive bound.
CurvatureBudget compact_budgets(const Rational& calabi_A_bound);

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Candidate deepest bubble: a scalar-flat Kahler ALE surface with
/// b1 = b3 = 0, so chi = 1 + b2, and tau read off its intersection matrix.
class AleCandidate {
 public:
  AleCandidate(IntMatrix intersection_matrix, Integer gamma_order, Rational eta);

  /// Total space of O(-k) -> CP^1; the link is L(k,1).
  static AleCandidate line_bundle(std::int64_t k);
  /// Plumbing with intersection form [[-k,1],[1,-k]]; the link is L(k^2-1,k).
  static AleCandidate plumbing(std::int64_t k);

  int b2() const { return static_cast<int>(matrix_.rows()); }
  const IntMatrix& intersection_matrix() const { return matrix_; }
  int chi() const { return 1 + b2(); }
  int tau() const { return tau_; }
  const Integer& gamma_order() const { return gamma_order_; }
  const Rational& eta() const { return eta_; }

 private:
  IntMatrix matrix_;
  Integer gamma_order_;
  Rational eta_;
  int tau_ = 0;
};

/// Scalar-flat signature formula: int |W-|^2 = -12 (tau + eta) pi^2.
/// Throws InfeasibleCandidate when the result is negative.
PiSquared ale_w_minus(const AleCandidate& c);

/// Scalar-flat Gauss-Bonnet: int |Ric0|^2 = 2 (int|W-|^2 - 8 pi^2 (chi - 1/|Gamma|)).
/// Throws InfeasibleCandidate when the result is negative.
PiSquared ale_ric0(const AleCandidate& c, const PiSquared& w_minus);

/// (3/2) eta + (1/16 pi^2) int|Ric0|^2 - 1/|Gamma|; zero exactly when the
/// b2 = 2 candidate satisfies both formulas at once.
Rational combined_constraint_residual(const AleCandidate& c, const PiSquared& ric0);

/// int |Ric0|^2 = -8 pi^2 c1^2 = 8 (k-2)^2 / k pi^2 on O(-k).
PiSquared line_bundle_ric0(std::int64_t k);

/// Same integral on the [[-k,1],[1,-k]] plumbing from its first Chern class,
/// whose Poincare dual is (k-2)/(k-1) (E1+E2): int |Ric0|^2 = 16 (k-2)^2/(k-1) pi^2.
/// Independent of the eta invariant, so it cross-checks ale_ric0(plumbing(k)).
PiSquared plumbing_ric0_from_c1(std::int64_t k);

}  // namespace bubblecert
