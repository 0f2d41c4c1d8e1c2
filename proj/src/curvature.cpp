#include "bubblecert/curvature.hpp"

#include "bubblecert/eta.hpp"
#include "bubblecert/lattice.hpp"

namespace bubblecert {

CurvatureBudget compact_budgets(const Rational& calabi_A_bound) {
  if (calabi_A_bound <= 0) throw DomainError("Calabi bound must be positive");
  CurvatureBudget b;
  b.s_squared = PiSquared(32 * calabi_A_bound);
  // int |W+|^2 = int s^2/24 on a Kahler surface, and tau(M) = -1.
  b.w_minus = PiSquared(Rational(-12 * kSignatureM) + b.s_squared.coefficient / 24);
  Rational ric0 = b.s_squared.coefficient / 4 - 8 * kC1SquaredM;
  if (ric0 < 0) ric0 = 0;
  b.ric0 = PiSquared(ric0);
  b.strict = true;
  return b;
}

AleCandidate::AleCandidate(IntMatrix intersection_matrix, Integer gamma_order, Rational eta)
    : matrix_(std::move(intersection_matrix)),
      gamma_order_(std::move(gamma_order)),
      eta_(std::move(eta)) {
  if (gamma_order_ < 1) throw DomainError("|Gamma| must be positive");
  tau_ = inertia(matrix_).signature();
}

AleCandidate AleCandidate::line_bundle(std::int64_t k) {
  if (k < 1) throw DomainError("line bundle degree k must be >= 1");
  IntMatrix q(1, 1);
  q << -k;
  const Rational eta = k == 1 ? Rational(0) : eta_exact(LensSpace(Integer(k), Integer(1)));
  return AleCandidate(std::move(q), Integer(k), eta);
}

AleCandidate AleCandidate::plumbing(std::int64_t k) {
  if (k < 2) throw DomainError("plumbing candidate needs k >= 2");
  IntMatrix q(2, 2);
  q << -k, 1, 1, -k;
  const LensSpace lens = LensSpace::for_plumbing(k);
  return AleCandidate(std::move(q), lens.group_order(), eta_exact(lens));
}

PiSquared ale_w_minus(const AleCandidate& c) {
  const Rational v = -12 * (Rational(c.tau()) + c.eta());
  if (v < 0) {
    throw InfeasibleCandidate("negative int|W-|^2 = " + to_display_string(v) +
                              "π² (tau=" + std::to_string(c.tau()) +
                              ", eta=" + to_display_string(c.eta()) + ")");
  }
  return PiSquared(v);
}

PiSquared ale_ric0(const AleCandidate& c, const PiSquared& w_minus) {
  const Rational v =
      2 * (w_minus.coefficient - 8 * (Rational(c.chi()) - Rational(1) / Rational(c.gamma_order())));
  if (v < 0) {
    throw InfeasibleCandidate("negative int|Ric0|^2 = " + to_display_string(v) + "π² (chi=" +
                              std::to_string(c.chi()) + ", |Gamma|=" + c.gamma_order().str() + ")");
  }
  return PiSquared(v);
}

Rational combined_constraint_residual(const AleCandidate& c, const PiSquared& ric0) {
  if (c.b2() != 2) throw DomainError("the combined b2 = 2 constraint needs b2 = 2");
  return Rational(3, 2) * c.eta() + ric0.coefficient / 16 - Rational(1) / Rational(c.gamma_order());
}

PiSquared line_bundle_ric0(std::int64_t k) {
  if (k < 1) throw DomainError("line bundle degree k must be >= 1");
  return PiSquared(Rational(8 * (k - 2) * (k - 2), k));
}

}  // namespace bubblecert

namespace bubblecert {

PiSquared plumbing_ric0_from_c1(std::int64_t k) {
  if (k < 2) throw DomainError("plumbing candidate needs k >= 2");
  RationalMatrix q(2, 2);
  q << Rational(-k), Rational(1), Rational(1), Rational(-k);
  Eigen::Matrix<Rational, 2, 1> dual;
  dual << Rational(k - 2, k - 1), Rational(k - 2, k - 1);
  const Rational c1_sq = dual.dot(q * dual);
  return PiSquared(-8 * c1_sq);
}

}  // namespace bubblecert
