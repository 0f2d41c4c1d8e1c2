#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bubblecert/rational.hpp"

namespace bubblecert {

/// Degrees k >= 1 with line_bundle_ric0(k) below the budget (strictly by
/// default). The set is finite since 8(k-2)^2/k grows without bound.
std::vector<std::int64_t> classify_b2_1(const PiSquared& ric0_budget, bool strict = true);

struct PlumbingRow {
  std::int64_t k = 0;
  Integer gamma_order;
  Rational eta;
  /// 16 (1/|Gamma| - (3/2) eta), the Ric0 integral forced by the combined
  /// Gauss-Bonnet and signature constraint.
  PiSquared implied_ric0;
  bool ric0_negative = false;
  bool admitted = false;
};

struct PlumbingClassification {
  std::vector<std::int64_t> admitted;
  std::vector<PlumbingRow> rows;
};

/// b2 = 2 candidates [[-k,1],[1,-k]], k = 2..k_max, with link L(k^2-1,k).
/// Admits k when 2 - W/12 < eta <= 1/3, W the |W-|^2 budget coefficient.
/// With W = 24 this is 0 < eta <= 1/3.
PlumbingClassification classify_b2_2(const PiSquared& w_minus_budget, std::int64_t k_max = 100);

/// A class m(F1+F2) + nE of self-intersection 2m^2 - n^2 = -k.
struct PellClass {
  Integer m;
  Integer n;
  std::int64_t k = 0;

  PellClass() = default;
  /// Throws DomainError unless 2m^2 - n^2 = -k with k > 0.
  PellClass(Integer m, Integer n, std::int64_t k);

  friend bool operator==(const PellClass&, const PellClass&) = default;
};

/// All (m,n) with 2m^2 - n^2 = -k and |m| <= m_bound, sorted by |m|.
std::vector<PellClass> pell_solutions(std::int64_t k, std::int64_t m_bound);

/// Parameter interval [lo, hi] with 0 < lo < hi; hi absent means +infinity.
class ParamInterval {
 public:
  ParamInterval(Rational lo, std::optional<Rational> hi);

  static ParamInterval bounded(Rational lo, Rational hi) {
    return ParamInterval(std::move(lo), std::optional<Rational>(std::move(hi)));
  }
  static ParamInterval unbounded(Rational lo) { return ParamInterval(std::move(lo), std::nullopt); }

  const Rational& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool is_bounded() const { return hi_.has_value(); }
  bool contains(const Rational& x) const { return x >= lo_ && (!hi_ || x <= *hi_); }

  friend bool operator==(const ParamInterval&, const ParamInterval&) = default;

 private:
  Rational lo_;
  std::optional<Rational> hi_;
};

/// m* such that every class with |m| > m* and 2m^2 - n^2 = -k has
/// eps(x)^2 >= level on the whole interval. Certified with exact rational
/// arithmetic only.
std::int64_t tail_bound(std::int64_t k, const ParamInterval& interval,
                        const Rational& level = Rational(1));

/// Exact infimum of eps(x)^2 = (2m(1+x)+nx)^2 / (1+2x+x^2/2) over the interval.
struct AreaInfimum {
  Rational infimum_sq;
  /// Root of the numerator inside the interval, when there is one.
  std::optional<Rational> vanishing_point;
  /// Where the infimum is attained; absent when it is only approached as x -> infinity.
  std::optional<Rational> argmin;
  /// Interior critical point -n/(m+n), when it lies strictly inside.
  std::optional<Rational> critical_point;
};

AreaInfimum area_infimum_sq(const PellClass& c, const ParamInterval& interval);

/// eps(x)^2 at one point, exactly.
Rational area_sq_at(const PellClass& c, const Rational& x);

struct ClassInfimum {
  PellClass cls;
  AreaInfimum infimum;
};

struct ExclusionReport {
  ParamInterval interval;
  std::vector<ClassInfimum> per_class;
  Rational global_min_sq;
  std::vector<PellClass> witnesses;
  bool excluded = false;
  std::int64_t tail_bound_m = 1;
  /// Every class with |m| > tail_bound_m has eps^2 >= tail_level.
  Rational tail_level;
};

/// For k = 1..5 enumerates every class up to the tail bound and takes the
/// exact minimum of the certified infima. Excluded iff that minimum is > 0.
ExclusionReport exclusion_verdict(const ParamInterval& interval);

}  // namespace bubblecert
