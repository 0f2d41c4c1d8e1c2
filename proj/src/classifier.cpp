#include "bubblecert/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "bubblecert/curvature.hpp"
#include "bubblecert/eta.hpp"

namespace bubblecert {

std::vector<std::int64_t> classify_b2_1(const PiSquared& ric0_budget, bool strict) {
  const auto admits = [&](const PiSquared& v) {
    return strict ? v < ric0_budget : v <= ric0_budget;
  };
  std::vector<std::int64_t> out;
  if (admits(line_bundle_ric0(1))) out.push_back(1);
  // 8(k-2)^2/k is increasing for k >= 2.
  for (std::int64_t k = 2;; ++k) {
    if (!admits(line_bundle_ric0(k))) break;
    out.push_back(k);
  }
  return out;
}

PlumbingClassification classify_b2_2(const PiSquared& w_minus_budget, std::int64_t k_max) {
  if (k_max < 2) throw DomainError("classify_b2_2 needs k_max >= 2");
  // (1/12 pi^2) int|W-|^2 = 2 - eta must stay below W/12.
  const Rational eta_floor = 2 - w_minus_budget.coefficient / 12;
  const Rational eta_cap(1, 3);

  PlumbingClassification out;
  for (std::int64_t k = 2; k <= k_max; ++k) {
    const LensSpace lens = LensSpace::for_plumbing(k);
    PlumbingRow row;
    row.k = k;
    row.gamma_order = lens.group_order();
    row.eta = eta_exact(lens);
    row.implied_ric0 =
        PiSquared(16 * (Rational(1) / Rational(row.gamma_order) - Rational(3, 2) * row.eta));
    row.ric0_negative = row.implied_ric0.coefficient < 0;
    row.admitted = row.eta > eta_floor && row.eta <= eta_cap;
    if (row.admitted) out.admitted.push_back(k);
    out.rows.push_back(std::move(row));
  }
  return out;
}

PellClass::PellClass(Integer m_, Integer n_, std::int64_t k_)
    : m(std::move(m_)), n(std::move(n_)), k(k_) {
  if (k <= 0) throw DomainError("Pell class needs k > 0");
  if (2 * m * m - n * n != -k) {
    throw DomainError("(" + m.str() + "," + n.str() + ") does not satisfy 2m^2-n^2=-" +
                      std::to_string(k));
  }
}

namespace {

void require_pell_k(std::int64_t k) {
  if (k < 1 || k > 5) throw DomainError("k must lie in 1..5");
}

// Rational brackets 140/99 < sqrt(2) < 99/70.
const Rational& sqrt2_lo() {
  static const Rational v(140, 99);
  return v;
}
const Rational& sqrt2_hi() {
  static const Rational v(99, 70);
  return v;
}

// Minimum of a x^2 + b x + c over [lo, hi]; nullopt when unbounded below.
std::optional<Rational> quadratic_min(const Rational& a, const Rational& b, const Rational& c,
                                      const ParamInterval& iv) {
  const auto eval = [&](const Rational& x) { return (a * x + b) * x + c; };
  Rational best = eval(iv.lo());
  if (iv.hi()) best = std::min(best, eval(*iv.hi()));
  if (!iv.hi() && (a < 0 || (a == 0 && b < 0))) return std::nullopt;
  if (a > 0) {
    const Rational vertex = -b / (2 * a);
    if (iv.contains(vertex)) best = std::min(best, eval(vertex));
  }
  return best;
}

Rational denominator_sq(const Rational& x) { return 1 + 2 * x + x * x / 2; }

}  // namespace

std::vector<PellClass> pell_solutions(std::int64_t k, std::int64_t m_bound) {
  require_pell_k(k);
  if (m_bound < 1) throw DomainError("m_bound must be >= 1");
  std::vector<PellClass> out;
  for (std::int64_t am = 0; am <= m_bound; ++am) {
    Integer root;
    if (!is_perfect_square(2 * Integer(am) * am + k, &root)) continue;
    for (const std::int64_t sm : {-am, am}) {
      for (const Integer& n : {Integer(-root), root}) out.emplace_back(Integer(sm), n, k);
      if (am == 0) break;
    }
  }
  // root > 0 always, so (m, n) pairs above are distinct.
  return out;
}

ParamInterval::ParamInterval(Rational lo, std::optional<Rational> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ <= 0) throw DomainError("interval lower end A must be positive");
  if (hi_ && *hi_ <= lo_) throw DomainError("interval needs A < B");
}

std::int64_t tail_bound(std::int64_t k, const ParamInterval& interval, const Rational& level) {
  require_pell_k(k);
  if (level <= 0) throw DomainError("tail level must be positive");
  constexpr std::int64_t kSearchLimit = 1'000'000;
  for (std::int64_t t = 1; t <= kSearchLimit; ++t) {
    // |2m(1+x) + nx| >= alpha + beta x, with sqrt(2t^2+k) bounded above by
    // (99/70) t + k / (2 (140/99) t). alpha, beta both grow with t.
    const Rational alpha(2 * t);
    const Rational beta = (2 - sqrt2_hi()) * t - Rational(k) / (2 * sqrt2_lo() * t);
    const auto line_at = [&](const Rational& x) { return alpha + beta * x; };
    if (line_at(interval.lo()) <= 0) continue;
    if (interval.hi() ? line_at(*interval.hi()) <= 0 : beta < 0) continue;
    // (alpha + beta x)^2 - level (1 + 2x + x^2/2) >= 0 on the interval.
    const auto q = quadratic_min(beta * beta - level / 2, 2 * alpha * beta - 2 * level,
                                 alpha * alpha - level, interval);
    if (q && *q >= 0) return std::max<std::int64_t>(1, t - 1);
  }
  throw std::runtime_error("tail_bound: no certificate found below |m| = 10^6");
}

Rational area_sq_at(const PellClass& c, const Rational& x) {
  const Rational num = 2 * Rational(c.m) * (1 + x) + Rational(c.n) * x;
  return num * num / denominator_sq(x);
}

AreaInfimum area_infimum_sq(const PellClass& c, const ParamInterval& interval) {
  AreaInfimum out;
  const Integer slope = 2 * c.m + c.n;  // numerator is 2m + slope * x
  if (slope != 0) {
    const Rational root(Integer(-2 * c.m), slope);
    if (interval.contains(root)) {
      out.infimum_sq = 0;
      out.vanishing_point = root;
      out.argmin = root;
      return out;
    }
  }

  // d/dx eps^2 = N (2n + 2(m+n)x) / D^2, so the only interior critical point is -n/(m+n).
  std::vector<Rational> candidates{interval.lo()};
  if (interval.hi()) candidates.push_back(*interval.hi());
  if (c.m + c.n != 0) {
    const Rational crit(Integer(-c.n), Integer(c.m + c.n));
    if (crit > interval.lo() && (!interval.hi() || crit < *interval.hi())) {
      out.critical_point = crit;
      candidates.push_back(crit);
    }
  }
  out.argmin = candidates.front();
  out.infimum_sq = area_sq_at(c, candidates.front());
  for (const Rational& x : candidates) {
    const Rational v = area_sq_at(c, x);
    if (v < out.infimum_sq) {
      out.infimum_sq = v;
      out.argmin = x;
    }
  }
  if (!interval.hi()) {
    // eps^2 -> slope^2 x^2 / (x^2/2) = 2 slope^2 as x -> infinity.
    const Rational at_infinity = 2 * Rational(slope * slope);
    if (at_infinity < out.infimum_sq) {
      out.infimum_sq = at_infinity;
      out.argmin.reset();
    }
  }
  return out;
}

ExclusionReport exclusion_verdict(const ParamInterval& interval) {
  Rational level(1);
  for (;;) {
    ExclusionReport report{interval, {}, Rational(0), {}, false, 1, level};
    for (std::int64_t k = 1; k <= 5; ++k)
      report.tail_bound_m = std::max(report.tail_bound_m, tail_bound(k, interval, level));

    bool first = true;
    for (std::int64_t k = 1; k <= 5; ++k) {
      for (PellClass& cls : pell_solutions(k, report.tail_bound_m)) {
        AreaInfimum inf = area_infimum_sq(cls, interval);
        if (first || inf.infimum_sq < report.global_min_sq) report.global_min_sq = inf.infimum_sq;
        first = false;
        report.per_class.push_back({std::move(cls), std::move(inf)});
      }
    }
    // Classes beyond the tail bound sit at or above `level`; when the
    // enumerated minimum is larger, raise the level and enumerate further.
    if (report.global_min_sq > level) {
      level = report.global_min_sq;
      continue;
    }
    for (const ClassInfimum& ci : report.per_class)
      if (ci.infimum.infimum_sq == report.global_min_sq) report.witnesses.push_back(ci.cls);
    report.excluded = report.global_min_sq > 0;
    return report;
  }
}

}  // namespace bubblecert
