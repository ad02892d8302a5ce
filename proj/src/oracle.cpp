#include "psm/oracle.hpp"

#include <algorithm>

#include "psm/intervals.hpp"
#include "psm/propmod.hpp"

namespace psm {

std::vector<char> naive_semigroup(const std::vector<i64>& generators, i64 bound) {
  if (generators.empty()) throw domain_error("naive_semigroup: empty generator set");
  i64 g = 0;
  for (i64 x : generators) {
    if (x <= 0) throw domain_error("naive_semigroup: generators must be positive");
    g = g == 0 ? x : gcd_nonneg(g, x);
  }
  if (g != 1) throw domain_error("naive_semigroup: gcd of generators exceeds 1");

  std::vector<char> member(static_cast<size_t>(bound) + 1, 0);
  member[0] = 1;
  for (i64 x = 1; x <= bound; ++x)
    for (i64 gen : generators)
      if (gen <= x && member[static_cast<size_t>(x - gen)]) {
        member[static_cast<size_t>(x)] = 1;
        break;
      }
  return member;
}

ExtremaReport scan_extrema(const APSpec& spec) {
  APData x = ap_data(spec);
  std::vector<i64> gaps = ap_gaps(spec);

  ExtremaReport rep;

  // Exhaustive maximum of g / ceil(d_a*g/a).
  bool have_max = false;
  Rational best_max;
  i64 best_max_arg = 0;
  for (i64 g : gaps) {  // ascending, so ties keep the largest gap
    Rational v(g, ceil_div(checked_mul(x.d_a, g), Rational(x.a)));
    if (!have_max || best_max <= v) {
      best_max = v;
      best_max_arg = g;
      have_max = true;
    }
  }

  // Exhaustive minimum of g / floor(d_b*g/b) over d_b*g >= b.
  bool have_min = false;
  Rational best_min;
  i64 best_min_arg = 0;
  for (i64 g : gaps) {
    if (checked_mul(x.d_b, g) < x.b) continue;
    Rational v(g, floor_div(checked_mul(x.d_b, g), Rational(x.b)));
    if (!have_min || v < best_min) {
      best_min = v;
      best_min_arg = g;
      have_min = true;
    }
  }

  GapRatioMax closed_max = max_gap_ratio(spec);
  GapRatioMin closed_min = min_gap_ratio(spec);

  rep.max_value = best_max;
  rep.max_arg = best_max_arg;
  rep.min_value = have_min ? ExtRational(best_min) : ExtRational::infinity();
  rep.min_arg = have_min ? best_min_arg : 0;

  rep.agree = true;
  if (!have_max || best_max != closed_max.value || best_max_arg != closed_max.argmax) {
    rep.agree = false;
    rep.detail += "max mismatch; ";
  }
  if (closed_min.value.is_infinite() != !have_min) {
    rep.agree = false;
    rep.detail += "min emptiness mismatch; ";
  } else if (have_min && (ExtRational(best_min) != closed_min.value ||
                          best_min_arg != closed_min.argmin)) {
    rep.agree = false;
    rep.detail += "min mismatch; ";
  }
  return rep;
}

namespace {

// Exact semigroup comparison: S([alpha,beta]) vs the AP membership bitmap.
// Beyond max(window bound, frobenius+1) both sides are all-members.
bool interval_equals_ap(const ClosedInterval& I, const std::vector<char>& ap_member,
                        i64 ap_frob) {
  i64 window_bound;
  if (I.hi.is_infinite()) {
    window_bound = ceil_div(I.lo.num(), Rational(I.lo.den()));
  } else {
    if (I.lo == I.hi.value()) {
      // Degenerate: multiples of lo.num(); never equal to an AP semigroup
      // with a >= 2, and equal to Z>=0 only when num = 1.
      return I.lo.num() == 1 && ap_frob == -1;
    }
    Rational b = I.lo * I.hi.value() / (I.hi.value() - I.lo);
    window_bound = ceil_div(b.num(), Rational(b.den()));
  }
  i64 limit = std::max(window_bound, ap_frob + 1);
  for (i64 g = 1; g <= limit; ++g) {
    bool in_ap = g >= static_cast<i64>(ap_member.size()) ? true
                                                         : ap_member[static_cast<size_t>(g)] != 0;
    if (interval_contains_member(I, g) != in_ap) return false;
  }
  return true;
}

}  // namespace

RegionScanReport scan_regions(const APSpec& spec, i64 D) {
  if (D < 2) throw domain_error("scan_regions: denominator bound must be >= 2");
  std::vector<AdmissibleRegion> regions = theorem_I_regions(spec);

  // Sample numerators one past the largest finite endpoint, plus margin,
  // so both sides of every boundary are visited.
  i64 num_max = 0;
  for (const AdmissibleRegion& r : regions) {
    for (const Rational* p : {&r.alpha_lo, &r.alpha_hi, &r.beta_lo})
      num_max = std::max(num_max, ceil_div(p->num(), Rational(p->den())));
    if (!r.beta_hi.is_infinite())
      num_max = std::max(num_max, ceil_div(r.beta_hi.value().num(),
                                           Rational(r.beta_hi.value().den())));
  }
  num_max += 3;

  std::vector<Rational> points;
  for (i64 q = 1; q <= D; ++q)
    for (i64 p = q; p <= num_max; ++p)
      if (gcd_nonneg(p, q) == 1) points.emplace_back(p, q);
  std::sort(points.begin(), points.end());

  i64 frob = ap_frobenius(spec);
  std::vector<char> ap_member = naive_semigroup(spec.generators(), frob + 1);

  auto in_some_region = [&](const Rational& alpha, const ExtRational& beta) {
    for (const AdmissibleRegion& r : regions)
      if (r.contains(alpha, beta)) return true;
    return false;
  };

  RegionScanReport rep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rational& alpha = points[i];
      const Rational& beta = points[j];
      if (!(alpha < beta)) continue;  // equal values from different indices
      bool predicted = in_some_region(alpha, ExtRational(beta));
      bool actual = interval_equals_ap(ClosedInterval(alpha, ExtRational(beta)),
                                       ap_member, frob);
      ++rep.checks_run;
      if (predicted != actual)
        rep.counterexamples.push_back({alpha, ExtRational(beta), predicted, actual});
    }
    // beta = +infinity
    const Rational& alpha = points[i];
    bool predicted = in_some_region(alpha, ExtRational::infinity());
    bool actual = interval_equals_ap(ClosedInterval(alpha, ExtRational::infinity()),
                                     ap_member, frob);
    ++rep.checks_run;
    if (predicted != actual)
      rep.counterexamples.push_back({alpha, ExtRational::infinity(), predicted, actual});
  }
  return rep;
}


ConversionSweepReport scan_pm_conversions(i64 bound) {
  ConversionSweepReport rep;
  for (i64 b = 3; b <= bound; ++b) {
    for (i64 a = 2; a < b; ++a) {
      for (i64 c = 1; c < a; ++c) {
        PMTriple t(a, b, c);
        NumericalSemigroup s = pm_semigroup(t);
        std::string tag = std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c);
        if (pm_semigroup(pm_dual(t)) != s)
          rep.counterexamples.push_back(tag + ": dual gap set differs");
        if (interval_semigroup(pm_to_interval(t)) != s)
          rep.counterexamples.push_back(tag + ": interval conversion differs");
        rep.checks_run += 2;
      }
    }
  }
  return rep;
}

}  // namespace psm
