#include "psm/apchar.hpp"

#include <algorithm>

namespace psm {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw invariant_error(what);
}

}  // namespace

APData ap_data(const APSpec& spec) {
  APData x;
  x.a = spec.a;
  x.d = spec.d;
  x.k = spec.k;
  x.b = spec.b();
  x.lambda = (x.a - 2) / (x.k - 1);
  x.mu = (x.a - 2) % (x.k - 1);

  if (x.d == 1) {
    x.d_a = 1;
    x.q_a = 0;
    x.d_b = 1;
    x.q_b = 0;
  } else {
    x.d_a = mod_inverse(x.d, x.a);
    x.q_a = (checked_mul(x.d, x.d_a) - 1) / x.a;
    x.d_b = mod_inverse(x.d, x.b);
    x.q_b = (checked_mul(x.d, x.d_b) - 1) / x.b;
  }
  require(x.d_b == x.d_a + (x.k - 1) * x.q_a, "ap_data: d_b linkage identity failed");
  require(x.q_b == x.q_a, "ap_data: q_b linkage identity failed");

  if (x.k == x.a) {
    x.a_b = mod_inverse(x.a, x.b);
    x.d_prime = mod_inverse(x.d, x.b - x.d);  // b-d = a+(a-2)d >= 2
    require(*x.a_b == (x.a - 1) * x.q_a + x.d_a + 1, "ap_data: a_b identity failed");
    require(*x.d_prime == x.d_a + (x.a - 2) * x.q_a, "ap_data: d_prime identity failed");
  }
  return x;
}

GapRatioMax max_gap_ratio(const APSpec& spec) {
  APData x = ap_data(spec);
  i64 num = checked_add(checked_mul(x.lambda, x.a), checked_mul(x.d, x.a - 1));
  i64 den = checked_add(checked_mul(x.lambda, x.d_a),
                        checked_add(checked_mul(x.q_a, x.a - 1), 1));
  return GapRatioMax{Rational(num, den), num};
}

GapRatioMin min_gap_ratio(const APSpec& spec) {
  APData x = ap_data(spec);
  i64 num = checked_add(checked_mul(x.lambda, x.b), x.d);
  i64 den = checked_add(checked_mul(x.lambda, x.d_b), x.q_b);
  return GapRatioMin{ratio_or_inf(num, den), num};
}

bool link_check(i64 a, i64 d) {
  if (a < 2 || d < 1 || gcd_nonneg(a, d) != 1) throw domain_error("link_check: bad (a,d)");
  APSpec spec(a, d, a);
  APData x = ap_data(spec);  // part (i) identities asserted inside
  i64 b = x.b;
  if (!x.a_b || !x.d_prime) return false;
  for (i64 g : ap_gaps(spec)) {
    i64 lhs_ceil = ceil_div(checked_mul(x.d_a, g), Rational(a));
    i64 rhs_ceil = ceil_div(checked_mul(*x.a_b, g), Rational(b));
    if (lhs_ceil != rhs_ceil) return false;
    i64 lhs_floor = floor_div(checked_mul(x.d_b, g), Rational(b));
    i64 rhs_floor = floor_div(checked_mul(*x.d_prime, g), Rational(b - d));
    if (lhs_floor != rhs_floor) return false;
  }
  return true;
}

std::string to_string(RegionFamily f) {
  switch (f) {
    case RegionFamily::increasing: return "increasing";
    case RegionFamily::decreasing: return "decreasing";
    case RegionFamily::wrap_low: return "wrap_low";
    case RegionFamily::wrap_high: return "wrap_high";
  }
  return "?";
}

bool AdmissibleRegion::contains(const Rational& alpha, const ExtRational& beta) const {
  if (!(alpha_lo < alpha && alpha <= alpha_hi)) return false;
  if (beta < ExtRational(beta_lo)) return false;
  if (beta_hi.is_infinite()) return true;  // [beta_lo, inf], beta = inf allowed
  return beta < beta_hi;
}

std::vector<AdmissibleRegion> theorem_I_regions(const APSpec& spec) {
  APData x = ap_data(spec);
  i64 a = x.a, d = x.d, b = x.b, lam = x.lambda;
  i64 d_a = x.d_a, q_a = x.q_a, d_b = x.d_b, q_b = x.q_b;

  auto region = [](Rational alo, Rational ahi, Rational blo, ExtRational bhi,
                   RegionFamily fam) {
    AdmissibleRegion r{alo, ahi, blo, bhi, fam};
    if (!(r.alpha_lo < r.alpha_hi) || !(ExtRational(r.beta_lo) < r.beta_hi) ||
        !(r.alpha_hi < r.beta_lo))
      throw invariant_error("theorem_I_regions: degenerate region");
    return r;
  };

  std::vector<AdmissibleRegion> out;
  auto mul = checked_mul;
  auto add = checked_add;
  auto sub = checked_sub;
  i64 F = add(mul(lam, a), mul(d, a - 1));        // Frobenius number
  i64 minarg_num = add(mul(lam, b), d);           // lambda*b + d

  // Endpoints come from the proof-level extremal bounds, with d_b taken as
  // the true inverse of d mod b (not the k = a substitution d_a + (a-1)q_a).
  out.push_back(region(
      Rational(F, add(mul(lam, d_a), add(mul(q_a, a - 1), 1))),
      Rational(a, d_a),
      Rational(b, d_b),
      ratio_or_inf(minarg_num, add(mul(lam, d_b), q_b)),
      RegionFamily::increasing));

  out.push_back(region(
      Rational(minarg_num, add(mul(lam, b - d_b), d - q_b)),
      Rational(b, b - d_b),
      Rational(a, a - d_a),
      ratio_or_inf(F, sub(add(mul(lam, a - d_a), mul(d - q_a, a - 1)), 1)),
      RegionFamily::decreasing));

  if (x.k == x.a) {
    i64 a_b = *x.a_b, d_p = *x.d_prime;
    out.push_back(region(
        Rational(mul(d, a - 1), add(mul(q_a, a - 1), 1)),
        Rational(b, a_b),
        Rational(b - d, d_p),
        ratio_or_inf(d, q_a),
        RegionFamily::wrap_low));
    out.push_back(region(
        Rational(d, d - q_a),
        Rational(b - d, b - d - d_p),
        Rational(b, b - a_b),
        ratio_or_inf(mul(d, a - 1), sub(mul(d - q_a, a - 1), 1)),
        RegionFamily::wrap_high));
  }
  return out;
}

bool characterize_interval(const APSpec& spec, const Rational& alpha,
                           const ExtRational& beta) {
  if (alpha < Rational(1))
    throw domain_error("characterize_interval: requires alpha >= 1");
  for (const AdmissibleRegion& r : theorem_I_regions(spec))
    if (r.contains(alpha, beta)) return true;
  return false;
}

bool TripleRegion::contains(i64 p, i64 q) const {
  Rational rp(p), rq(q);
  if (!(p_lo <= rp && rp < p_hi)) return false;
  Rational lo = rp + q_offset_lo;
  Rational hi = rp + q_offset_hi;
  return lo <= rq && rq < hi;
}

std::vector<TripleRegion> theorem_II_regions(const APSpec& spec, i64 m) {
  if (m < 1) throw domain_error("theorem_II_regions: m must be positive");
  Rational rm(m);
  std::vector<TripleRegion> out;
  for (const AdmissibleRegion& r : theorem_I_regions(spec)) {
    TripleRegion t;
    t.m = m;
    t.family = r.family;
    t.p_lo = rm / r.alpha_hi;
    t.p_hi = rm / r.alpha_lo;
    t.q_offset_lo = Rational(0) - rm / r.beta_lo;
    t.q_offset_hi = r.beta_hi.is_infinite() ? Rational(0)
                                            : Rational(0) - rm / r.beta_hi.value();
    // Keep only families that actually contain an integer point (p,q)
    // with 1 <= q < p < m.
    bool has_point = false;
    i64 p_first = ceil_div(t.p_lo.num(), Rational(t.p_lo.den()));
    i64 p_last = std::min<i64>(m - 1, floor_div(t.p_hi.num(), Rational(t.p_hi.den())));
    for (i64 p = p_first; p <= p_last && !has_point; ++p) {
      if (!(t.p_lo <= Rational(p) && Rational(p) < t.p_hi)) continue;
      Rational qlo = Rational(p) + t.q_offset_lo;
      Rational qhi = Rational(p) + t.q_offset_hi;
      for (i64 q = std::max<i64>(1, ceil_div(qlo.num(), Rational(qlo.den())));
           q < p; ++q) {
        if (Rational(q) >= qhi) break;
        if (qlo <= Rational(q)) {
          has_point = true;
          break;
        }
      }
    }
    if (has_point) out.push_back(t);
  }
  return out;
}

bool characterize_triple(const APSpec& spec, i64 p, i64 m, i64 q) {
  if (!(0 < q && q < p && p < m))
    throw domain_error("characterize_triple: requires 0 < q < p < m");
  return characterize_interval(spec, Rational(m, p), ExtRational(Rational(m, p - q)));
}

}  // namespace psm
