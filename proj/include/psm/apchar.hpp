#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psm/arith.hpp"
#include "psm/semigroup.hpp"

namespace psm {

// Modular data attached to AP(a,d;k): b = a+(k-1)d, the quotient/remainder
// pair (lambda, mu) of a-2 by k-1, and the inverse pairs
//   d*d_a = 1 + q_a*a,   d*d_b = 1 + q_b*b,
// plus, when k = a, a_b = a^{-1} mod b and d_prime = d^{-1} mod (b-d).
// The linkage identities d_b = d_a + (k-1)q_a and q_b = q_a are asserted.
struct APData {
  i64 a, d, k;
  i64 b;
  i64 lambda, mu;
  i64 d_a, q_a;
  i64 d_b, q_b;
  std::optional<i64> a_b;      // defined when k = a
  std::optional<i64> d_prime;  // defined when k = a
};

APData ap_data(const APSpec& spec);

// max{ g / ceil(d_a*g/a) : g in G(S) }, attained at g = F(S).
struct GapRatioMax {
  Rational value;
  i64 argmax;  // = F(S)
};
GapRatioMax max_gap_ratio(const APSpec& spec);

// min{ g / floor(d_b*g/b) : g in G(S), d_b*g >= b }, attained at
// g = lambda*b + d. The constrained set is empty exactly when lambda = 0
// and q_b = 0; the value is then +infinity.
struct GapRatioMin {
  ExtRational value;
  i64 argmin;  // = lambda*b + d (meaningful when value is finite)
};
GapRatioMin min_gap_ratio(const APSpec& spec);

// Checks every linkage identity (k = a case) over the
// full gap set: the closed forms for a_b, d_prime, d_b, q_b and the
// ceiling/floor agreements ceil(d_a*g/a) = ceil(a_b*g/b) and
// floor(d_b*g/b) = floor(d_prime*g/(b-d)).
bool link_check(i64 a, i64 d);

enum class RegionFamily { increasing, decreasing, wrap_low, wrap_high };

std::string to_string(RegionFamily f);

// One admissible (alpha, beta) family: alpha in (alpha_lo, alpha_hi],
// beta in [beta_lo, beta_hi). A beta_hi of +infinity makes the beta range
// unbounded (beta = +infinity included).
struct AdmissibleRegion {
  Rational alpha_lo;   // exclusive
  Rational alpha_hi;   // inclusive
  Rational beta_lo;    // inclusive
  ExtRational beta_hi; // exclusive (unbounded when infinite)
  RegionFamily family;

  bool contains(const Rational& alpha, const ExtRational& beta) const;
};

// The complete characterization of intervals [alpha, beta] with
// S([alpha,beta]) = S(AP(a,d;k)): two families for k < a, four for k = a.
std::vector<AdmissibleRegion> theorem_I_regions(const APSpec& spec);

// True iff (alpha, beta) lies in some admissible region. Requires alpha >= 1.
bool characterize_interval(const APSpec& spec, const Rational& alpha,
                           const ExtRational& beta);

// Image of an AdmissibleRegion under p = m/alpha, q = p - m/beta:
// p in [p_lo, p_hi), q in [p + q_offset_lo, p + q_offset_hi).
struct TripleRegion {
  i64 m;
  Rational p_lo;         // inclusive
  Rational p_hi;         // exclusive
  Rational q_offset_lo;  // inclusive, relative to p
  Rational q_offset_hi;  // exclusive, relative to p (0 when beta_hi = inf)
  RegionFamily family;

  bool contains(i64 p, i64 q) const;
};

// Triple regions for modulus m, restricted to families that contain at
// least one integer point (p, q) with 1 <= q < p < m.
std::vector<TripleRegion> theorem_II_regions(const APSpec& spec, i64 m);

// True iff S(p,m,q) = S(AP(a,d;k)); equivalent to
// characterize_interval(spec, m/p, m/(p-q)). Requires 0 < q < p < m.
bool characterize_triple(const APSpec& spec, i64 p, i64 m, i64 q);

}  // namespace psm
