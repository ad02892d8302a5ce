#pragma once

#include "psm/arith.hpp"
#include "psm/semigroup.hpp"

namespace psm {

// Closed interval [lo, hi] with rational lo > 0; hi may be +infinity.
struct ClosedInterval {
  Rational lo;
  ExtRational hi;

  ClosedInterval(const Rational& lo_, const ExtRational& hi_);
};

// True iff x/n lands in I for some positive integer n, i.e.
// ceil(x/hi) <= floor(x/lo), with ceil(x/inf) taken as 1.
bool interval_contains_member(const ClosedInterval& I, i64 x);

// Descriptor of S(I) = {0} union {x >= 1 : interval_contains_member(I, x)}.
// Degenerate lo = hi = p/q generates the multiples of p: Z>=0 for p = 1,
// otherwise a not-numerical domain error.
NumericalSemigroup interval_semigroup(const ClosedInterval& I);

// [hi/(hi-1), lo/(lo-1)]; requires lo > 1 and hi finite. An involution that
// preserves the generated semigroup.
ClosedInterval interval_dual(const ClosedInterval& I);

}  // namespace psm
