#pragma once

#include "psm/arith.hpp"
#include "psm/intervals.hpp"
#include "psm/semigroup.hpp"

namespace psm {

// The inequality a*x mod b <= c*x. Canonical form keeps a in {1,...,b}
// (a is reduced mod b at construction; a = 0 maps to a = b, the trivial case).
struct PMTriple {
  i64 a;
  i64 b;
  i64 c;

  PMTriple(i64 a_, i64 b_, i64 c_);
};

bool pm_contains(const PMTriple& t, i64 x);

// Descriptor of S(a,b,c). Every x >= ceil(b/c) is a member, so enumeration
// up to that bound is exact.
NumericalSemigroup pm_semigroup(const PMTriple& t);

// The dual triple (b+c-a, b, c); requires c < a < b.
PMTriple pm_dual(const PMTriple& t);

// [b/a, b/(a-c)]; requires c < a (otherwise the semigroup is all of Z>=0
// and no bounded interval is canonical).
ClosedInterval pm_to_interval(const PMTriple& t);

// S([p/q, r/s]) = S(qr, pr, qr-ps); requires 0 < lo < hi.
PMTriple interval_to_pm(const Rational& lo, const Rational& hi);

}  // namespace psm
