#include "psm/intervals.hpp"

namespace psm {

ClosedInterval::ClosedInterval(const Rational& lo_, const ExtRational& hi_)
    : lo(lo_), hi(hi_) {
  if (lo.num() <= 0) throw domain_error("ClosedInterval: lower endpoint must be positive");
  if (hi < ExtRational(lo)) throw domain_error("ClosedInterval: hi < lo");
}

bool interval_contains_member(const ClosedInterval& I, i64 x) {
  if (x <= 0) return false;
  i64 n_min = I.hi.is_infinite() ? 1 : ceil_div(x, I.hi.value());
  if (n_min < 1) n_min = 1;
  i64 n_max = floor_div(x, I.lo);
  return n_min <= n_max;
}

NumericalSemigroup interval_semigroup(const ClosedInterval& I) {
  if (!I.hi.is_infinite() && I.lo == I.hi.value()) {
    // x = n * p/q for some n iff p | x; numerical only for p = 1.
    if (I.lo.num() != 1)
      throw domain_error("interval_semigroup: degenerate interval generates the multiples of " +
                         std::to_string(I.lo.num()) + " (not numerical)");
    return sgp_from_generators({1});
  }

  // Every x >= lo*hi/(hi-lo) is a member: the window [x/hi, x/lo] then has
  // length >= 1 and contains an integer. For hi = inf, every x >= lo works.
  i64 bound;
  if (I.hi.is_infinite()) {
    bound = ceil_div(I.lo.num(), Rational(I.lo.den()));  // ceil(lo)
  } else {
    Rational span = I.hi.value() - I.lo;
    Rational b = I.lo * I.hi.value() / span;
    bound = ceil_div(b.num(), Rational(b.den()));  // ceil(b)
  }
  if (bound < 1) bound = 1;

  std::vector<char> member(static_cast<size_t>(bound) + 1, 0);
  member[0] = 1;
  for (i64 x = 1; x <= bound; ++x)
    member[static_cast<size_t>(x)] = interval_contains_member(I, x) ? 1 : 0;
  return sgp_from_membership(member);
}

ClosedInterval interval_dual(const ClosedInterval& I) {
  if (I.lo <= Rational(1)) throw domain_error("interval_dual: requires lo > 1");
  if (I.hi.is_infinite()) throw domain_error("interval_dual: requires finite hi");
  const Rational& hi = I.hi.value();
  Rational one(1);
  return ClosedInterval(hi / (hi - one), ExtRational(I.lo / (I.lo - one)));
}

}  // namespace psm
