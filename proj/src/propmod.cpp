#include "psm/propmod.hpp"

namespace psm {

PMTriple::PMTriple(i64 a_, i64 b_, i64 c_) : a(a_), b(b_), c(c_) {
  if (a < 0 || b < 1 || c < 1)
    throw domain_error("PMTriple: requires a >= 0, b >= 1, c >= 1");
  a %= b;
  if (a == 0) a = b;
}

bool pm_contains(const PMTriple& t, i64 x) {
  if (x < 0) return false;
  i64 rem = checked_mul(t.a, x) % t.b;
  return rem <= checked_mul(t.c, x);
}

NumericalSemigroup pm_semigroup(const PMTriple& t) {
  // For x >= ceil(b/c): c*x >= b > a*x mod b.
  i64 bound = (t.b + t.c - 1) / t.c;
  std::vector<char> member(static_cast<size_t>(bound) + 1, 0);
  member[0] = 1;
  for (i64 x = 1; x <= bound; ++x)
    member[static_cast<size_t>(x)] = pm_contains(t, x) ? 1 : 0;
  return sgp_from_membership(member);
}

PMTriple pm_dual(const PMTriple& t) {
  if (!(t.c < t.a && t.a < t.b))
    throw domain_error("pm_dual: requires c < a < b");
  return PMTriple(t.b + t.c - t.a, t.b, t.c);
}

ClosedInterval pm_to_interval(const PMTriple& t) {
  if (t.c >= t.a)
    throw domain_error("pm_to_interval: requires c < a (semigroup is all of Z>=0)");
  return ClosedInterval(Rational(t.b, t.a), ExtRational(Rational(t.b, t.a - t.c)));
}

PMTriple interval_to_pm(const Rational& lo, const Rational& hi) {
  if (lo.num() <= 0) throw domain_error("interval_to_pm: requires lo > 0");
  if (!(lo < hi)) throw domain_error("interval_to_pm: requires lo < hi");
  i64 p = lo.num(), q = lo.den();
  i64 r = hi.num(), s = hi.den();
  i64 qr = checked_mul(q, r);
  i64 pr = checked_mul(p, r);
  i64 ps = checked_mul(p, s);
  return PMTriple(qr, pr, checked_sub(qr, ps));
}

}  // namespace psm
