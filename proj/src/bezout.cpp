#include "psm/bezout.hpp"

#include <algorithm>
#include <functional>

namespace psm {

namespace {

// p_j q_i - p_i q_j for terms i < j.
i64 cross_det(const Rational& x, const Rational& y) {
  return checked_sub(checked_mul(y.num(), x.den()), checked_mul(x.num(), y.den()));
}

constexpr std::size_t kTermBudget = 100000;

}  // namespace

bool validate_bezout(const std::vector<Rational>& terms) {
  if (terms.size() < 2) return false;
  for (const Rational& t : terms)
    if (t.num() <= 0) return false;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!(terms[i] < terms[i + 1])) return false;
    if (cross_det(terms[i], terms[i + 1]) != 1) return false;
  }
  return true;
}

bool validate_proper(const BezoutSequence& seq) {
  if (!validate_bezout(seq.terms)) return false;
  for (std::size_t i = 0; i < seq.terms.size(); ++i)
    for (std::size_t j = i + 2; j < seq.terms.size(); ++j)
      if (cross_det(seq.terms[i], seq.terms[j]) <= 1) return false;
  return true;
}

BezoutSequence bezout_between(const Rational& lo, const Rational& hi) {
  if (!(Rational(1) < lo)) throw domain_error("bezout_between: requires lo > 1");
  if (!(lo < hi)) throw domain_error("bezout_between: requires lo < hi");

  BezoutSequence seq;
  seq.terms = {lo, hi};

  // Mediant descent: while some adjacent determinant exceeds 1, insert
  // between x = p/q and y = r/s the fraction u/v of smallest denominator
  // with u*q - p*v = 1 and r*v - u*s >= 1.
  std::size_t i = 0;
  while (i + 1 < seq.terms.size()) {
    const Rational x = seq.terms[i];
    const Rational y = seq.terms[i + 1];
    i64 det = cross_det(x, y);
    if (det == 1) {
      ++i;
      continue;
    }
    i64 p = x.num(), q = x.den();
    i64 r = y.num(), s = y.den();
    // Base solution of u*q - p*v = 1 with smallest positive denominator;
    // the general solution is (u0 + p*t, v0 + q*t), t >= 0.
    i64 u0, v0;
    if (q == 1) {
      u0 = p + 1;
      v0 = 1;
    } else {
      v0 = q - mod_inverse(p, q);  // p*v0 = -1 (mod q), 1 <= v0 < q
      u0 = (1 + checked_mul(p, v0)) / q;
    }
    // Smallest t with r*v - u*s >= 1.
    i64 base = checked_sub(checked_mul(r, v0), checked_mul(u0, s));
    i64 t = base < 1 ? (1 - base + det - 1) / det : 0;
    i64 u = checked_add(u0, checked_mul(p, t));
    i64 v = checked_add(v0, checked_mul(q, t));
    seq.terms.insert(seq.terms.begin() + static_cast<std::ptrdiff_t>(i) + 1, Rational(u, v));
    if (seq.terms.size() > kTermBudget)
      throw domain_error("bezout_between: iteration budget exceeded");
  }

  if (!validate_bezout(seq.terms) || !validate_proper(seq) ||
      seq.terms.front() != lo || seq.terms.back() != hi)
    throw invariant_error("bezout_between: constructed sequence fails postconditions");
  numerator_valley(seq);  // must succeed on every proper sequence
  return seq;
}

std::size_t numerator_valley(const BezoutSequence& seq) {
  const auto& t = seq.terms;
  if (t.size() < 2) throw domain_error("numerator_valley: need >= 2 terms");
  std::size_t r = 0;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i].num() < t[r].num()) r = i;
  for (std::size_t i = 0; i < r; ++i)
    if (!(t[i].num() > t[i + 1].num()))
      throw invariant_error("numerator_valley: numerators not strictly decreasing before valley");
  for (std::size_t i = r; i + 1 < t.size(); ++i)
    if (!(t[i].num() < t[i + 1].num()))
      throw invariant_error("numerator_valley: numerators not strictly increasing after valley");
  return r + 1;  // 1-based
}

PMCheck is_prop_modular(const NumericalSemigroup& s, std::size_t cap) {
  const std::vector<i64>& gens = s.min_generators;
  std::size_t e = gens.size();
  if (e > cap) throw capacity_error("is_prop_modular: embedding dimension exceeds cap");

  PMCheck result;
  if (e <= 1) {
    result.proportionally_modular = true;
    result.witness = gens;
    return result;
  }

  std::vector<i64> perm;
  std::vector<char> used(e, 0);
  std::function<bool()> dfs = [&]() -> bool {
    if (perm.size() == e) return true;
    for (std::size_t i = 0; i < e; ++i) {
      if (used[i]) continue;
      i64 g = gens[i];
      if (!perm.empty() && gcd_nonneg(perm.back(), g) != 1) continue;
      if (perm.size() >= 2) {
        // interior element perm[n-1] now has both neighbours
        i64 mid = perm[perm.size() - 1];
        i64 prev = perm[perm.size() - 2];
        if ((prev + g) % mid != 0) continue;
      }
      used[i] = 1;
      perm.push_back(g);
      if (dfs()) return true;
      perm.pop_back();
      used[i] = 0;
    }
    return false;
  };

  if (dfs()) {
    result.proportionally_modular = true;
    result.witness = perm;
  }
  return result;
}

}  // namespace psm
