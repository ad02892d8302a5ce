#include "psm/semigroup.hpp"

#include <algorithm>

namespace psm {

namespace {

constexpr i64 kSieveCap = 1LL << 26;

i64 gcd_of(const std::vector<i64>& v) {
  i64 g = 0;
  for (i64 x : v) g = g == 0 ? x : gcd_nonneg(g, x);
  return g;
}

// Membership bitmap of <generators> on [0, bound).
std::vector<char> sieve(const std::vector<i64>& gens, i64 bound) {
  std::vector<char> member(static_cast<size_t>(bound), 0);
  member[0] = 1;
  for (i64 x = 1; x < bound; ++x) {
    for (i64 g : gens) {
      if (g <= x && member[static_cast<size_t>(x - g)]) {
        member[static_cast<size_t>(x)] = 1;
        break;
      }
    }
  }
  return member;
}

// Index of the first run of `run` consecutive members, or -1.
i64 find_conductor(const std::vector<char>& member, i64 run) {
  i64 streak = 0;
  for (i64 x = 0; x < static_cast<i64>(member.size()); ++x) {
    streak = member[static_cast<size_t>(x)] ? streak + 1 : 0;
    if (streak == run) return x - run + 1;
  }
  return -1;
}

}  // namespace

bool NumericalSemigroup::contains(i64 x) const {
  if (x < 0) return false;
  if (x == 0 || x > frobenius) return true;
  return !std::binary_search(gaps.begin(), gaps.end(), x);
}

NumericalSemigroup sgp_from_membership(const std::vector<char>& member) {
  if (member.empty() || !member[0])
    throw domain_error("sgp_from_membership: 0 must be a member");
  i64 bound = static_cast<i64>(member.size());

  NumericalSemigroup s;
  for (i64 x = 1; x < bound; ++x)
    if (!member[static_cast<size_t>(x)]) s.gaps.push_back(x);
  s.genus = static_cast<i64>(s.gaps.size());
  s.frobenius = s.gaps.empty() ? -1 : s.gaps.back();

  s.multiplicity = bound;
  for (i64 x = 1; x < bound; ++x)
    if (member[static_cast<size_t>(x)]) {
      s.multiplicity = x;
      break;
    }

  // A minimal generator is a nonzero member that is not a sum of two
  // nonzero members; all of them lie below conductor + multiplicity.
  auto is_member = [&](i64 x) {
    return x >= bound ? true : (x >= 0 && member[static_cast<size_t>(x)]);
  };
  i64 conductor = s.frobenius + 1;
  i64 m = s.multiplicity;
  for (i64 x = 1; x <= conductor + m; ++x) {
    if (!is_member(x)) continue;
    bool decomposable = false;
    for (i64 y = m; y + y <= x; ++y) {
      if (is_member(y) && is_member(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.min_generators.push_back(x);
  }
  return s;
}

NumericalSemigroup sgp_from_generators(const std::vector<i64>& generators) {
  if (generators.empty()) throw domain_error("sgp_from_generators: empty set");
  for (i64 g : generators)
    if (g <= 0) throw domain_error("sgp_from_generators: generators must be positive");
  if (gcd_of(generators) != 1)
    throw domain_error("sgp_from_generators: gcd of generators exceeds 1 (not numerical)");

  i64 mult = *std::min_element(generators.begin(), generators.end());
  i64 maxg = *std::max_element(generators.begin(), generators.end());

  // Grow the sieve until a run of multiplicity-many consecutive members
  // certifies the conductor; everything beyond the run is representable.
  for (i64 bound = std::max<i64>(2 * maxg, mult + 2);; bound *= 2) {
    if (bound > kSieveCap)
      throw invariant_error("sgp_from_generators: sieve bound cap exceeded");
    std::vector<char> member = sieve(generators, bound);
    i64 c = find_conductor(member, mult);
    if (c < 0) continue;
    member.resize(static_cast<size_t>(c + 1));
    return sgp_from_membership(member);
  }
}

std::vector<i64> minimal_generators(const std::vector<i64>& generators) {
  return sgp_from_generators(generators).min_generators;
}

APSpec::APSpec(i64 a_, i64 d_, i64 k_) : a(a_), d(d_), k(k_) {
  if (a < 2) throw domain_error("APSpec: a must be >= 2");
  if (d < 1) throw domain_error("APSpec: d must be >= 1");
  if (k < 2) throw domain_error("APSpec: k must be >= 2");
  if (gcd_nonneg(a, d) != 1) throw domain_error("APSpec: gcd(a,d) must be 1");
  if (k > a) k = a;  // S(AP(a,d;k)) = S(AP(a,d;a)) for k > a
  checked_add(a, checked_mul(k - 1, d));  // b must be representable
}

std::vector<i64> APSpec::generators() const {
  std::vector<i64> gens;
  gens.reserve(static_cast<size_t>(k));
  for (i64 i = 0; i < k; ++i) gens.push_back(a + i * d);
  return gens;
}

std::vector<i64> ap_gaps(const APSpec& spec) {
  std::vector<i64> gaps;
  for (i64 y = 1; y <= spec.a - 1; ++y) {
    i64 xmax = (y - 1) / (spec.k - 1);
    // x ranges down below zero as long as a*x + d*y stays positive:
    // smallest x is ceil((1 - d*y)/a).
    i64 dy = checked_mul(spec.d, y);
    i64 xmin = -((dy - 1) / spec.a);
    for (i64 x = xmin; x <= xmax; ++x)
      gaps.push_back(checked_add(checked_mul(spec.a, x), dy));
  }
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return gaps;
}

i64 ap_frobenius(const APSpec& spec) {
  i64 lambda = (spec.a - 2) / (spec.k - 1);
  return checked_add(checked_mul(spec.a, lambda), checked_mul(spec.d, spec.a - 1));
}

NumericalSemigroup ap_semigroup(const APSpec& spec) {
  return sgp_from_generators(spec.generators());
}

}  // namespace psm
