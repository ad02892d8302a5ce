#pragma once

#include <vector>

#include "psm/arith.hpp"

namespace psm {

// Canonical descriptor of a numerical semigroup. Everything above the
// Frobenius number is a member; the gap set is the full complement.
struct NumericalSemigroup {
  std::vector<i64> min_generators;  // sorted
  std::vector<i64> gaps;            // sorted
  i64 frobenius = -1;               // -1 means no gaps (S = Z>=0)
  i64 genus = 0;
  i64 multiplicity = 1;

  bool contains(i64 x) const;

  bool operator==(const NumericalSemigroup& o) const {
    return gaps == o.gaps;  // the gap set determines the semigroup
  }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }
};

// Builds the descriptor from a generating set; requires gcd 1.
NumericalSemigroup sgp_from_generators(const std::vector<i64>& generators);

// Builds the descriptor from a membership bitmap: member[x] for 0 <= x < bound,
// with every x >= bound a member. member[0] must be true.
NumericalSemigroup sgp_from_membership(const std::vector<char>& member);

// Minimal generating set of <A>.
std::vector<i64> minimal_generators(const std::vector<i64>& generators);

// Arithmetic progression a, a+d, ..., a+(k-1)d with gcd(a,d) = 1.
// k > a is normalized down to a (the generated semigroups coincide).
struct APSpec {
  i64 a;
  i64 d;
  i64 k;

  APSpec(i64 a_, i64 d_, i64 k_);

  std::vector<i64> generators() const;  // the progression itself
  i64 b() const { return a + (k - 1) * d; }
};

// Gap set of S(AP(a,d;k)) in closed form:
// { a*x + d*y : 1 <= y <= a-1, 0 <= x <= floor((y-1)/(k-1)) }.
std::vector<i64> ap_gaps(const APSpec& spec);

// Frobenius number a*floor((a-2)/(k-1)) + d*(a-1).
i64 ap_frobenius(const APSpec& spec);

// Full descriptor of S(AP(a,d;k)), built from the closed-form gap set.
NumericalSemigroup ap_semigroup(const APSpec& spec);

}  // namespace psm
