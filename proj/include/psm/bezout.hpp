#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psm/arith.hpp"
#include "psm/semigroup.hpp"

namespace psm {

// Increasing sequence of reduced positive fractions p_i/q_i with
// consecutive determinants p_{i+1} q_i - p_i q_{i+1} = 1.
struct BezoutSequence {
  std::vector<Rational> terms;
};

// True iff terms has >= 2 entries, strictly increases, and every
// consecutive determinant equals 1.
bool validate_bezout(const std::vector<Rational>& terms);

// True iff every non-adjacent cross determinant p_{k+l} q_k - p_k q_{k+l}
// (l >= 2) strictly exceeds 1.
bool validate_proper(const BezoutSequence& seq);

// The unique proper Bezout sequence from lo to hi (both reduced, > 1,
// lo < hi). Built by mediant descent and checked against the defining
// properties before being returned.
BezoutSequence bezout_between(const Rational& lo, const Rational& hi);

// The 1-based index r with p_1 > ... > p_r < p_{r+1} < ... < p_n.
// Throws invariant_error if the numerators are not valley-shaped.
std::size_t numerator_valley(const BezoutSequence& seq);

struct PMCheck {
  bool proportionally_modular = false;
  std::optional<std::vector<i64>> witness;  // generator permutation
};

// Permutation test of the minimal generators: adjacent pairs coprime and
// each interior a_k dividing a_{k-1} + a_{k+1}. Embedding dimensions above
// `cap` raise capacity_error.
PMCheck is_prop_modular(const NumericalSemigroup& s, std::size_t cap = 10);

}  // namespace psm
