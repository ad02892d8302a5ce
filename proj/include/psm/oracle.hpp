#pragma once

#include <string>
#include <vector>

#include "psm/apchar.hpp"
#include "psm/arith.hpp"
#include "psm/semigroup.hpp"

namespace psm {

// Bounds for the verification sweeps. The defaults keep a full `verify`
// run interactive; the acceptance suite passes its own (larger) bounds.
struct GridSpec {
  i64 a_max = 8;
  i64 d_max = 3;
  i64 denom_bound = 6;
  i64 triple_bound = 30;
};

// Naive dynamic-programming closure of <generators>: bitmap of membership
// on [0, bound]. Deliberately independent of the sieve in `semigroup`.
std::vector<char> naive_semigroup(const std::vector<i64>& generators, i64 bound);

// Exhaustive evaluation of both extremal gap ratios against their closed
// forms, including the attained argument.
struct ExtremaReport {
  bool agree = false;
  Rational max_value;
  i64 max_arg = 0;
  ExtRational min_value;  // +inf when the constrained set is empty
  i64 min_arg = 0;        // 0 when the constrained set is empty
  std::string detail;     // empty on agreement
};
ExtremaReport scan_extrema(const APSpec& spec);

// One (alpha, beta) pair where characterization and direct semigroup
// comparison disagree.
struct RegionCounterexample {
  Rational alpha;
  ExtRational beta;
  bool characterized;     // what characterize_interval said
  bool semigroup_equal;   // what direct comparison said
};

struct RegionScanReport {
  i64 checks_run = 0;
  std::vector<RegionCounterexample> counterexamples;
};

// Exhaustive both-directions check of the interval characterization: every
// reduced pair 1 <= alpha < beta with denominators <= D and numerators up
// to just past the largest finite region endpoint, plus beta = infinity.
RegionScanReport scan_regions(const APSpec& spec, i64 D);

// Exhaustive check of the duality S(a,b,c) = S(b+c-a,b,c) and the interval
// conversion S(a,b,c) = S([b/a, b/(a-c)]) over all c < a < b <= bound.
struct ConversionSweepReport {
  i64 checks_run = 0;
  std::vector<std::string> counterexamples;  // "a,b,c: what failed"
};
ConversionSweepReport scan_pm_conversions(i64 bound);

}  // namespace psm
