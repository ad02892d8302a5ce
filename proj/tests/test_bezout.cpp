#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "psm/bezout.hpp"
#include "psm/semigroup.hpp"

using namespace psm;

namespace {

std::vector<Rational> seq(std::initializer_list<std::pair<i64, i64>> ts) {
  std::vector<Rational> out;
  for (auto [p, q] : ts) out.emplace_back(p, q);
  return out;
}

// Exhaustive DFS over proper Bezout sequences from lo to hi whose terms
// have numerator and denominator at most `height`. Counts solutions.
void count_proper(const std::vector<Rational>& prefix, const Rational& hi,
                  i64 height, i64& found, const BezoutSequence& expect,
                  bool& matches) {
  const Rational& last = prefix.back();
  if (last == hi) {
    if (prefix.size() >= 2) {
      ++found;
      if (prefix == expect.terms) matches = true;
    }
    return;
  }
  for (i64 u = 1; u <= height; ++u) {
    // next term u/v with determinant u*q - p*v = 1
    i64 p = last.num(), q = last.den();
    if ((u * q - 1) % p != 0) continue;
    i64 v = (u * q - 1) / p;
    if (v < 1 || v > height) continue;
    Rational next(u, v);
    if (!(last < next) || hi < next) continue;
    bool proper = true;
    for (size_t i = 0; i + 1 < prefix.size(); ++i) {
      if (next.num() * prefix[i].den() - prefix[i].num() * next.den() <= 1) {
        proper = false;
        break;
      }
    }
    if (!proper) continue;
    std::vector<Rational> ext = prefix;
    ext.push_back(next);
    count_proper(ext, hi, height, found, expect, matches);
  }
}

}  // namespace

TEST_CASE("validate_bezout") {
  CHECK(validate_bezout(seq({{5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}})));
  CHECK(validate_bezout(seq({{9, 8}, {8, 7}, {7, 6}, {6, 5}, {5, 4}})));
  CHECK(validate_bezout(seq({{5, 3}, {7, 4}})));
  CHECK(!validate_bezout(seq({{5, 3}})));
  CHECK(!validate_bezout(seq({{7, 4}, {5, 3}})));
  CHECK(!validate_bezout(seq({{5, 3}, {9, 5}})));  // det 2
}

TEST_CASE("validate_proper") {
  CHECK(validate_proper({seq({{9, 2}, {5, 1}, {6, 1}, {7, 1}, {8, 1}})}));
  CHECK(validate_proper({seq({{8, 7}, {7, 6}, {6, 5}, {5, 4}, {9, 7}})}));
  CHECK(!validate_proper({seq({{1, 1}, {3, 2}, {2, 1}})}));  // cross det 1
}

TEST_CASE("bezout_between reproduces the golden sequences") {
  CHECK(bezout_between(Rational(9, 8), Rational(5, 4)).terms ==
        seq({{9, 8}, {8, 7}, {7, 6}, {6, 5}, {5, 4}}));
  CHECK(bezout_between(Rational(9, 2), Rational(8)).terms ==
        seq({{9, 2}, {5, 1}, {6, 1}, {7, 1}, {8, 1}}));
  CHECK(bezout_between(Rational(5), Rational(9)).terms ==
        seq({{5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}}));
  CHECK(bezout_between(Rational(8, 7), Rational(9, 7)).terms ==
        seq({{8, 7}, {7, 6}, {6, 5}, {5, 4}, {9, 7}}));
  CHECK(bezout_between(Rational(5, 3), Rational(7, 4)).terms ==
        seq({{5, 3}, {7, 4}}));
}

TEST_CASE("bezout_between rejects bad endpoints") {
  CHECK_THROWS_AS(bezout_between(Rational(7, 4), Rational(5, 3)), domain_error);
  CHECK_THROWS_AS(bezout_between(Rational(5, 3), Rational(5, 3)), domain_error);
  CHECK_THROWS_AS(bezout_between(Rational(1, 2), Rational(5, 3)), domain_error);
}

TEST_CASE("every output validates and has a numerator valley") {
  for (i64 pn = 2; pn <= 8; ++pn)
    for (i64 pd = 1; pd < pn; ++pd)
      for (i64 rn = 2; rn <= 8; ++rn)
        for (i64 rd = 1; rd < rn; ++rd) {
          Rational lo(pn, pd), hi(rn, rd);
          if (gcd_nonneg(pn, pd) != 1 || gcd_nonneg(rn, rd) != 1) continue;
          if (!(Rational(1) < lo) || !(lo < hi)) continue;
          BezoutSequence s = bezout_between(lo, hi);
          CHECK(validate_bezout(s.terms));
          CHECK(validate_proper(s));
          CHECK_NOTHROW(numerator_valley(s));
          CHECK(s.terms.front() == lo);
          CHECK(s.terms.back() == hi);
        }
}

TEST_CASE("numerator_valley") {
  CHECK(numerator_valley({seq({{9, 2}, {5, 1}, {6, 1}, {7, 1}, {8, 1}})}) == 2);
  CHECK(numerator_valley({seq({{5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}})}) == 1);
  CHECK(numerator_valley({seq({{9, 8}, {8, 7}, {7, 6}, {6, 5}, {5, 4}})}) == 5);
  CHECK_THROWS_AS(numerator_valley({seq({{5, 1}, {6, 1}, {5, 1}})}), invariant_error);
}

TEST_CASE("the proper sequence between bounded endpoints is unique") {
  for (i64 pn = 2; pn <= 8; ++pn)
    for (i64 pd = 1; pd < pn; ++pd)
      for (i64 rn = 2; rn <= 8; ++rn)
        for (i64 rd = 1; rd < rn; ++rd) {
          Rational lo(pn, pd), hi(rn, rd);
          if (gcd_nonneg(pn, pd) != 1 || gcd_nonneg(rn, rd) != 1) continue;
          if (!(Rational(1) < lo) || !(lo < hi)) continue;
          BezoutSequence expect = bezout_between(lo, hi);
          i64 found = 0;
          bool matches = false;
          count_proper({lo}, hi, 64, found, expect, matches);
          CHECK(found == 1);
          CHECK(matches);
        }
}

TEST_CASE("is_prop_modular") {
  PMCheck two = is_prop_modular(sgp_from_generators({5, 7}));
  CHECK(two.proportionally_modular);
  REQUIRE(two.witness.has_value());
  CHECK(*two.witness == std::vector<i64>{5, 7});

  CHECK(!is_prop_modular(sgp_from_generators({4, 6, 9})).proportionally_modular);

  PMCheck run = is_prop_modular(sgp_from_generators({5, 6, 7, 8, 9}));
  CHECK(run.proportionally_modular);
  REQUIRE(run.witness.has_value());
  CHECK(*run.witness == std::vector<i64>{5, 6, 7, 8, 9});
}

TEST_CASE("is_prop_modular capacity cap") {
  std::vector<i64> gens;
  for (i64 x = 11; x <= 21; ++x) gens.push_back(x);  // embedding dimension 11
  CHECK_THROWS_AS(is_prop_modular(sgp_from_generators(gens)), capacity_error);
  CHECK(is_prop_modular(sgp_from_generators(gens), 11).proportionally_modular);
}
