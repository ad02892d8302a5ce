#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "psm.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  psm_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("semigroup handle lifecycle and accessors") {
  psm_semigroup* s = nullptr;
  long long gens[] = {5, 7};
  REQUIRE(psm_semigroup_from_generators(gens, 2, &s) == PSM_OK);
  CHECK(psm_semigroup_frobenius(s) == 23);
  CHECK(psm_semigroup_genus(s) == 12);
  CHECK(psm_semigroup_multiplicity(s) == 5);
  CHECK(psm_semigroup_contains(s, 12) == 1);
  CHECK(psm_semigroup_contains(s, 23) == 0);

  REQUIRE(psm_semigroup_gap_count(s) == 12);
  std::vector<long long> gaps(12);
  psm_semigroup_gaps(s, gaps.data());
  CHECK(gaps == std::vector<long long>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23});

  REQUIRE(psm_semigroup_generator_count(s) == 2);
  long long mg[2];
  psm_semigroup_generators(s, mg);
  CHECK(mg[0] == 5);
  CHECK(mg[1] == 7);

  char* json = nullptr;
  REQUIRE(psm_semigroup_to_json(s, &json) == PSM_OK);
  CHECK(take(json) ==
        "{\"generators\":[5,7],\"gaps\":[1,2,3,4,6,8,9,11,13,16,18,23],"
        "\"frobenius\":23,\"genus\":12,\"multiplicity\":5}");
  psm_semigroup_free(s);
}

TEST_CASE("constructors from ap, pm, interval agree") {
  psm_semigroup* ap = nullptr;
  psm_semigroup* pm = nullptr;
  psm_semigroup* iv = nullptr;
  REQUIRE(psm_semigroup_from_ap(5, 2, 2, &ap) == PSM_OK);
  REQUIRE(psm_semigroup_from_pm(42, 70, 2, &pm) == PSM_OK);
  REQUIRE(psm_semigroup_from_interval("5/3", "7/4", &iv) == PSM_OK);
  for (long long x = 0; x <= 30; ++x) {
    CHECK(psm_semigroup_contains(ap, x) == psm_semigroup_contains(pm, x));
    CHECK(psm_semigroup_contains(ap, x) == psm_semigroup_contains(iv, x));
  }
  psm_semigroup_free(ap);
  psm_semigroup_free(pm);
  psm_semigroup_free(iv);
}

TEST_CASE("error codes and last_error") {
  psm_semigroup* s = nullptr;
  long long bad[] = {4, 6};
  CHECK(psm_semigroup_from_generators(bad, 2, &s) == PSM_ERR_DOMAIN);
  CHECK(std::strlen(psm_last_error()) > 0);

  CHECK(psm_semigroup_from_interval("5/x", "7/4", &s) == PSM_ERR_PARSE);
  CHECK(psm_semigroup_from_ap(4, 2, 2, &s) == PSM_ERR_DOMAIN);

  char* out = nullptr;
  long long wide[] = {11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21};
  CHECK(psm_is_pm_json(wide, 11, &out) == PSM_ERR_CAPACITY);
}

TEST_CASE("command-level json") {
  char* out = nullptr;
  REQUIRE(psm_gaps_json(5, 2, 2, &out) == PSM_OK);
  CHECK(take(out) ==
        "{\"gaps\":[1,2,3,4,6,8,9,11,13,16,18,23],\"frobenius\":23,\"genus\":12}");

  REQUIRE(psm_frobenius_json(5, 1, 5, &out) == PSM_OK);
  CHECK(take(out) == "{\"frobenius\":4}");

  REQUIRE(psm_bezout_json("9/8", "5/4", &out) == PSM_OK);
  CHECK(take(out) == "[\"9/8\",\"8/7\",\"7/6\",\"6/5\",\"5/4\"]");

  REQUIRE(psm_interval_dual_json("5/3", "7/4", &out) == PSM_OK);
  CHECK(take(out) == "{\"lo\":\"7/3\",\"hi\":\"5/2\"}");

  REQUIRE(psm_pm_dual_json(7, 12, 4, &out) == PSM_OK);
  CHECK(take(out) == "{\"a\":9,\"b\":12,\"c\":4}");

  int inside = -1;
  REQUIRE(psm_characterize_point(5, 2, 2, "33/20", "7/4", &inside) == PSM_OK);
  CHECK(inside == 1);
  REQUIRE(psm_characterize_point(5, 2, 2, "8/5", "7/4", &inside) == PSM_OK);
  CHECK(inside == 0);
  REQUIRE(psm_characterize_point(5, 1, 5, "5", "inf", &inside) == PSM_OK);
  CHECK(inside == 1);

  REQUIRE(psm_characterize_triple(5, 2, 2, 42, 70, 2, &inside) == PSM_OK);
  CHECK(inside == 1);
  REQUIRE(psm_characterize_triple(5, 2, 2, 42, 70, 5, &inside) == PSM_OK);
  CHECK(inside == 0);
}

TEST_CASE("characterize json matches the golden region lists") {
  char* out = nullptr;
  REQUIRE(psm_characterize_json(5, 2, 2, &out) == PSM_OK);
  std::string sg2 = take(out);
  CHECK(sg2.find("\"23/14\"") != std::string::npos);
  CHECK(sg2.find("\"23/13\"") != std::string::npos);
  CHECK(sg2.find("\"23/9\"") != std::string::npos);
  CHECK(sg2.find("wrap") == std::string::npos);

  REQUIRE(psm_characterize_json(5, 1, 5, &out) == PSM_OK);
  std::string sg1 = take(out);
  CHECK(sg1.find("wrap_low") != std::string::npos);
  CHECK(sg1.find("wrap_high") != std::string::npos);
  CHECK(sg1.find("\"inf\"") != std::string::npos);
}

TEST_CASE("verify json lines are well formed and clean") {
  char* out = nullptr;
  REQUIRE(psm_verify_json(6, 2, 4, 15, &out) == PSM_OK);
  std::string lines = take(out);
  CHECK(lines.find("counterexamples\":[]") != std::string::npos);
  CHECK(lines.find("counterexamples\":[\"") == std::string::npos);
}
