#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cmd(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

RunResult run(const std::string& args) {
  return run_cmd(std::string(PSM_CLI_PATH) + " " + args + " 2>/dev/null");
}

RunResult run_env(const std::string& env, const std::string& args) {
  return run_cmd(env + " " + std::string(PSM_CLI_PATH) + " " + args + " 2>/dev/null");
}

}  // namespace

TEST_CASE("gaps golden output") {
  RunResult r = run("gaps --a 5 --d 2 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"gaps\":[1,2,3,4,6,8,9,11,13,16,18,23],\"frobenius\":23,\"genus\":12}\n");
}

TEST_CASE("from-interval golden output") {
  RunResult r = run("from-interval --lo 5/3 --hi 7/4");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"generators\":[5,7],\"gaps\":[1,2,3,4,6,8,9,11,13,16,18,23],"
        "\"frobenius\":23,\"genus\":12,\"multiplicity\":5}\n");
}

TEST_CASE("characterize golden region lists") {
  RunResult sg1 = run("characterize --a 5 --d 1 --k 5");
  CHECK(sg1.exit_code == 0);
  CHECK(sg1.out ==
        "[{\"family\":\"increasing\",\"alpha\":{\"lo\":\"4/1\",\"lo_open\":true,"
        "\"hi\":\"5/1\",\"hi_open\":false},\"beta\":{\"lo\":\"9/1\",\"lo_open\":false,"
        "\"hi\":\"inf\",\"hi_open\":true}},"
        "{\"family\":\"decreasing\",\"alpha\":{\"lo\":\"1/1\",\"lo_open\":true,"
        "\"hi\":\"9/8\",\"hi_open\":false},\"beta\":{\"lo\":\"5/4\",\"lo_open\":false,"
        "\"hi\":\"4/3\",\"hi_open\":true}},"
        "{\"family\":\"wrap_low\",\"alpha\":{\"lo\":\"4/1\",\"lo_open\":true,"
        "\"hi\":\"9/2\",\"hi_open\":false},\"beta\":{\"lo\":\"8/1\",\"lo_open\":false,"
        "\"hi\":\"inf\",\"hi_open\":true}},"
        "{\"family\":\"wrap_high\",\"alpha\":{\"lo\":\"1/1\",\"lo_open\":true,"
        "\"hi\":\"8/7\",\"hi_open\":false},\"beta\":{\"lo\":\"9/7\",\"lo_open\":false,"
        "\"hi\":\"4/3\",\"hi_open\":true}}]\n");

  RunResult sg2 = run("characterize --a 5 --d 2 --k 2");
  CHECK(sg2.exit_code == 0);
  CHECK(sg2.out ==
        "[{\"family\":\"increasing\",\"alpha\":{\"lo\":\"23/14\",\"lo_open\":true,"
        "\"hi\":\"5/3\",\"hi_open\":false},\"beta\":{\"lo\":\"7/4\",\"lo_open\":false,"
        "\"hi\":\"23/13\",\"hi_open\":true}},"
        "{\"family\":\"decreasing\",\"alpha\":{\"lo\":\"23/10\",\"lo_open\":true,"
        "\"hi\":\"7/3\",\"hi_open\":false},\"beta\":{\"lo\":\"5/2\",\"lo_open\":false,"
        "\"hi\":\"23/9\",\"hi_open\":true}}]\n");
}

TEST_CASE("characterize point query") {
  CHECK(run("characterize --a 5 --d 2 --k 2 --alpha 33/20 --beta 7/4").out ==
        "{\"inside\":true}\n");
  CHECK(run("characterize --a 5 --d 2 --k 2 --alpha 8/5 --beta 7/4").out ==
        "{\"inside\":false}\n");
  CHECK(run("characterize --a 5 --d 1 --k 5 --alpha 5 --beta inf").out ==
        "{\"inside\":true}\n");
}

TEST_CASE("region corners round-trip through from-interval") {
  RunResult corner = run("from-interval --lo 5/3 --hi 7/4");
  RunResult ap = run("gaps --a 5 --d 2 --k 2");
  CHECK(corner.out.find("\"gaps\":[1,2,3,4,6,8,9,11,13,16,18,23]") != std::string::npos);
  CHECK(ap.out.find("[1,2,3,4,6,8,9,11,13,16,18,23]") != std::string::npos);
}

TEST_CASE("bezout and duals") {
  CHECK(run("bezout --lo 9/2 --hi 8").out ==
        "[\"9/2\",\"5/1\",\"6/1\",\"7/1\",\"8/1\"]\n");
  CHECK(run("interval-dual --lo 5/1 --hi 9/1").out == "{\"lo\":\"9/8\",\"hi\":\"5/4\"}\n");
  CHECK(run("pm-dual --a 42 --b 70 --c 2").out == "{\"a\":30,\"b\":70,\"c\":2}\n");
  CHECK(run("from-pm --a 21 --b 35 --c 1").out.find("\"generators\":[5,7]") !=
        std::string::npos);
  CHECK(run("is-pm --gens 5,7").out ==
        "{\"proportionally_modular\":true,\"witness\":[5,7]}\n");
  CHECK(run("is-pm --gens 4,6,9").out ==
        "{\"proportionally_modular\":false,\"witness\":null}\n");
}

TEST_CASE("exit codes") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("gaps --a 5").exit_code == 2);                       // missing flags
  CHECK(run("from-interval --lo 5/x --hi 7/4").exit_code == 2);  // parse error
  CHECK(run("from-interval --lo 5/2 --hi 5/2").exit_code == 1);  // not numerical
  CHECK(run("gaps --a 4 --d 2 --k 2").exit_code == 1);           // gcd violation
  CHECK(run("pm-dual --a 2 --b 12 --c 4").exit_code == 1);
}

TEST_CASE("output is deterministic") {
  for (const char* cmd : {"characterize --a 5 --d 1 --k 5", "gaps --a 7 --d 3 --k 4",
                          "verify --a-max 5 --d-max 2 --denom-bound 4 --triple-bound 12"}) {
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify emits one clean json record per grid point") {
  RunResult r = run("verify --a-max 5 --d-max 2 --denom-bound 4 --triple-bound 12");
  CHECK(r.exit_code == 0);
  size_t lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  // (a,d) coprime pairs with a<=5, d<=2, each k in [2,a], plus the sweep record
  CHECK(lines == 17);
  CHECK(r.out.find("\"counterexamples\":[]") != std::string::npos);
  CHECK(r.out.find("counterexamples\":[\"") == std::string::npos);
}

TEST_CASE("grid precedence: env overrides defaults, flags override env") {
  std::string env = "PSM_GRID=a_max=4,d_max=1,denom_bound=4,triple_bound=10";
  RunResult all_flags =
      run("verify --a-max 4 --d-max 1 --denom-bound 4 --triple-bound 10");
  RunResult via_env = run_env(env, "verify");
  CHECK(via_env.out == all_flags.out);

  RunResult smaller =
      run("verify --a-max 3 --d-max 1 --denom-bound 4 --triple-bound 10");
  RunResult flag_wins = run_env(env, "verify --a-max 3");
  CHECK(flag_wins.out == smaller.out);
}
