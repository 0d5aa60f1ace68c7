#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli = "./distchrom";

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with the given arguments, capturing stdout. stderr is folded
// into stdout so error messages are observable too.
RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("square prints the squared distance set") {
  RunResult r = run_cli("square 1,2,5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,2,3,4,5,6,7,10\n");
}

TEST_CASE("square rejects malformed sets with exit code 2") {
  RunResult r = run_cli("square 0");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "error: distances must be positive, got 0"));
  CHECK(run_cli("square 1,,2").exit_code == 2);
  CHECK(run_cli("square").exit_code == 2);
}

TEST_CASE("classify prints a human summary by default") {
  RunResult r = run_cli("classify 1,5 --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "d: 1,5\n"
        "family: one_a\n"
        "rule: one-a-dichotomy\n"
        "delta: 4\n"
        "square: 1,2,4,5,6,10\n"
        "chi2: 6\n"
        "evidence: a mod 5 not in {2,3}\n");
}

TEST_CASE("classify emits one pinned JSON object") {
  RunResult r = run_cli("classify 2,6 --format json --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"distchrom/1\",\"d\":\"2,6\",\"normalized\":\"1,3\","
        "\"divisor\":2,\"family\":\"one_a\",\"rule\":\"one-a-dichotomy\","
        "\"delta\":4,\"square\":\"1,2,3,4,6\",\"lo\":5,\"hi\":5,\"exact\":true,"
        "\"evidence\":\"a mod 5 in {2,3}\"}\n");
}

TEST_CASE("classify emits CSV with a header") {
  RunResult r = run_cli("classify 1,4 --format csv --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "d,normalized,divisor,family,rule,delta,square,lo,hi,exact,evidence\n"
        "\"1,4\",\"1,4\",1,one_a,one-a-dichotomy,4,\"1,2,3,4,5,8\",6,6,true,"
        "\"a mod 5 not in {2,3}\"\n");
}

TEST_CASE("classify --no-normalize keeps the set as typed") {
  RunResult r = run_cli("classify 2,6 --format json --no-timing --no-normalize");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"family\":\"general\""));
  CHECK(contains(r.out, "\"divisor\":1"));
}

TEST_CASE("classify includes a numeric timing field unless suppressed") {
  RunResult with = run_cli("classify 1,5 --format json");
  CHECK(contains(with.out, "\"timing_ms\":"));
  RunResult without = run_cli("classify 1,5 --format json --no-timing");
  CHECK_FALSE(contains(without.out, "timing_ms"));
}

TEST_CASE("pattern prints a verified word for each closed-form family") {
  CHECK(run_cli("pattern 1,7").out == "123123456456\n");
  CHECK(run_cli("pattern 1,4,5").out == "12345671234568\n");
  CHECK(run_cli("pattern 1,2,5").out == "12345678\n");
  CHECK(run_cli("pattern 1,2,3").out == "1234567\n");
}

TEST_CASE("pattern stretches words back to scaled input sets") {
  RunResult r = run_cli("pattern 2,8");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "112233445566\n");
}

TEST_CASE("pattern without a closed form exits 3") {
  RunResult r = run_cli("pattern 1,3,5");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.out, "no closed-form pattern"));
  CHECK(run_cli("pattern 2,8 --no-normalize").exit_code == 3);
}

TEST_CASE("verify accepts a valid word with exit 0") {
  RunResult r = run_cli("verify 12345 1,3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "pattern: 12345\n"
        "period: 5\n"
        "colors: 5\n"
        "square: 1,2,3,4,6\n"
        "valid\n");
}

TEST_CASE("verify explains period divisibility failures with exit 1") {
  RunResult r = run_cli("verify 12345 1,5");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "invalid\n"));
  CHECK(contains(r.out, "  distance 5 is a multiple of the period\n"));
  CHECK(contains(r.out, "  distance 10 is a multiple of the period\n"));
}

TEST_CASE("verify reports exact conflicting positions with exit 1") {
  RunResult r = run_cli("verify 1213 1");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "  positions 0 and 2 share a color at distance 2\n"));
}

TEST_CASE("verify rejects malformed words with exit 2") {
  CHECK(run_cli("verify 1a2 1,3").exit_code == 2);
  CHECK(run_cli("verify '' 1,3").exit_code == 2);
}

TEST_CASE("search emits certified bounds as JSON") {
  RunResult r = run_cli("search 1,4 --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"distchrom/1\",\"d\":\"1,4\",\"normalized\":\"1,4\","
        "\"divisor\":1,\"family\":\"one_a\",\"delta\":4,\"square\":\"1,2,3,4,5,8\","
        "\"lo\":6,\"hi\":6,\"exact\":true,"
        "\"lo_evidence\":{\"type\":\"window\",\"colors\":5,\"length\":18,"
        "\"nodes\":5,\"exhausted\":true},"
        "\"hi_evidence\":{\"type\":\"pattern\",\"word\":\"123456\",\"period\":6,"
        "\"colors\":6}}\n");
}

TEST_CASE("search --exact exits 1 when starved bounds stay open") {
  RunResult r = run_cli("search 3,5,7 --exact --budget 50 --max-window 12 --no-timing");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "\"exact\":false"));
  CHECK(contains(r.out, "\"lo\":7"));
}

TEST_CASE("search --colors reports the found period and word") {
  RunResult r = run_cli("search 1,5 --colors 6 --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"distchrom/1\",\"d\":\"1,5\",\"normalized\":\"1,5\","
        "\"divisor\":1,\"colors\":6,\"found\":true,\"word\":\"12312345645\","
        "\"period\":11,\"nodes\":63986}\n");
}

TEST_CASE("search --colors stretches the word back to the typed set") {
  RunResult r = run_cli("search 2,6 --colors 5 --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"word\":\"1122334455\",\"period\":10"));
}

TEST_CASE("search --colors exits 1 when nothing is found") {
  RunResult r = run_cli("search 1,2 --colors 4 --no-timing");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "\"found\":false"));
}

TEST_CASE("search --exact and --colors are mutually exclusive") {
  CHECK(run_cli("search 1,2 --exact --colors 5").exit_code == 2);
}

TEST_CASE("table sweeps a family to CSV") {
  RunResult r = run_cli("table --family one_a --range a=3..7 --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "d,normalized,divisor,family,rule,delta,square,lo,hi,exact,evidence\n"
        "\"1,3\",\"1,3\",1,one_a,one-a-dichotomy,4,\"1,2,3,4,6\",5,5,true,\"a mod 5 in {2,3}\"\n"
        "\"1,4\",\"1,4\",1,one_a,one-a-dichotomy,4,\"1,2,3,4,5,8\",6,6,true,\"a mod 5 not in {2,3}\"\n"
        "\"1,5\",\"1,5\",1,one_a,one-a-dichotomy,4,\"1,2,4,5,6,10\",6,6,true,\"a mod 5 not in {2,3}\"\n"
        "\"1,6\",\"1,6\",1,one_a,one-a-dichotomy,4,\"1,2,5,6,7,12\",6,6,true,\"a mod 5 not in {2,3}\"\n"
        "\"1,7\",\"1,7\",1,one_a,one-a-dichotomy,4,\"1,2,6,7,8,14\",5,5,true,\"a mod 5 in {2,3}\"\n");
}

TEST_CASE("table emits newline-delimited JSON on request") {
  RunResult r = run_cli("table --family path_power --range k=2..4 --format json --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"schema\":\"distchrom/1\",\"d\":\"1,2\",\"normalized\":\"1,2\",\"divisor\":1,"
        "\"family\":\"path_power\",\"rule\":\"path-power-exact\",\"delta\":4,"
        "\"square\":\"1,2,3,4\",\"lo\":5,\"hi\":5,\"exact\":true,"
        "\"evidence\":\"clique of 2k+1 consecutive vertices; rainbow of the same size\"}\n"
        "{\"schema\":\"distchrom/1\",\"d\":\"1,2,3\",\"normalized\":\"1,2,3\",\"divisor\":1,"
        "\"family\":\"path_power\",\"rule\":\"path-power-exact\",\"delta\":6,"
        "\"square\":\"1,2,3,4,5,6\",\"lo\":7,\"hi\":7,\"exact\":true,"
        "\"evidence\":\"clique of 2k+1 consecutive vertices; rainbow of the same size\"}\n"
        "{\"schema\":\"distchrom/1\",\"d\":\"1,2,3,4\",\"normalized\":\"1,2,3,4\",\"divisor\":1,"
        "\"family\":\"path_power\",\"rule\":\"path-power-exact\",\"delta\":8,"
        "\"square\":\"1,2,3,4,5,6,7,8\",\"lo\":9,\"hi\":9,\"exact\":true,"
        "\"evidence\":\"clique of 2k+1 consecutive vertices; rainbow of the same size\"}\n");
}

TEST_CASE("table --confirm appends solver agreement columns") {
  RunResult r = run_cli("table --family one_a --range a=3..4 --confirm --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "d,normalized,divisor,family,rule,delta,square,lo,hi,exact,evidence,"
        "search_lo,search_hi,search_agrees\n"
        "\"1,3\",\"1,3\",1,one_a,one-a-dichotomy,4,\"1,2,3,4,6\",5,5,true,"
        "\"a mod 5 in {2,3}\",5,5,true\n"
        "\"1,4\",\"1,4\",1,one_a,one-a-dichotomy,4,\"1,2,3,4,5,8\",6,6,true,"
        "\"a mod 5 not in {2,3}\",6,6,true\n");
}

TEST_CASE("table covers two-variable grids") {
  RunResult r = run_cli("table --family one_to_m_a --range m=2..3,a=6..7 --no-timing");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"1,2,6\""));
  CHECK(contains(r.out, "\"1,2,3,7\""));
  // row-major: all m=2 rows precede m=3 rows
  CHECK(r.out.find("\"1,2,7\"") < r.out.find("\"1,2,3,6\""));
}

TEST_CASE("table rejects malformed ranges and families") {
  CHECK(run_cli("table --family one_a --range a=3..").exit_code == 2);
  CHECK(run_cli("table --family one_a --range b=3..4").exit_code == 2);
  CHECK(run_cli("table --family one_a --range a=4..3").exit_code == 2);
  CHECK(run_cli("table --family mystery --range a=3..4").exit_code == 2);
  RunResult general = run_cli("table --family general --range a=3..4");
  CHECK(general.exit_code == 3);
  CHECK(contains(general.out, "no parameter grid"));
}

TEST_CASE("bare invocation asks for a subcommand with exit 2") {
  RunResult r = run_cli("");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "subcommand"));
}

TEST_CASE("--help exits 0") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "Usage"));
}

TEST_CASE("identical invocations are byte-identical without timing") {
  const char* cmds[] = {
      "classify 1,2,5 --format json --no-timing",
      "search 1,3,4 --no-timing",
      "table --family one_a_a1 --range a=3..6 --no-timing",
  };
  for (const char* cmd : cmds) {
    CAPTURE(cmd);
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
