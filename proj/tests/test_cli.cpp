// End-to-end checks of the command-line tool: exact bytes on stdout and the
// documented exit statuses (0 ok / 1 failed check / 2 bad input).

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

/// Run the installed binary with the given arguments, capturing stdout.
/// Stderr is dropped so diagnostics never leak into byte comparisons.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HOMFLY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST_CASE("scalar polynomial output") {
    RunResult unknot = run_cli("homfly \"\"");
    CHECK(unknot.status == 0);
    CHECK(unknot.out == "1\n");

    RunResult trefoil = run_cli("homfly \"1 1 1\"");
    CHECK(trefoil.status == 0);
    CHECK(trefoil.out == "a^-2 q^2 + a^-2 q^-2 - a^-4\n");

    RunResult alexander = run_cli("homfly \"1 1 1\" --n 0");
    CHECK(alexander.status == 0);
    CHECK(alexander.out == "q^2 - 1 + q^-2\n");
}

TEST_CASE("composition table is the golden trefoil expansion") {
    RunResult r = run_cli("composition \"1 1 1\"");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "Cycle     Contribution\n"
          "-         a^-2 q^-2 + a^-2 q^-6 - a^-4 q^-4\n"
          "e1 e2 e5  a^-2 q^-2 - a^-2 q^-4\n"
          "e1 e3 e4  a^-2 q^-2 - a^-2 q^-4\n"
          "e1 e3 e5  a^-2 - 3 a^-2 q^-2 + 3 a^-2 q^-4 - a^-2 q^-6\n"
          "TOTAL a^-2 + a^-2 q^-4 - a^-4 q^-4  PASS\n");
}

TEST_CASE("check subcommands report PASS and exit zero") {
    RunResult alex = run_cli("euler-check \"1 1 1\" --alexander");
    CHECK(alex.status == 0);
    CHECK(alex.out.find("TOTAL q^2 - 1 + q^-2  PASS\n") != std::string::npos);

    RunResult homfly_mode = run_cli("euler-check \"1 1 1\"");
    CHECK(homfly_mode.status == 0);
    CHECK(homfly_mode.out.find("  PASS\n") != std::string::npos);

    RunResult jaeger = run_cli("composition \"1 1\" --jaeger");
    CHECK(jaeger.status == 0);
    CHECK(jaeger.out.find("  PASS\n") != std::string::npos);

    RunResult fixtures = run_cli("fixtures");
    CHECK(fixtures.status == 0);
    CHECK(fixtures.out.find("ALL PASS (21 checks)\n") != std::string::npos);
    CHECK(fixtures.out.find("FAIL") == std::string::npos);
}

TEST_CASE("homology table") {
    RunResult r = run_cli("homology \"1 1 1\" --cutoff 4 --reduce 1");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "cutoff 4\n"
          "q   h  v   dim\n"
          "-2  2  2   1\n"
          "0   4  -2  1\n"
          "2   2  -2  1\n");

    RunResult tsv = run_cli("homology \"1 1 1\" --cutoff 4 --reduce 1 --tsv");
    CHECK(tsv.status == 0);
    CHECK(tsv.out ==
          "q\th\tv\tdim\n"
          "-2\t2\t2\t1\n"
          "0\t4\t-2\t1\n"
          "2\t2\t-2\t1\n");
}

TEST_CASE("labelings table lists the four trefoil cycles") {
    RunResult r = run_cli("labelings \"1 1 1\"");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "cycle\ttypes\tt+\tt-\td+\td-\tx+\tx-\ts1\ts2\tr1\tr2\n"
          "-\tZ0 Z0 Z0\t0\t0\t0\t0\t0\t0\t0\t3\t0\t-1\n"
          "e1 e2 e5\tZ4 Z3 Z1\t1\t0\t2\t0\t0\t0\t3\t3\t-1\t0\n"
          "e1 e3 e4\tZ1 Z4 Z3\t1\t0\t2\t0\t0\t0\t3\t3\t-1\t0\n"
          "e1 e3 e5\tZ1 Z1 Z1\t3\t0\t0\t0\t0\t0\t3\t3\t-1\t0\n");

    // --all adds the inadmissible cycles on top of the admissible ones.
    RunResult all = run_cli("labelings \"1 1 1\" --all");
    CHECK(all.status == 0);
    CHECK(std::count(all.out.begin(), all.out.end(), '\n') > 5);
}

TEST_CASE("json output parses and carries the polynomial") {
    RunResult r = run_cli("homfly \"1 1 1\" --json");
    CHECK(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["word"] == "1 1 1");
    CHECK(j["text"] == "a^-2 q^2 + a^-2 q^-2 - a^-4");
    CHECK(j["polynomial"]["denom_pow"] == 0);
    CHECK(j["polynomial"]["num"].size() == 3);

    nlohmann::json comp =
        nlohmann::json::parse(run_cli("composition \"1 1 1\" --json").out);
    CHECK(comp["pass"] == true);
    CHECK(comp["rows"].size() == 4);
    CHECK(comp["total_text"] == "a^-2 + a^-2 q^-4 - a^-4 q^-4");

    nlohmann::json fix = nlohmann::json::parse(run_cli("fixtures --json").out);
    CHECK(fix["pass"] == true);
    CHECK(fix["checks"].size() == 21);
}

TEST_CASE("bad input exits with status two") {
    CHECK(run_cli("homfly \"1 x\"").status == 2);
    CHECK(run_cli("homfly \"0\"").status == 2);
    CHECK(run_cli("homfly \"1 1\" --bogus").status == 2);
    CHECK(run_cli("no-such-subcommand").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("homology \"1 2 3 4 5 6 7\"").status == 2);  // beyond engine size
    CHECK(run_cli("homfly \"1 1\" --prime --n 2").status == 2);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("output is byte-stable across runs") {
    for (const char* cmd : {"composition \"-1 2\"", "homology \"1 1\" --cutoff 6",
                            "labelings \"1 -1\" --json"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
