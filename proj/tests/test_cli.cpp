#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

// End-to-end tests against the installed binary; ABTAXON_CLI_PATH is set by
// the build.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ABTAXON_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify reports verdicts with citations and exits 0") {
    RunResult r = run("classify \"Z(5^inf)\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PROP-3"));
    CHECK(contains(r.output, "THM-CHIEF"));
    CHECK(contains(r.output, "nearly Bassian"));
}

TEST_CASE("classify the zero group: every verdict Yes") {
    RunResult r = run("classify \"0\"");
    CHECK(r.exit_code == 0);
    CHECK(!contains(r.output, "  No"));
    CHECK(!contains(r.output, "Unknown"));
}

TEST_CASE("verdict No is not an error exit") {
    RunResult r = run("classify \"B(3)\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "DK-SHAPE"));
}

TEST_CASE("parse canonicalizes") {
    CHECK(run("parse \"Z + Z\"").output == "Z^2\n");
    RunResult alias = run("parse \"Q ⊕ Z(2^∞)\"");
    CHECK(alias.exit_code == 0);
    CHECK(alias.output == "Q + Z(2^inf)\n");

    RunResult ast = run("parse --ast \"Z^3 + Z(2^3)^w\"");
    CHECK(contains(ast.output, "Z  x 3"));
    CHECK(contains(ast.output, "Z(2^3)  x w"));
}

TEST_CASE("parse and validation failures exit 1 with a position") {
    RunResult r = run("parse \"TF(0)\"");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "1:4"));

    CHECK(run("classify \"Z(4^2)\"").exit_code == 1);
    CHECK(run("classify \"Z +\"").exit_code == 1);
}

TEST_CASE("decompose round trip and precondition exit") {
    RunResult ok = run("decompose \"Z(2)^w + Z(2^3)^2 + Z\"");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "E (elementary): Z(2)^w"));
    CHECK(contains(ok.output, "H (Bassian):    Z + Z(2^3)^2"));

    RunResult zero = run("decompose \"0\"");
    CHECK(zero.exit_code == 0);
    CHECK(contains(zero.output, "E (elementary): 0"));

    RunResult bad = run("decompose \"B(3)\"");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "T_3 not elementary + finite"));
}

TEST_CASE("machine output is byte-identical across runs") {
    RunResult a = run("classify --json \"Q + Z(2)^w + TF(2;3,5)\"");
    RunResult b = run("classify --json \"Q + Z(2)^w + TF(2;3,5)\"");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"strictnessFlag\": false"));
    CHECK(contains(a.output, "\"citation\": \"PROBLEM-2\""));
}

TEST_CASE("strict-paper flips the derived nearly-GB rule") {
    RunResult lax = run("classify --json \"Z(2)^w\"");
    RunResult strict = run("classify --json --strict-paper \"Z(2)^w\"");
    CHECK(contains(lax.output, "NGB-DERIVED-TORSION"));
    CHECK(contains(strict.output, "HEREDITARY-GB-OPEN"));
    CHECK(contains(strict.output, "\"strictnessFlag\": true"));
}

TEST_CASE("oracle subcommands succeed and respect budgets") {
    RunResult sweep = run("oracle bassian-sweep --max-order 24");
    CHECK(sweep.exit_code == 0);
    CHECK(contains(sweep.output, "counterexamples: 0"));

    RunResult lemma = run("oracle lemma-basic --p 2 --max-order 64 --trials 10 --seed 7");
    CHECK(lemma.exit_code == 0);

    RunResult over = run("oracle bassian-sweep --max-order 9999");
    CHECK(over.exit_code == 3);

    RunResult raised = run("oracle embedding-equiv --p 2 --max-exp 3");
    CHECK(raised.exit_code == 0);
}

TEST_CASE("ABTAXON_MAX_ORDER overrides the budget ceiling") {
    auto run_env = [](const std::string& env_and_args) {
        std::string cmd = "env " + env_and_args + " 2>&1 >/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf;
        while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
        }
        return WEXITSTATUS(pclose(pipe));
    };
    const std::string cli = ABTAXON_CLI_PATH;
    // lowering the ceiling blocks an otherwise fine budget
    CHECK(run_env("ABTAXON_MAX_ORDER=40 " + cli + " oracle bassian-sweep --max-order 50") == 3);
    // raising it back admits the same budget
    CHECK(run_env("ABTAXON_MAX_ORDER=60 " + cli + " oracle bassian-sweep --max-order 50") == 0);
}

TEST_CASE("corpus mode runs the bundled corpus") {
    std::string corpus = std::string(ABTAXON_SOURCE_DIR) + "/data/corpus.json";
    RunResult r = run("classify --corpus \"" + corpus + "\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "corpus entries passed"));
    CHECK(!contains(r.output, "FAIL"));
}
