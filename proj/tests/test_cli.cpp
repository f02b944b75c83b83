#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QUIVERKAC_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 256> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int raw = pclose(p);
    return {WEXITSTATUS(raw), out};
}

std::string data(const std::string& name) { return std::string(QUIVERKAC_DATA) + "/" + name; }

}  // namespace

TEST_CASE("kac subcommand") {
    RunResult r = run("kac " + data("a2.json") + " --alpha 1,1");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"poly\":\"1\"") != std::string::npos);
    r = run("kac " + data("kron.json") + " --alpha 1,1");
    CHECK(r.out.find("q+1") != std::string::npos);
}

TEST_CASE("roots subcommand emits class, q and witness") {
    RunResult r = run("roots " + data("kron.json") + " --alpha 1,1");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"class\":\"imaginary\"") != std::string::npos);
    CHECK(r.out.find("\"q\":0") != std::string::npos);
}

TEST_CASE("named alpha form") {
    RunResult r = run("roots " + data("a2.json") + " --alpha 2=1,1=1");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"class\":\"real\"") != std::string::npos);
}

TEST_CASE("oracle-count at a prime power") {
    RunResult r = run("oracle-count " + data("kron.json") + " --alpha 1,1 --q 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"count\":5") != std::string::npos);
}

TEST_CASE("maxrank subcommand with oracle verification") {
    RunResult r = run("maxrank " + data("jordan.json") + " --alpha 1 --max a --verify-oracle");
    CHECK(r.status == 0);
    CHECK(r.out.find("q-1") != std::string::npos);
}

TEST_CASE("equipped subcommand with terms") {
    RunResult r = run("equipped " + data("edge-dtail.json") + " --alpha 1,1 --show-terms");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"terms\"") != std::string::npos);
    CHECK(r.out.find("\"poly\":\"1\"") != std::string::npos);
}

TEST_CASE("verify battery passes on desk-scale inputs") {
    CHECK(run("verify " + data("edge-dtail.json") + " --alpha 1,1").status == 0);
    CHECK(run("verify " + data("kron.json") + " --alpha 1,1").status == 0);
    CHECK(run("verify " + data("kron.json") + " --alpha 1,1 --max a1").status == 0);
}

TEST_CASE("schema errors exit 2 and name the offender") {
    RunResult r = run("kac " + data("bad.json") + " --alpha 1");
    CHECK(r.status == 2);
    r = run("kac " + data("a2.json") + " --alpha 1");
    CHECK(r.status == 2);
}

TEST_CASE("budget violations exit 3") {
    RunResult r = run("oracle-count " + data("kron.json") +
                      " --alpha 2,2 --q 3 --max-points 10");
    CHECK(r.status == 3);
}

TEST_CASE("byte-identical output for identical invocations") {
    std::string args = "kac " + data("kron.json") + " --alpha 1,1";
    CHECK(run(args).out == run(args).out);
}
