// End-to-end tests for the command-line tool: spawns the real binary and
// checks output bytes, JSON content and exit codes.

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CmdResult run_cli(const std::string& args) {
    CmdResult result;
    const std::string err_file = "/tmp/circulant_cli_test_stderr.txt";
    const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>" + err_file;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_file);
    result.err.assign(std::istreambuf_iterator<char>(err), std::istreambuf_iterator<char>());
    return result;
}

}  // namespace

TEST_CASE("analyze an integral graph by divisors") {
    const CmdResult r = run_cli("analyze --n 6 --divisors 1");
    REQUIRE(r.exit_code == 0);
    const json bundle = json::parse(r.out);
    CHECK(bundle["n"] == 6);
    CHECK(bundle["symbol"] == json::array({1, 5}));
    CHECK(bundle["divisor_set"] == json::array({1}));
    CHECK(bundle["degree"] == 2);
    CHECK(bundle["connected"] == true);
    CHECK(bundle["bipartite"] == true);
    CHECK(bundle["bipartite_checks"]["ell0"] == 3);
    CHECK(bundle["diameter"]["diameter"] == 3);
    CHECK(bundle["diameter"]["t"] == 1);
    CHECK(bundle["evolution"]["periodic"] == true);
    CHECK(bundle["evolution"]["period"] == json({{"p", 2}, {"q", 1}}));
    CHECK(bundle["ratio_condition"] == true);
    CHECK(bundle["spectrum"]["variant"] == "exact");
    CHECK(bundle["spectrum"]["values"] == json::array({2, 1, -1, -2, -1, 1}));
}

TEST_CASE("analyze a non-integral graph by symbol") {
    const CmdResult r = run_cli("analyze --n 5 --symbol 1,4");
    REQUIRE(r.exit_code == 0);
    const json bundle = json::parse(r.out);
    CHECK(bundle["divisor_set"].is_null());
    CHECK(bundle["evolution"]["periodic"] == false);
    CHECK(bundle["evolution"]["period"].is_null());
    CHECK(bundle["ratio_condition"] == false);
    CHECK(bundle["spectrum"]["variant"] == "numeric");
    CHECK(bundle["bipartite"] == false);
    CHECK(bundle["diameter"]["diameter"] == 2);
    CHECK(bundle["diameter"]["t"].is_null());
}

TEST_CASE("analyze reports the transfer witness on request") {
    const CmdResult r = run_cli("analyze --n 4 --symbol 1,3 --pst");
    REQUIRE(r.exit_code == 0);
    const json bundle = json::parse(r.out);
    const json pst = bundle["evolution"]["pst"];
    REQUIRE_FALSE(pst.is_null());
    CHECK(pst["a"] == 0);
    CHECK(pst["b"] == 2);
    CHECK(pst["t"] == json({{"p", 1}, {"q", 2}}));

    const CmdResult quiet = run_cli("analyze --n 4 --symbol 1,3");
    CHECK(json::parse(quiet.out)["evolution"]["pst"].is_null());
}

TEST_CASE("analyze output is byte deterministic") {
    const CmdResult a = run_cli("analyze --n 12 --divisors 1,2,6 --pst");
    const CmdResult b = run_cli("analyze --n 12 --divisors 1,2,6 --pst");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("analyze rejects malformed input with exit code 2") {
    const CmdResult bad_symbol = run_cli("analyze --n 6 --symbol 2");
    CHECK(bad_symbol.exit_code == 2);
    CHECK(bad_symbol.err.find("not closed under negation") != std::string::npos);

    const CmdResult bad_divisor = run_cli("analyze --n 6 --divisors 4");
    CHECK(bad_divisor.exit_code == 2);

    const CmdResult both = run_cli("analyze --n 6 --symbol 1,5 --divisors 1");
    CHECK(both.exit_code == 2);

    const CmdResult neither = run_cli("analyze --n 6");
    CHECK(neither.exit_code == 2);

    const CmdResult missing = run_cli("analyze --symbol 1,5");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("table reproduces the small extremal orders") {
    const CmdResult r = run_cli("table --kmax 3 --cap 50");
    REQUIRE(r.exit_code == 0);
    const json table = json::parse(r.out);
    CHECK(table["cap"] == 50);
    REQUIRE(table["rows"].size() == 2);
    CHECK(table["rows"][0]["k"] == 2);
    CHECK(table["rows"][0]["N"] == 6);
    CHECK(table["rows"][1]["k"] == 3);
    CHECK(table["rows"][1]["N"] == 6);
}

TEST_CASE("table emits csv with the cap recorded") {
    const CmdResult r = run_cli("--format csv table --kmax 2 --cap 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("cap=4") != std::string::npos);
    CHECK(r.out.find("k,N,n,D,cap") != std::string::npos);
    CHECK(r.out.find("2,4,4,1,4") != std::string::npos);
}

TEST_CASE("table honors the jobs flag without changing output") {
    const CmdResult serial = run_cli("table --kmax 5 --cap 120");
    const CmdResult parallel = run_cli("--jobs 2 table --kmax 5 --cap 120");
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("family command verifies the advertised diameters") {
    const CmdResult diam2 = run_cli("family diam2 --primes 3,5,7");
    REQUIRE(diam2.exit_code == 0);
    const json r2 = json::parse(diam2.out);
    CHECK(r2["n"] == 105);
    CHECK(r2["diameter"] == 2);
    CHECK(r2["lower_ok"] == true);
    CHECK(r2["upper_ok"] == true);

    const CmdResult diam5 = run_cli("family diam2rp1 --primes 3,5");
    REQUIRE(diam5.exit_code == 0);
    const json r5 = json::parse(diam5.out);
    CHECK(r5["n"] == 450);
    CHECK(r5["diameter"] == 5);

    const CmdResult too_few = run_cli("family diam2 --primes 3,5");
    CHECK(too_few.exit_code == 2);
    CHECK(too_few.err.find("r >= 3") != std::string::npos);

    const CmdResult bad_kind = run_cli("family diam3 --primes 3,5,7");
    CHECK(bad_kind.exit_code == 2);
}

TEST_CASE("enumerate lists the connected integral circulants") {
    const CmdResult r = run_cli("enumerate --n 6");
    REQUIRE(r.exit_code == 0);
    const json data = json::parse(r.out);
    REQUIRE(data["sets"].size() == 5);
    CHECK(data["sets"][0]["D"] == json::array({1}));
    CHECK(data["sets"][0]["degree"] == 2);
}

TEST_CASE("pst subcommand") {
    const CmdResult r = run_cli("pst --n 4 --divisors 1");
    REQUIRE(r.exit_code == 0);
    const json evo = json::parse(r.out);
    CHECK(evo["pst"]["b"] == 2);
    CHECK(evo["pst"]["t"] == json({{"p", 1}, {"q", 2}}));

    const CmdResult none = run_cli("pst --n 5 --divisors 1");
    REQUIRE(none.exit_code == 0);
    CHECK(json::parse(none.out)["pst"].is_null());
}

TEST_CASE("period subcommand") {
    const CmdResult r = run_cli("period --n 4 --divisors 1,2");
    REQUIRE(r.exit_code == 0);
    const json data = json::parse(r.out);
    CHECK(data["period"] == json({{"p", 1}, {"q", 2}}));
    CHECK(data["degenerate"] == false);
}
