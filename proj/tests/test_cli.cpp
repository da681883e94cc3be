// Command-line surface: build-expression grammar, golden outputs against
// direct library calls, exit codes, and --json payloads.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skm/cli.hpp"
#include "skm/extremal.hpp"
#include "skm/spectral.hpp"
#include "skm/verify.hpp"

using namespace skm;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SKMATCH_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("build expression grammar") {
    CHECK(parse_build_expression("K5") == complete(5));
    CHECK(parse_build_expression("K3 u K2").order() == 5);
    CHECK(parse_build_expression("K1 v (K5 u 2K1)") == build_extremal_thm12(8, 1));
    CHECK(parse_build_expression("K1 v (K7 u K3 u 1K1)") ==
          build_extremal_thm14(12, 1));
    // join binds loosest: a u b v c = (a u b) v c
    CHECK(parse_build_expression("K1 u K1 v K2") ==
          parse_build_expression("(K1 u K1) v K2"));
    CHECK(parse_build_expression("2(K1 u K2)").order() == 6);
    CHECK(parse_build_expression(" K2  v  K2 ") == complete(4));

    CHECK_THROWS_AS(parse_build_expression(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_build_expression("K"), std::invalid_argument);
    CHECK_THROWS_AS(parse_build_expression("K2 w K2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_build_expression("(K2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_build_expression("K2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_build_expression("0K2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_build_expression("K99"), std::invalid_argument);
}

TEST_CASE("run_cli stream interface mirrors the binary") {
    std::ostringstream out, err;
    int code = run_cli({"radius", "--graph6", "Bw"}, out, err);
    CHECK(code == 0);
    CHECK(out.str() == "rho = 2\n");

    out.str("");
    code = run_cli({"nonsense"}, out, err);
    CHECK(code == 2);
}

TEST_CASE("kmatch golden output and exit code") {
    auto r = run("kmatch --graph6 Bw --k 1");
    CHECK(r.code == 1);
    CHECK(r.out == "no perfect 1-matching; certificate S=∅, slack 1\n");

    auto yes = run("kmatch --build \"K4\" --k 1 --witness");
    CHECK(yes.code == 0);
    CHECK(yes.out.find("perfect 1-matching exists:") == 0);

    auto j = run("kmatch --graph6 Bw --k 1 --json");
    CHECK(j.code == 1);
    json parsed = json::parse(j.out);
    CHECK(parsed["schema"] == 1);
    CHECK(parsed["exists"] == false);
    CHECK(parsed["certificate"]["slack"] == 1);
}

TEST_CASE("threshold golden output") {
    auto r = run("threshold --theorem 12 --n 8 --t 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("polynomial: x^3 - 4x^2 - 7x + 8\n") != std::string::npos);
    auto rho_line = r.out.substr(0, r.out.find('\n'));
    double rho = std::stod(rho_line.substr(rho_line.find('=') + 1));
    CHECK(rho > 5.0);
    CHECK(rho < 5.1);
    // matches the direct library call
    CHECK(rho == doctest::Approx(threshold_thm12(8, 1).rho_star).epsilon(1e-12));

    CHECK(run("threshold --theorem 12 --n 6 --t 1").code == 2);  // below range
}

TEST_CASE("radius agrees with the library on every input form") {
    std::ofstream edges("cli_edges.txt");
    edges << "3\n0 1\n1 2\n2 0\n";
    edges.close();
    auto a = run("radius --graph6 Bw");
    auto b = run("radius --edges cli_edges.txt");
    auto c = run("radius --build K3");
    CHECK(a.out == "rho = 2\n");
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    std::remove("cli_edges.txt");

    CHECK(run("radius").code == 2);                          // no input
    CHECK(run("radius --graph6 Bw --build K3").code == 2);   // two inputs
    CHECK(run("radius --graph6 '#bad'").code == 2);          // parse failure
}

TEST_CASE("quotient subcommand") {
    auto r = run("quotient --build \"K1 v (K5 u 2K1)\" --partition 0/6,7/1,2,3,4,5 --json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["equitable"] == true);
    CHECK(j["entries"] == json::parse("[[0,2,5],[1,0,0],[1,0,4]]"));
    CHECK(j["char_poly"] == json::parse("[1,-4,-7,8]"));

    auto bad = run("quotient --build K4 --partition 0/1");  // not a partition
    CHECK(bad.code == 2);
}

TEST_CASE("fpm subcommand") {
    CHECK(run("fpm --build K3").code == 0);              // odd cycle half-weights
    CHECK(run("fpm --build \"K1 u K1\"").code == 1);     // edgeless
    auto w = run("fpm --build \"K3 u K3 v K1\" --witness --json");
    CHECK(w.code == 0);
    json j = json::parse(w.out);
    CHECK(j["exists"] == true);
    double total = 0;
    for (const auto& e : j["witness"]) total += double(e[2]);
    CHECK(total == doctest::Approx(3.5));  // n/2 for n = 7
}

TEST_CASE("extremal and enumerate subcommands") {
    auto r = run("extremal --theorem 12 --n 8 --t 1 --json");
    json j = json::parse(r.out);
    CHECK(j["edges"] == 17);
    CHECK(j["connectivity"] == 1);
    CHECK(parse_graph6(j["graph6"]) == build_extremal_thm12(8, 1));

    CHECK(run("enumerate --n 6 --connected --count").out == "112\n");
    CHECK(run("enumerate --n 4 --count").out == "11\n");
    auto lines = run("enumerate --n 4 --connected");
    CHECK(lines.code == 0);
    int count = 0;
    for (char ch : lines.out) count += ch == '\n';
    CHECK(count == 6);
}

TEST_CASE("sweep subcommand") {
    auto r = run("sweep --t-max 2 --n-max 20");
    CHECK(r.code == 0);
    CHECK(r.out.find(" 0 violations") != std::string::npos);
}

TEST_CASE("verify subcommand round trip") {
    auto r = run("verify --theorem 11i --k 3 --workers 2 --report cli_report.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("112 graphs") != std::string::npos);
    CHECK(r.out.find("extremal-exception 1") != std::string::npos);
    RunReport back = read_report("cli_report.json");
    CHECK(back.total == 112);
    CHECK(back.counterexamples.empty());
    std::remove("cli_report.json");

    auto neg = run("verify --theorem 11i --k 3 --offset -0.5");
    CHECK(neg.code == 1);
    CHECK(neg.out.find("COUNTEREXAMPLE") != std::string::npos);
}
