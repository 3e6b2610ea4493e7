// SPDX-License-Identifier: Apache-2.0
//
// End-to-end runs of the ladder executable through a shell pipe. The binary
// path comes in through LADDER_CLI_PATH at compile time.
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + LADDER_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.out.append(buf, got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (const char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

} // namespace

TEST_CASE("resist prints one exact value") {
    const RunResult r = run_cli("resist --n 3 --pair p3,q3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "11/15\n");

    const RunResult reversed = run_cli("resist --n 3 --pair q3,p3");
    CHECK(reversed.exit_code == 0);
    CHECK(reversed.out == "11/15\n");

    const RunResult diagonal = run_cli("resist --n 1 --pair p1,p1");
    CHECK(diagonal.exit_code == 0);
    CHECK(diagonal.out == "0\n");
}

TEST_CASE("global flags work before and after the subcommand") {
    const RunResult before = run_cli("--float --digits 6 resist --n 3 --pair p3,q3");
    CHECK(before.exit_code == 0);
    CHECK(before.out == "0.733333\n");

    const RunResult after = run_cli("resist --n 3 --pair p3,q3 --float --digits 6");
    CHECK(after.exit_code == 0);
    CHECK(after.out == "0.733333\n");
}

TEST_CASE("resist --all in every format") {
    const RunResult csv = run_cli("resist --n 2 --all --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "side_a,idx_a,side_b,idx_b,value\n"
                     "p,1,p,2,3/4\n"
                     "p,1,q,1,3/4\n"
                     "p,1,q,2,1\n"
                     "p,2,q,1,1\n"
                     "p,2,q,2,3/4\n"
                     "q,1,q,2,3/4\n");

    const RunResult plain = run_cli("resist --n 2 --all");
    CHECK(plain.exit_code == 0);
    CHECK(count_lines(plain.out) == 6);
    CHECK(plain.out.find("r(p1,p2) = 3/4\n") != std::string::npos);

    const RunResult json = run_cli("resist --n 2 --all --format json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["n"] == 2);
    CHECK(doc["source"] == "closed_form");
    REQUIRE(doc["entries"].size() == 6);
    CHECK(doc["entries"][0]["value"] == "3/4");
}

TEST_CASE("kirchhoff output") {
    const RunResult exact = run_cli("kirchhoff --n 7");
    CHECK(exact.exit_code == 0);
    CHECK(exact.out == "415177/2911\n");

    const RunResult floating = run_cli("kirchhoff --n 2 --float");
    CHECK(floating.exit_code == 0);
    CHECK(floating.out == "5.000000000000\n");

    const RunResult json = run_cli("kirchhoff --n 3 --format json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["n"] == 3);
    CHECK(doc["kirchhoff"] == "71/5");
}

TEST_CASE("invariants output") {
    const RunResult plain = run_cli("invariants --n 2");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("genus = 1\n") != std::string::npos);
    CHECK(plain.out.find("tau = 1/3\n") != std::string::npos);
    CHECK(plain.out.find("zcap = 1/3\n") != std::string::npos);

    const RunResult tree = run_cli("invariants --n 1 --format json");
    CHECK(tree.exit_code == 0);
    const auto doc = nlohmann::json::parse(tree.out);
    CHECK(doc["genus"] == 0);
    CHECK(doc["tau"] == "1/4");
    CHECK(doc["theta"] == "2");
    CHECK(doc["phi"] == "undefined (genus 0)");

    const RunResult csv = run_cli("invariants --n 2 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "n,total_length,genus,tau,theta,lambda,phi,epsilon,zcap\n"
                     "2,4,1,1/3,0,1/3,0,0,1/3\n");
}

TEST_CASE("sequence output") {
    const RunResult gfib = run_cli("sequence --max 10");
    CHECK(gfib.exit_code == 0);
    CHECK(count_lines(gfib.out) == 11);
    CHECK(gfib.out.find("10: 151316\n") != std::string::npos);

    const RunResult deriv = run_cli("sequence --kind cheb-deriv --max 3");
    CHECK(deriv.exit_code == 0);
    CHECK(deriv.out == "0: 0\n1: 2\n2: 16\n3: 92\n");

    const RunResult csv = run_cli("sequence --kind gfib --max 5 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "index,value\n0,0\n1,1\n2,4\n3,15\n4,56\n5,209\n");

    const RunResult cheb = run_cli("sequence --kind cheb --max 4 --format json");
    CHECK(cheb.exit_code == 0);
    const auto doc = nlohmann::json::parse(cheb.out);
    CHECK(doc["kind"] == "cheb");
    REQUIRE(doc["values"].size() == 5);
    CHECK(doc["values"][4] == "209");
}

TEST_CASE("verify passes clean and fails when poisoned") {
    const RunResult clean = run_cli("verify --n-max 6");
    CHECK(clean.exit_code == 0);
    CHECK(clean.out.find("all 5 suites passed") != std::string::npos);

    const RunResult single = run_cli("verify --n-max 4 --suite spectral");
    CHECK(single.exit_code == 0);
    CHECK(single.out == "spectral: PASS\nall 1 suites passed\n");

    const RunResult poisoned = run_cli("verify --n-max 5 --inject-fault");
    CHECK(poisoned.exit_code == 1);
    CHECK(poisoned.out.find("oracle: FAIL") != std::string::npos);
    CHECK(poisoned.out.find("p1,q1") != std::string::npos);
    CHECK(poisoned.out.find("1 of 5 suites failed") != std::string::npos);

    const RunResult json = run_cli("verify --n-max 3 --suite reduction --format json");
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["pass"] == true);
    REQUIRE(doc["suites"].size() == 1);
    CHECK(doc["suites"][0]["name"] == "reduction");
    CHECK(doc["suites"][0]["pass"] == true);
}

TEST_CASE("--out redirects into a file") {
    const std::string path = "cli_out_check.txt";
    const RunResult r = run_cli("kirchhoff --n 3 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == "71/5\n");
    file.close();
    std::remove(path.c_str());
}

TEST_CASE("bad invocations exit with 2") {
    CHECK(run_cli("kirchhoff --n 0").exit_code == 2);
    CHECK(run_cli("resist --n 3 --pair p4,q1").exit_code == 2);
    CHECK(run_cli("resist --n 3 --pair bogus").exit_code == 2);
    CHECK(run_cli("resist --n 3").exit_code == 2);
    CHECK(run_cli("resist --n 3 --pair p1,p2 --all").exit_code == 2);
    CHECK(run_cli("--format yaml kirchhoff --n 2").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("--help exits cleanly") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("resist") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}
