// The command-line front end, driven in-process with captured streams.
// Covers the documented invocation shapes, the exit-code contract, and
// byte-determinism of the rendered output.

#include "smw/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = smw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines_containing(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find(needle) != std::string::npos) ++count;
    return count;
}

}  // namespace

TEST_CASE("verify with a pinned instance reports exactly one passing check") {
    RunResult r = run({"verify", "lemma31", "--d", "1", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(count_lines_containing(r.out, "pass") >= 1);
    CHECK(r.out.find("1/1 checks pass") != std::string::npos);
    CHECK(r.out.find("lemma31:flag-reduction:n=3") != std::string::npos);
}

TEST_CASE("schedule emits the two intermediate stages of the degree-five tower") {
    RunResult r = run({"schedule", "--d", "5", "--m", "0", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 5);
    CHECK(j["m"] == 0);
    unsigned blowDowns = 0;
    for (const auto& stage : j["stages"])
        if (stage["kind"] == "blow-down") ++blowDowns;
    CHECK(blowDowns == 2);
    CHECK(j["stages"].back()["kind"] == "projective-bundle");
}

TEST_CASE("the conic pipeline suite passes with a healthy margin of checks") {
    RunResult r = run({"verify", "example36", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(count_lines_containing(r.out, "  pass") + count_lines_containing(r.out, " pass") >= 10);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("every advertised suite is listed and runnable by name") {
    RunResult list = run({"verify", "--list"});
    CHECK(list.code == 0);
    for (const char* name : {"lemma31", "kappa", "groebner", "schedule", "example36", "thm33",
                             "thm_m", "psi_sum", "invariants", "all"})
        CHECK(list.out.find(name) != std::string::npos);

    // A cheap pinned run per suite keeps this fast but end-to-end.
    RunResult one = run({"verify", "kappa", "--d", "3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("kappa:coefficients:d=3") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2 and an explanation") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"build"}).code == 2);
    CHECK(run({"build", "m01_pn_d2"}).code == 2);
    CHECK(run({"build", "nonsense", "--n", "2"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"schedule"}).code == 2);
    CHECK(run({"schedule", "--d", "1", "--m", "1"}).code == 2);
    CHECK(run({"verify", "all", "--format", "yaml"}).code == 2);
    RunResult r = run({"build", "m01_pn_d2"});
    CHECK(r.err.find("--n") != std::string::npos);
}

TEST_CASE("build renders presentations and bundles in both formats") {
    RunResult table = run({"build", "m01_pn_d2", "--n", "1"});
    CHECK(table.code == 0);
    CHECK(table.out.find("generators:") != std::string::npos);
    CHECK(table.out.find("derived classes:") != std::string::npos);

    RunResult json = run({"build", "m01_pn_d2", "--n", "1", "--format", "json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["generators"].size() == 4);
    CHECK(j["relations"].size() == 7);
    CHECK(j["derived"].contains("kH2"));
    CHECK(j["order"]["kind"] == "grevlex");

    RunResult bundle = run({"build", "thm33_relations", "--d", "2", "--n", "3",
                            "--format", "json"});
    auto jb = nlohmann::json::parse(bundle.out);
    CHECK(jb["relations"].size() >= 3);
    CHECK(jb["placeholders"].size() == 1);

    RunResult psi = run({"build", "psi_sum_relations", "--d", "2", "--m", "2", "--k", "2",
                         "--format", "json"});
    CHECK(psi.code == 0);
    CHECK(nlohmann::json::parse(psi.out)["name"] == "psi_sum_relations");
}

TEST_CASE("hilbert reports the exact graded dimensions") {
    RunResult r = run({"hilbert", "m01_pn_d2", "--n", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["hilbert"] == nlohmann::json::parse("[1,4,9,12,10,5,1]"));

    RunResult p = run({"hilbert", "projective_space", "--n", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(p.out)["hilbert"] == nlohmann::json::parse("[1,1,1,1]"));
}

TEST_CASE("invariants reports the palindromic swap-invariant dimensions") {
    RunResult r = run({"invariants", "--n", "1", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["hilbert"] == nlohmann::json::parse("[1,2,2,1]"));
}

TEST_CASE("repeated invocations are byte-identical") {
    std::vector<std::string> args = {"verify", "kappa", "--format", "json"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult t1 = run({"build", "flag_d1", "--n", "2"});
    RunResult t2 = run({"build", "flag_d1", "--n", "2"});
    CHECK(t1.out == t2.out);
}

TEST_CASE("--out writes the artifact to a file and keeps stdout silent") {
    std::string path = "cli_out_test.json";
    RunResult r = run({"verify", "kappa", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    in.close();
    std::remove(path.c_str());
    auto j = nlohmann::json::parse(content.str());
    CHECK(j.is_array());
    CHECK(j.size() >= 4);
    for (const auto& row : j) CHECK(row["status"] == "pass");
}

TEST_CASE("timing fields appear only on request") {
    RunResult plain = run({"verify", "kappa", "--format", "json"});
    CHECK(plain.out.find("\"ms\"") == std::string::npos);
    RunResult timed = run({"verify", "kappa", "--format", "json", "--timings"});
    CHECK(timed.out.find("\"ms\"") != std::string::npos);
}
