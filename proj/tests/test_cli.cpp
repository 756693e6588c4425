#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef REDSIM_CLI_PATH
#define REDSIM_CLI_PATH "./redsim"
#endif
#ifndef REDSIM_FIXTURES_DIR
#define REDSIM_FIXTURES_DIR "tests/fixtures"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/redsim_cli_test_out.txt";
    const std::string cmd =
        std::string(REDSIM_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    result.output = ss.str();
    return result;
}

std::string fixture(const char* name) {
    return std::string(REDSIM_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("swap command reports four uniform Bell outcomes") {
    const RunResult r = run("swap --input " + fixture("bell_pair.json") + " --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["params_defaulted"] == true);
    REQUIRE(doc["outcomes"].size() == 4);
    for (const auto& out : doc["outcomes"]) {
        CHECK(out["probability"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(out["concurrence"].get<double>() == doctest::Approx(1.0).epsilon(1e-11));
    }
    CHECK(doc["probability_sum"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qudit swap yields nine rows") {
    const RunResult r = run("swap --input " + fixture("qudit3_swap.json") + " --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["basis"] == "qudit-bell");
    CHECK(doc["outcomes"].size() == 9);
}

TEST_CASE("near-normalized input is accepted, far-off input rejected") {
    CHECK(run("swap --input " + fixture("near_normalized.json")).exit_code == 0);
    const RunResult bad = run("swap --input " + fixture("bad_state.json"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("states[0]") != std::string::npos);
}

TEST_CASE("chain command enumerates every outcome tuple") {
    const RunResult r = run("chain --input " + fixture("chain3_params.json") + " --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["outcomes"].size() == 16);
    CHECK(doc["probability_sum"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    double max_residual = 0.0;
    for (const auto& out : doc["outcomes"]) {
        if (out["possible"].get<bool>()) {
            max_residual = std::max(max_residual, out["relation_residual"].get<double>());
        }
    }
    CHECK(max_residual < 1e-9);
}

TEST_CASE("route command prints the two-hop triangle path") {
    const RunResult r = run("route --input " + fixture("triangle.json") +
                            " --source A --target C --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["reachable"] == true);
    CHECK(doc["path"] == nlohmann::json({"A", "B", "C"}));
    CHECK(doc["heuristic_score"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("route exit codes distinguish unreachable targets and bad usage") {
    CHECK(run("route --input " + fixture("unreachable.json") + " --source A --target C")
              .exit_code == 3);
    CHECK(run("route --input " + fixture("triangle.json") + " --source A --target A")
              .exit_code == 2);
    CHECK(run("route --input " + fixture("bad_edge.json") + " --source A --target B")
              .exit_code == 2);
    CHECK(run("route --input /does/not/exist.json --source A --target B").exit_code == 2);
}

TEST_CASE("verify exits zero by default and nonzero under an impossible tolerance") {
    const RunResult ok = run("verify --trials 40 --format json");
    REQUIRE(ok.exit_code == 0);
    const auto doc = nlohmann::json::parse(ok.output);
    CHECK(doc["all_pass"] == true);

    const RunResult tight = run("verify --trials 40 --tolerance 1e-16");
    CHECK(tight.exit_code == 1);
    CHECK(tight.output.find("FAIL") != std::string::npos);
}

TEST_CASE("single-trial smoke run passes") {
    CHECK(run("verify --trials 1").exit_code == 0);
}

TEST_CASE("identical seed and config give byte-identical json output") {
    const RunResult a = run("verify --seed 7 --trials 60 --format json");
    const RunResult b = run("verify --seed 7 --trials 60 --format json");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    const RunResult c = run("verify --seed 8 --trials 60 --format json");
    CHECK(a.output != c.output);
}

TEST_CASE("text and json outputs carry the same numbers") {
    const RunResult text = run("swap --input " + fixture("tilted_pair.json"));
    const RunResult json = run("swap --input " + fixture("tilted_pair.json") + " --format json");
    REQUIRE(text.exit_code == 0);
    REQUIRE(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.output);
    for (const auto& out : doc["outcomes"]) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", out["probability"].get<double>());
        CHECK(text.output.find(buf) != std::string::npos);
    }
}

TEST_CASE("missing subcommand or unknown flag is a usage error") {
    CHECK(run("").exit_code == 2);
    CHECK(run("swap --nope x").exit_code == 2);
}
