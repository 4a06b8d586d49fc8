#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(STACKTRICK_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve reports the classic trick") {
    const RunResult r = run_cli("solve --cards 21 --stacks 3 --on-top 1");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "solvable [Step7_Divisibility_Pass]"));
    CHECK(contains(r.output, "final position: 11"));
    CHECK(contains(r.output, "iteration bound (k_paper): 3"));
    CHECK(contains(r.output, "empirical minimum (k_star): 3"));
}

TEST_CASE("solve reports a non-solvable trick with its rule, exit 0") {
    const RunResult r = run_cli("solve --cards 5 --stacks 1 --on-top 0");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "not_solvable [Step4_OneStack]"));
}

TEST_CASE("solve certifies an explicit iteration count") {
    const RunResult too_few = run_cli("solve --cards 21 --stacks 3 --on-top 1 --k 2");
    CHECK(too_few.status == 0);
    CHECK(contains(too_few.output, "certified at k=2: no"));
    CHECK(contains(too_few.output, "10 11 12"));

    const RunResult enough = run_cli("solve --cards 21 --stacks 3 --on-top 1 --k 3");
    CHECK(enough.status == 0);
    CHECK(contains(enough.output, "certified at k=3: yes"));
}

TEST_CASE("machine output parses and round-trips byte-identically") {
    const RunResult r =
        run_cli("solve --cards 21 --stacks 3 --on-top 1 --k 2 --format machine");
    CHECK(r.status == 0);
    const auto env = nlohmann::ordered_json::parse(r.output);
    CHECK(env.dump(2) + "\n" == r.output);

    CHECK(env["command"] == "solve");
    CHECK(env["inputs"]["cards"] == 21);
    CHECK(env["inputs"]["stacks"] == 3);
    CHECK(env["inputs"]["on_top"] == 1);
    CHECK(env["result"]["verdict"] == "solvable");
    CHECK(env["result"]["final_position"] == 11);
    CHECK(env["result"]["k_paper"] == 3);
    CHECK(env["result"]["k_star"] == 3);
    CHECK(env["result"]["params"]["cards_per_stack"] == 7);
    CHECK(env["result"]["params"]["offset"]["num"] == "7");
    CHECK(env["result"]["params"]["offset"]["den"] == "2");
    CHECK(env["result"]["params"]["threshold"]["num"] == "21");
    CHECK(env["result"]["certification"]["certified"] == false);
    CHECK(env["result"]["certification"]["image"] ==
          nlohmann::ordered_json::array({10, 11, 12}));
    CHECK(env["artifact_version"].is_string());

    // null slots keep their place for non-solvable outcomes
    const RunResult ns = run_cli("solve --cards 6 --stacks 3 --on-top 1 --format machine");
    const auto env2 = nlohmann::ordered_json::parse(ns.output);
    CHECK(env2.dump(2) + "\n" == ns.output);
    CHECK(env2["result"]["verdict"] == "not_solvable");
    CHECK(env2["result"]["final_position"].is_null());
}

TEST_CASE("simulate") {
    const RunResult r = run_cli(
        "simulate --cards 21 --stacks 3 --on-top 1 --start 20 --iterations 3");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "final position: 11"));

    const RunResult traced = run_cli(
        "simulate --cards 21 --stacks 3 --on-top 1 --start 20 --iterations 1 --trace");
    CHECK(traced.status == 0);
    CHECK(contains(traced.output, "iteration 1: stack 2, row 7"));
    CHECK(contains(traced.output,
                   "1,4,7,10,13,16,19,2,5,8,11,14,17,20,3,6,9,12,15,18,21"));

    const RunResult single =
        run_cli("simulate --cards 1 --stacks 1 --on-top 0 --start 1 --iterations 5");
    CHECK(single.status == 0);
    CHECK(contains(single.output, "final position: 1"));

    const RunResult machine = run_cli(
        "simulate --cards 21 --stacks 3 --on-top 1 --start 20 --iterations 3 "
        "--trace --format machine");
    const auto env = nlohmann::ordered_json::parse(machine.output);
    CHECK(env.dump(2) + "\n" == machine.output);
    CHECK(env["result"]["final_position"] == 11);
    CHECK(env["result"]["trace"].size() == 3);
    CHECK(env["result"]["trace"][0]["chosen_stack"] == 2);
    CHECK(env["result"]["trace"][0]["stack_row"] == 7);
}

TEST_CASE("validation failures exit nonzero and name the constraint") {
    const RunResult r = run_cli("solve --cards 21 --stacks 6 --on-top 1", true);
    CHECK(r.status != 0);
    CHECK(contains(r.output, "stack count must divide the card count"));

    const RunResult bad_start = run_cli(
        "simulate --cards 21 --stacks 3 --on-top 1 --start 22 --iterations 1", true);
    CHECK(bad_start.status != 0);
    CHECK(contains(bad_start.output, "start position out of range"));
}

TEST_CASE("count") {
    const RunResult one = run_cli("count --cards 1");
    CHECK(one.status == 0);
    CHECK(contains(one.output, "solvable tricks (formula): 1"));
    CHECK(contains(one.output, "solvable tricks (enumerated): 1"));

    const RunResult classic = run_cli("count --cards 21 --format machine");
    CHECK(classic.status == 0);
    const auto env = nlohmann::ordered_json::parse(classic.output);
    CHECK(env.dump(2) + "\n" == classic.output);
    CHECK(env["result"]["formula"] == 29);
    CHECK(env["result"]["enumerated"] == 29);
    CHECK(env["result"]["match"] == true);
}

TEST_CASE("table recomputes all fifteen reference tricks") {
    const RunResult r = run_cli("table");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "(21, 7, 5, 2) = 18   ok"));
    CHECK(contains(r.output, "all 15 rows match"));

    const RunResult machine = run_cli("table --format machine");
    const auto env = nlohmann::ordered_json::parse(machine.output);
    CHECK(env.dump(2) + "\n" == machine.output);
    CHECK(env["result"]["all_match"] == true);
    CHECK(env["result"]["rows"].size() == 15);
}

TEST_CASE("verify sweeps a deck range against the simulator") {
    const RunResult r = run_cli("verify --max-cards 12");
    CHECK(r.status == 0);
    CHECK(contains(r.output, "result: PASS"));
    CHECK(contains(r.output, "0 failures"));
}

TEST_CASE("atlas writes the CSV dataset") {
    const std::string path = "/tmp/stacktrick_cli_test_atlas.csv";
    const RunResult r = run_cli("atlas --max-cards 21 --out " + path);
    CHECK(r.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(contains(content.str(), "C,n,j,solvable,reason,l,k_paper,k_star\n"));
    CHECK(contains(content.str(), "21,3,1,true,Step7_Divisibility_Pass,11,3,3\n"));
    std::remove(path.c_str());

    const RunResult to_stdout = run_cli("atlas --max-cards 1");
    CHECK(to_stdout.status == 0);
    CHECK(contains(to_stdout.output, "1,1,0,true,Step3_SingleCard,1,1,1\n"));
}
