#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "pgc/enumeration.hpp"
#include "pgc/families.hpp"

// End-to-end checks of the installed command-line surface: flags, exit
// codes (0 ok / 2 parse / 3 size cap / 4 bad arguments), and the JSON
// report shapes scripts depend on.

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PGC_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("check with an inline graph6 string") {
    auto r = run_cli("check --graph6 @ --classes perfect --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j[0]["perfect"]["holds"] == true);
}

TEST_CASE("check an edge-list file with all classes") {
    std::string path = "cli_c5.txt";
    {
        std::ofstream out(path);
        out << "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    }
    auto r = run_cli("check --format edgelist " + path + " --classes all --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    const auto& entry = j[0];
    CHECK(entry["graph"]["n"] == 5);
    CHECK(entry["perfect"]["holds"] == false);
    CHECK(entry["chromatic_number"] == 3);
    std::map<std::string, bool> verdicts;
    for (const auto& cls : entry["classes"])
        verdicts[cls["class"].get<std::string>()] = cls["holds"].get<bool>();
    CHECK(verdicts.at("2-perfect"));
    CHECK(verdicts.at("perfectly-divisible"));
    CHECK(verdicts.at("nice"));
    CHECK(verdicts.at("stable-perfect"));
    CHECK_FALSE(verdicts.at("2-divisible"));
    std::remove(path.c_str());
}

TEST_CASE("check reports parse errors with the line number, exit 2") {
    std::string path = "cli_bad.txt";
    {
        std::ofstream out(path);
        out << "3 2\n0 1\nnot an edge\n";
    }
    auto r = run_cli("check --format edgelist " + path + " --classes perfect");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);
    std::remove(path.c_str());

    auto bad6 = run_cli("check --graph6 A_X --classes perfect");
    CHECK(bad6.exit_code == 2);
}

TEST_CASE("check exceeds a checker cap, exit 3") {
    // 13 isolated vertices: fine for graph-core, over the cap for the
    // subset-sweep checkers. C(13,2) = 78 bits = 13 zero data bytes.
    auto r = run_cli("check --graph6 L" + std::string(13, '?') + " --classes 2-divisible");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("cap") != std::string::npos);
}

TEST_CASE("check rejects unknown classes, exit 4") {
    auto r = run_cli("check --graph6 @ --classes shiny");
    CHECK(r.exit_code == 4);
}

TEST_CASE("exactly one input source per invocation") {
    CHECK(run_cli("check --graph6 @ somefile.g6 --classes perfect").exit_code == 4);
    CHECK(run_cli("check --classes perfect").exit_code == 4);
    CHECK(run_cli("enumerate --n 3 --census 3").exit_code == 4);
}

TEST_CASE("verify runs a lemma suite") {
    auto r = run_cli("verify lemma6 --n-max 5");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["suite"] == "lemma6");
    CHECK(j["counterexamples"].empty());
    CHECK(j["universe"]["filter"] == "triangle-free");
}

TEST_CASE("verify runs the conjecture suite") {
    auto r = run_cli("verify hoang-mcdiarmid --n-max 5");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["tier"] == "conjecture");
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("verify argument validation, exit 4") {
    CHECK(run_cli("verify lemma3 --n-max 0").exit_code == 4);
    CHECK(run_cli("verify lemma5 --n-max 4").exit_code == 4);
    CHECK(run_cli("verify").exit_code == 4);
}

TEST_CASE("verify writes a report file") {
    std::string path = "cli_report.json";
    auto r = run_cli("verify lemma3 --n-max 4 --output " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    CHECK(j["graphs_tested"] == 1 + 2 + 3 + 7);
    std::remove(path.c_str());
}

TEST_CASE("enumerate emits graph6 lines") {
    auto r = run_cli("enumerate --n 4");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines == 11);

    auto k1 = run_cli("enumerate --n 1");
    CHECK(k1.output == "@\n");

    CHECK(run_cli("enumerate --n 0").exit_code == 4);
    CHECK(run_cli("enumerate --n 11").exit_code == 3);
}

TEST_CASE("enumerate census CSV") {
    auto r = run_cli("enumerate --census 5 --filter triangle-free");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("5,triangle-free,14") != std::string::npos);
}

TEST_CASE("search finds the minimal imperfect graphs") {
    auto r = run_cli("search minimal-imperfect --n-max 6 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["graphs"].size() == 1);
    CHECK(j["graphs"][0]["graph6"] == pgc::canonical_form(pgc::cycle_graph(5)));
    CHECK(run_cli("search no-such-thing --n-max 4").exit_code == 4);
}
