#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + CSEP_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

nlohmann::json first_json_line(const std::string& text) {
    return nlohmann::json::parse(text.substr(0, text.find('\n')));
}

}  // namespace

TEST_CASE("cli: gen then separate then verify") {
    RunResult g = run_cli("gen --family chordal --n 10 --p 0.5 --seed 7 --out cli_a.col");
    REQUIRE(g.exit_code == 0);
    auto gj = first_json_line(g.out);
    CHECK(gj["family"] == "chordal");
    CHECK(gj["n"] == 10);
    CHECK(slurp("cli_a.col.json").find("\"seed\": 7") != std::string::npos);

    RunResult s = run_cli(
        "separate --in cli_a.col --class chordal --verify exhaustive --out cli_a.sep "
        "--tree cli_a.tree.json");
    REQUIRE(s.exit_code == 0);
    auto sj = first_json_line(s.out);
    CHECK(sj["class"] == "chordal");
    CHECK(sj["verify_ok"] == true);
    CHECK(sj["build_ms"] == 0.0);
    auto tree = nlohmann::json::parse(slurp("cli_a.tree.json"));
    CHECK(tree.is_array());
    CHECK(tree[0]["rule"] == "leaf-chordal");

    RunResult v = run_cli("verify --in cli_a.col --sep cli_a.sep --mode exhaustive");
    CHECK(v.exit_code == 0);
    CHECK(first_json_line(v.out)["verify_ok"] == true);

    // a family of only the trivial cuts must fail verification with a witness
    write_file("cli_a_bad.sep", "s 10 1 manual\nc 1 2 3 4 5 6 7 8 9 10\n");
    RunResult b = run_cli("verify --in cli_a.col --sep cli_a_bad.sep --mode reduced");
    CHECK(b.exit_code == 4);
    CHECK(first_json_line(b.out)["verify_ok"] == false);
    CHECK(b.out.find("\nK ") != std::string::npos);
    CHECK(b.out.find("\nS ") != std::string::npos);
}

TEST_CASE("cli: auto class picks a pipeline") {
    write_file("cli_c6.col",
               "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
    RunResult r = run_cli("separate --in cli_c6.col --verify exhaustive");
    REQUIRE(r.exit_code == 0);
    auto j = first_json_line(r.out);
    CHECK(j["class"] == "cap-free");
    CHECK(j["verify_ok"] == true);
}

TEST_CASE("cli: class violations exit 3 with a witness") {
    write_file("cli_claw.col", "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
    RunResult r = run_cli("separate --in cli_claw.col --class claw-free");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("claw 1 2 3 4") != std::string::npos);

    write_file("cli_hole.col", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    RunResult h = run_cli("separate --in cli_hole.col --class chordal");
    CHECK(h.exit_code == 3);
    CHECK(h.out.find("hole 1 2 3 4 5") != std::string::npos);

    // --assume-class skips validation and proceeds
    RunResult a = run_cli(
        "separate --in cli_hole.col --class claw-free --assume-class --verify exhaustive");
    CHECK(a.exit_code == 0);
}

TEST_CASE("cli: parse failures exit 2") {
    CHECK(run_cli("separate --in cli_missing_file.col").exit_code == 2);
    CHECK(run_cli("separate").exit_code == 2);
    CHECK(run_cli("frobnicate --in x").exit_code == 2);
    CHECK(run_cli("separate --in cli_c6.col --class nosuch").exit_code == 2);
    write_file("cli_garbage.col", "hello world\n");
    CHECK(run_cli("separate --in cli_garbage.col").exit_code == 2);
    CHECK(run_cli("bench --family random --n-range oops").exit_code == 2);
}

TEST_CASE("cli: generation failures exit 5") {
    CHECK(run_cli("gen --family cap-free-amalgam --n 6 --out cli_no.col").exit_code == 5);
    CHECK(run_cli("gen --family nosuch --n 6 --out cli_no.col").exit_code == 2);
}

TEST_CASE("cli: separate output is byte-identical across runs") {
    std::string args =
        "separate --in cli_a.col --class cap-free --verify exhaustive --out cli_d1.sep";
    RunResult r1 = run_cli(args);
    std::string sep1 = slurp("cli_d1.sep");
    RunResult r2 = run_cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.exit_code == r2.exit_code);
    CHECK(r1.out == r2.out);
    CHECK(sep1 == slurp("cli_d1.sep"));
}

TEST_CASE("cli: bench CSV") {
    std::string args =
        "bench --family chordal --n-range 8..10 --reps 2 --p 0.5 --seed 3";
    RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "family,n,m,class,sep_size,tree_internal,tree_leaves,dedup_savings,build_ms,"
          "verify_mode,verify_ok");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(line.substr(0, 8) == "chordal,");
        CHECK(line.find(",exhaustive,true") != std::string::npos);
    }
    CHECK(rows == 6);
    CHECK(run_cli(args).out == r.out);

    RunResult f = run_cli(args + " --out cli_bench.csv");
    REQUIRE(f.exit_code == 0);
    CHECK(first_json_line(f.out)["rows"] == 6);
    CHECK(slurp("cli_bench.csv") == r.out);
}
