/*
   Copyright 2026 the bhtool authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// End-to-end tests driving the installed bhtool binary (path in BHTOOL_BIN)
// as a subprocess and checking stdout plus exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bhc/io.hpp"
#include "fixtures.hpp"

using namespace bhc;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_tool(const std::string& args) {
    const char* bin = std::getenv("BHTOOL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "BHTOOL_BIN must point at the bhtool binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    r.exit_code = WEXITSTATUS(status);
    return r;
}

// Per-process scratch directory with every input fixture the cases need.
const std::string& tmp_dir() {
    static const std::string dir = [] {
        const fs::path d =
            fs::temp_directory_path() / ("bhtool_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        write_matrix_file((d / "f2.mat").string(), fourier(2));
        write_matrix_file((d / "f3.mat").string(), fourier(3));
        write_matrix_file((d / "f4.mat").string(), fourier(4));
        write_matrix_file((d / "f12.mat").string(), fourier(12));
        write_matrix_file((d / "syl.mat").string(), fixtures::sylvester4());
        write_matrix_file((d / "kron33.mat").string(), fixtures::tensor33_expected());
        LogMatrix broken = fourier(3);
        broken.set(0, 0, 1);
        write_matrix_file((d / "broken.mat").string(), broken);
        write_code_file((d / "pair.code").string(), Code(2, 2, {{0, 0}, {0, 1}}));
        std::ofstream(d / "garbage.txt") << "not a matrix at all\n";
        return d.string();
    }();
    return dir;
}

std::string at(const std::string& name) { return tmp_dir() + "/" + name; }

OrderedJson parse(const std::string& text) { return OrderedJson::parse(text); }

OrderedJson parse_without_elapsed(const std::string& text) {
    OrderedJson j = parse(text);
    REQUIRE(j.contains("elapsed_ms"));
    // key order is pinned: elapsed_ms always closes the report
    std::string last;
    for (const auto& item : j.items()) last = item.key();
    CHECK(last == "elapsed_ms");
    j.erase("elapsed_ms");
    return j;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("gen writes parseable matrices") {
    const auto direct = run_tool("gen fourier 5");
    CHECK(direct.exit_code == 0);
    std::stringstream ss(direct.out);
    const LogMatrix m = read_matrix(ss);
    CHECK(m.q() == 5);
    for (int i = 0; i < 5; ++i) CHECK(m.row(i) == fourier(5).row(i));

    const std::string out = at("gen_f3.mat");
    CHECK(run_tool("gen fourier 3 --out " + out).exit_code == 0);
    const LogMatrix f3 = read_matrix_file(out);
    for (int i = 0; i < 3; ++i) CHECK(f3.row(i) == fourier(3).row(i));
}

TEST_CASE("gen kron reproduces the order-9 tensor construction") {
    const std::string out = at("gen_kron33.mat");
    const auto r =
        run_tool("gen kron " + at("f3.mat") + " " + at("f3.mat") + " --out " + out);
    CHECK(r.exit_code == 0);
    const LogMatrix m = read_matrix_file(out);
    const LogMatrix want = fixtures::tensor33_expected();
    REQUIRE(m.n() == 9);
    for (int i = 0; i < 9; ++i) CHECK(m.row(i) == want.row(i));
}

TEST_CASE("gen rejects bad requests") {
    CHECK(run_tool("gen fourier 1").exit_code == 2);
    CHECK(run_tool("gen fourier x").exit_code == 2);
    CHECK(run_tool("gen fourier").exit_code == 2);
    CHECK(run_tool("gen sylvester 4").exit_code == 2);
    CHECK(run_tool("gen kron " + at("f3.mat")).exit_code == 2);
}

TEST_CASE("verify verdicts and exit codes") {
    const auto good = run_tool("verify " + at("f4.mat"));
    CHECK(good.exit_code == 0);
    const auto gj = parse_without_elapsed(good.out);
    CHECK(gj["is_butson"] == true);
    CHECK(gj["failing_pair"].is_null());
    CHECK(gj["n"] == 4);
    CHECK(gj["q"] == 4);

    const auto bad = run_tool("verify " + at("broken.mat"));
    CHECK(bad.exit_code == 1);
    const auto bj = parse(bad.out);
    CHECK(bj["is_butson"] == false);
    CHECK(bj["failing_pair"] == OrderedJson({1, 2}));

    CHECK(run_tool("verify " + at("garbage.txt")).exit_code == 3);
    CHECK(run_tool("verify " + at("missing.mat")).exit_code == 3);
}

TEST_CASE("radius on a matrix file") {
    const auto r = run_tool("radius " + at("f4.mat") + " --scaling standard");
    CHECK(r.exit_code == 0);
    const auto j = parse_without_elapsed(r.out);
    CHECK(j["radius"] == 2);
    CHECK(j["deep_hole"] == OrderedJson({0, 0, 0, 2}));
    CHECK(j["method"] == "exact");
    CHECK(j["scaling"] == "standard");
    CHECK(j["seed"] == 0);
    CHECK(j["workers"] == 1);

    const auto h = run_tool("radius " + at("f4.mat"));
    CHECK(parse(h.out)["radius"] == 4);  // honold is the default scaling
}

TEST_CASE("radius --as disambiguates square code files") {
    // the rows of the order-3 Fourier matrix, written as a 3-word code file,
    // are byte-identical to the matrix file itself
    const std::string rows = at("rows3.txt");
    write_code_file(rows, row_code(fourier(3)));
    const auto as_matrix = run_tool("radius " + rows);  // auto reads it as a matrix
    CHECK(parse(as_matrix.out)["radius"] == 3);
    const auto as_code = run_tool("radius " + rows + " --as code");
    CHECK(parse(as_code.out)["radius"] == 6);
    CHECK(parse(as_code.out)["deep_hole"] == OrderedJson({1, 0, 1}));
}

TEST_CASE("sampled radius is reproducible from the seed") {
    const std::string args = "radius " + at("f4.mat") + " --method sample --samples 60 --seed 9";
    const auto a = run_tool(args);
    const auto b = run_tool(args);
    CHECK(a.exit_code == 0);
    CHECK(parse_without_elapsed(a.out) == parse_without_elapsed(b.out));
    const auto j = parse(a.out);
    CHECK(j["method"] == "sampled");
    CHECK(j["samples"] == 60);
    CHECK(j["seed"] == 9);
    CHECK(j["radius"] <= 4);
}

TEST_CASE("radius budget overrun reports structured failure") {
    const auto r = run_tool("radius " + at("kron33.mat") + " --budget 10");
    CHECK(r.exit_code == 4);
    const auto j = parse(r.out);
    CHECK(j["error"] == "budget-exceeded");
    CHECK(j["message"].is_string());
}

TEST_CASE("bent search through the CLI") {
    const auto sd = run_tool("bent " + at("syl.mat") + " --mode self_dual");
    CHECK(sd.exit_code == 0);
    const auto j = parse_without_elapsed(sd.out);
    REQUIRE(j["found"].size() == 2);
    CHECK(j["found"][0]["vector"] == OrderedJson({0, 0, 0, 1}));
    CHECK(j["found"][0]["class"] == "self_dual");
    CHECK(j["found"][0]["lambda_log"] == 0);
    CHECK(j["mode"] == "self_dual");
    CHECK(j["searched"] == 8);
    CHECK(j["exhaustive"] == true);

    const auto none = run_tool("bent " + at("f2.mat"));
    CHECK(none.exit_code == 0);
    const auto nj = parse(none.out);
    CHECK(nj["found"].empty());
    CHECK(nj["exhaustive"] == true);
    CHECK(nj["searched"] == 2);

    CHECK(run_tool("bent " + at("f12.mat")).exit_code == 4);
    CHECK(run_tool("bent " + at("f3.mat") + " --mode dual").exit_code == 2);
}

TEST_CASE("strength verdict drives the exit code") {
    CHECK(run_tool("strength " + at("kron33.mat") + " --as matrix -s 2").exit_code == 0);
    CHECK(run_tool("strength " + at("kron33.mat") + " --as matrix -s 3").exit_code == 1);
    // default --as is code: {00, 01} has a constant first column
    const auto r = run_tool("strength " + at("pair.code") + " -s 1");
    CHECK(r.exit_code == 1);
    const auto j = parse_without_elapsed(r.out);
    CHECK(j["holds"] == false);
    CHECK(j["code_size"] == 2);
    // the same bytes read as a matrix generate the full BH-code instead
    CHECK(run_tool("strength " + at("pair.code") + " --as matrix -s 1").exit_code == 0);

    CHECK(run_tool("strength " + at("f3.mat") + " --as matrix -s 5").exit_code == 2);
    CHECK(run_tool("strength " + at("f3.mat")).exit_code == 2);  // -s is required
}

TEST_CASE("bounds report through the CLI") {
    const auto r = run_tool("bounds " + at("f4.mat") + " --scaling standard --with-exact");
    CHECK(r.exit_code == 0);
    const auto j = parse_without_elapsed(r.out);
    CHECK(j["lower_bent"] == 2);
    CHECK(j["exact_radius"]["radius"] == 2);
    CHECK_FALSE(j.contains("upper_norse"));
    bool prime_flag = false;
    for (const auto& f : j["flags"]) prime_flag |= (f == "norse-requires-prime");
    CHECK(prime_flag);

    const auto f5 = run_tool("bounds " + at("f3.mat"));
    const auto j5 = parse(f5.out);
    CHECK(j5["upper_norse"] == 4);
    CHECK_FALSE(j5.contains("exact_radius"));
}

TEST_CASE("table1 tsv pins the bound column and the mismatch flags") {
    const auto r = run_tool("table1 --format tsv --samples 30 --seed 1");
    CHECK(r.exit_code == 0);
    std::stringstream lines(r.out);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(lines, line)) rows.push_back(split_tabs(line));
    REQUIRE(rows.size() == 6);
    REQUIRE(rows[0].size() == 12);
    CHECK(rows[0][9] == "upper_norse");

    // upper bound column: 2, 4, 15, 17, 95
    CHECK(rows[1][9] == "2");
    CHECK(rows[2][9] == "4");
    CHECK(rows[3][9] == "15");
    CHECK(rows[4][9] == "17");
    CHECK(rows[5][9] == "95");

    // exact radii under both scalings for the four tractable rows
    CHECK(rows[1][4] == "2");   // (2,4) honold
    CHECK(rows[1][5] == "1");   // (2,4) standard = printed value: no flag
    CHECK(rows[1][11] == "-");
    CHECK(rows[2][4] == "3");
    CHECK(rows[2][5] == "1");
    CHECK(rows[2][11] == "paper-radius-mismatch");
    CHECK(rows[3][4] == "15");
    CHECK(rows[3][5] == "5");
    CHECK(rows[3][11] == "paper-radius-mismatch");
    CHECK(rows[4][4] == "15");
    CHECK(rows[4][5] == "3");
    CHECK(rows[4][11] == "paper-radius-mismatch");

    // (5,25) is out of exhaustive reach: sampled lower bounds instead
    CHECK(rows[5][4] == "-");
    CHECK(rows[5][5] == "-");
    CHECK(rows[5][6] != "-");
    CHECK(rows[5][7] != "-");
    CHECK(rows[5][8] == "-");
    CHECK(rows[5][11] == "exact-skipped-budget");
}

TEST_CASE("table1 json is worker-independent") {
    const auto one = run_tool("table1 --samples 40 --seed 3 --workers 1");
    const auto eight = run_tool("table1 --samples 40 --seed 3 --workers 8");
    CHECK(one.exit_code == 0);
    auto a = parse_without_elapsed(one.out);
    auto b = parse_without_elapsed(eight.out);
    CHECK(a["workers"] == 1);
    CHECK(b["workers"] == 8);
    a.erase("workers");
    b.erase("workers");
    CHECK(a == b);
}

TEST_CASE("usage errors and version") {
    CHECK(run_tool("").exit_code == 2);
    CHECK(run_tool("radiate x.mat").exit_code == 2);
    CHECK(run_tool("radius").exit_code == 2);
    CHECK(run_tool("radius x.mat --frobnicate").exit_code == 2);
    CHECK(run_tool("radius " + at("f3.mat") + " --method guess").exit_code == 2);
    CHECK(run_tool("radius " + at("f3.mat") + " --scaling lee").exit_code == 2);
    CHECK(run_tool("table1 --format xml").exit_code == 2);

    const auto v = run_tool("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("bhtool") != std::string::npos);
}
