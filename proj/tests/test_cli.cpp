#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef LINLAY_CLI_PATH
#define LINLAY_CLI_PATH "./linlay"
#endif

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(LINLAY_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}

std::string capture(const std::string& args) {
    std::string cmd = std::string(LINLAY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    pclose(pipe);
    return out;
}

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("generate then verify round trips with exit 0") {
    std::string file = tmp_path("k28.linlay");
    CHECK(run("generate --family kn-rique --n 28 --out " + file) == 0);
    CHECK(run("verify " + file) == 0);
    std::remove(file.c_str());
}

TEST_CASE("verify rejects a layout with an injected crossing") {
    std::string file = tmp_path("bad.linlay");
    {
        std::ofstream out(file);
        out << "linlay 1 deque 4 1\norder: 0 1 2 3\npage 0:\n0 2 hh\n1 3 hh\n";
    }
    CHECK(run("verify " + file) == 1);
    std::string report = capture("verify " + file + " || true");
    CHECK(report.find("(0,2)") != std::string::npos);
    CHECK(report.find("(1,3)") != std::string::npos);
    CHECK(report.find("page 0") != std::string::npos);
    std::remove(file.c_str());
}

TEST_CASE("generate reports unsupported sizes as usage errors") {
    CHECK(run("generate --family kn-rique --n 5") == 2);
    CHECK(run("generate --family knn-deque --n 6") == 2);
}

TEST_CASE("solve exit codes distinguish sat and unsat") {
    CHECK(run("solve --kn 4 --kind deque --pages 1") == 0);
    CHECK(run("solve --kn 5 --kind deque --pages 1") == 1);
}

TEST_CASE("solve --min finds the deque number of K_6 and logs records") {
    std::string witness = tmp_path("k6.linlay");
    std::string log = tmp_path("k6.jsonl");
    std::remove(log.c_str());
    CHECK(run("solve --kn 6 --kind deque --min --max-pages 4 --witness " + witness +
              " --log " + log) == 0);
    CHECK(run("verify " + witness) == 0);
    std::ifstream in(log);
    REQUIRE(in.good());
    std::string line;
    int records = 0;
    bool sat_seen = false;
    while (std::getline(in, line)) {
        ++records;
        if (line.find("\"sat\"") != std::string::npos) sat_seen = true;
        CHECK(line.find("\"seconds\"") != std::string::npos);
    }
    CHECK(records >= 1);
    CHECK(sat_seen);
    std::remove(witness.c_str());
    std::remove(log.c_str());
}

TEST_CASE("bounds prints a JSON report") {
    std::string out = capture("bounds --family kn --kind deque --n 8");
    CHECK(out.find("\"lower_bound_pages\": 2") != std::string::npos);
    CHECK(out.find("\"identity_checked\": true") != std::string::npos);
}

TEST_CASE("exact prints the page number of tiny graphs") {
    std::string out = capture("exact --kn 5 --kind deque");
    CHECK(out.find("\"pages\": 2") != std::string::npos);
    CHECK(run("exact --kn 9 --kind deque") == 2);  // above the documented cap
}

TEST_CASE("render emits well-formed-looking SVG for both modes") {
    std::string file = tmp_path("k10.linlay");
    REQUIRE(run("generate --family kn-deque --n 10 --out " + file) == 0);
    std::string grid = capture("render " + file + " --mode grid");
    CHECK(grid.find("<svg") != std::string::npos);
    CHECK(grid.find("</svg>") != std::string::npos);
    std::string arcs = capture("render " + file + " --mode arcs");
    CHECK(arcs.find("<path") != std::string::npos);
    std::remove(file.c_str());
}

TEST_CASE("solve accepts arbitrary edge lists") {
    std::string file = tmp_path("edges.txt");
    {
        std::ofstream out(file);
        out << "0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n";  // K4
    }
    CHECK(run("solve --edges " + file + " --kind stack --pages 2") == 0);
    CHECK(run("solve --edges " + file + " --kind stack --pages 1") == 1);
    std::remove(file.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("solve --kn 4 --kind deque") == 2);       // neither --pages nor --min
    CHECK(run("generate --family nope --n 5") == 2);    // unknown family
    CHECK(run("frobnicate") == 2);                      // unknown subcommand
}
