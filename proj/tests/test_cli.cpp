// End-to-end checks of the command line tool: exit codes, output schemas,
// golden bytes, and determinism. The binary path and data directories come
// in as compile definitions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& stem) {
    return std::filesystem::temp_directory_path() /
           (stem + "_" + std::to_string(::getpid()) + ".txt");
}

RunResult run_cli(const std::string& args) {
    std::filesystem::path ob = scratch("cli_out"), eb = scratch("cli_err");
    std::string cmd = std::string(EQUIHOM_CLI_PATH) + " " + args + " >" + ob.string() +
                      " 2>" + eb.string();
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(ob);
    r.err = slurp(eb);
    std::filesystem::remove(ob);
    std::filesystem::remove(eb);
    return r;
}

std::string test_data(const std::string& name) {
    return std::string(EQUIHOM_TEST_DATA_DIR) + "/" + name;
}

std::string shipped_data(const std::string& name) {
    return std::string(EQUIHOM_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("verify passes the shipped examples") {
    RunResult r = run_cli("verify --example z3");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["results"].is_array());
    for (const auto& e : j["results"]) {
        CHECK(e["pass"] == true);
        CHECK(e["checked"].get<long long>() > 0);
    }
    RunResult rf = run_cli("verify --input " + shipped_data("z2.json"));
    REQUIRE(rf.code == 0);
    json jf = json::parse(rf.out);
    CHECK(jf["results"].size() == 2);  // inlined algebra plus the module
}

TEST_CASE("verify rejects a non-associative table with exit 1 and a witness") {
    RunResult r = run_cli("verify --input " + test_data("magma.json"));
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["pass"] == false);
    REQUIRE(j["results"].size() == 1);
    const auto& e = j["results"][0];
    CHECK(e["structure"] == "algebra");
    CHECK(e["pass"] == false);
    CHECK(e["witness"].size() >= 3);
    CHECK_FALSE(e["residual"].empty());
    // CSV form flags the same failure.
    RunResult rc = run_cli("verify --input " + test_data("magma.json") + " --format csv");
    CHECK(rc.code == 1);
    CHECK(rc.out == "structure,pass,checked\nalgebra,0," +
                        std::to_string(e["checked"].get<long long>()) + "\n");
}

TEST_CASE("glued invariant of the order-2 group over the default window") {
    RunResult r = run_cli("tate --example z2 --kmax 6 --lmax 6");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "tate");
    CHECK(j["input"]["example"] == "z2");
    CHECK(j["d2"] == "ok");
    CHECK(j["pass"] == true);
    CHECK(j["trusted"]["lo"] == 2);
    CHECK(j["trusted"]["hi"] == 5);
    CHECK(j["window"]["lo"] == 2);
    CHECK(j["window"]["hi"] == 5);
    REQUIRE(j["betti"].size() == 4);
    for (const auto& row : j["betti"]) CHECK(row["dim"] == 1);
    // Timing goes to stderr, never into the report.
    CHECK(r.err.find("elapsed_ms=") != std::string::npos);
    CHECK(r.out.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("output bytes are deterministic") {
    std::string args = "tate --example z2 --kmax 4 --lmax 4";
    RunResult a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("golden bytes: tree face counts as json") {
    RunResult r = run_cli("trees --n 4");
    CHECK(r.code == 0);
    CHECK(r.out == R"({
  "command": "trees",
  "n": 4,
  "total": 11,
  "trivalent": 5,
  "walls": 5,
  "chambers": 5,
  "by_codim": [
    {
      "codim": 0,
      "count": 5
    },
    {
      "codim": 1,
      "count": 5
    },
    {
      "codim": 2,
      "count": 1
    }
  ]
}
)");
    RunResult rc = run_cli("trees --n 4 --format csv");
    CHECK(rc.code == 0);
    CHECK(rc.out == "codim,count\n0,5\n1,5\n2,1\n");
}

TEST_CASE("golden bytes: alternating invariant of the rank-one exterior algebra") {
    RunResult r = run_cli("borel --example exterior1 --kmax 6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "degree,dimension,trusted\n0,1,1\n1,0,1\n2,1,1\n3,0,1\n4,1,1\n5,0,1\n");
}

TEST_CASE("co-side invariant over an explicit window") {
    RunResult r = run_cli("coborel --example z2 --lmax 6 --degrees -3..0 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "degree,dimension,trusted\n-3,1,1\n-2,1,1\n-1,1,1\n0,1,1\n");
}

TEST_CASE("twisted invariant reports the window below zero") {
    RunResult r = run_cli("twisted-borel --example z2 --kmax 2 --lmax 4");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["betti"].size() == 3);
    CHECK(j["betti"][0]["degree"] == -1);
    CHECK(j["betti"][0]["dim"] == 0);
    CHECK(j["betti"][1]["dim"] == 1);
    CHECK(j["betti"][2]["dim"] == 1);
}

TEST_CASE("exactness report runs clean on the glued triangle") {
    RunResult r = run_cli("les-check --example z2 --kmax 3 --lmax 6 --format csv");
    CHECK(r.code == 0);
    std::istringstream ss(r.out);
    std::string line;
    REQUIRE(std::getline(ss, line));
    CHECK(line == "degree,node,checked,exact");
    int rows = 0;
    while (std::getline(ss, line)) {
        ++rows;
        CHECK(line.substr(line.size() - 4) == ",1,1");
    }
    CHECK(rows == 12);
    // JSON carries the rank bookkeeping for checked nodes.
    RunResult rj = run_cli("les-check --example z2 --kmax 3 --lmax 6");
    json j = json::parse(rj.out);
    CHECK(j["pass"] == true);
    for (const auto& n : j["nodes"]) {
        REQUIRE(n["checked"] == true);
        CHECK(n["exact"] == true);
        CHECK(n.contains("rank_in"));
        CHECK(n.contains("dim_mid"));
    }
}

TEST_CASE("dualize emits loadable documents") {
    std::filesystem::path tmp = scratch("dual_doc");
    RunResult r = run_cli("dualize --example z2 --out " + tmp.string());
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());  // --out redirects the report
    json doc = json::parse(slurp(tmp));
    CHECK(doc["kind"] == "right_comodule");
    RunResult rv = run_cli("verify --input " + tmp.string());
    CHECK(rv.code == 0);
    std::filesystem::remove(tmp);
    // A plain algebra document dualizes to a coalgebra document.
    RunResult ra = run_cli("dualize --input " + test_data("magma.json"));
    REQUIRE(ra.code == 0);
    CHECK(json::parse(ra.out)["kind"] == "coalgebra");
}

TEST_CASE("--out writes the report to a file") {
    std::filesystem::path tmp = scratch("borel_out");
    RunResult r = run_cli("borel --example z2 --kmax 4 --out " + tmp.string());
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    json j = json::parse(slurp(tmp));
    CHECK(j["command"] == "borel");
    CHECK(j["pass"] == true);
    std::filesystem::remove(tmp);
}

TEST_CASE("input errors exit with 2 and an error line") {
    std::vector<std::string> bad_calls = {
        "borel --example nope --kmax 4",
        "borel --example z2 --kmax 4 --degrees 0..9",  // outside trusted
        "borel --example z2",                          // missing required cap
        "verify --input " + test_data("broken.json"),
        "verify --input " + test_data("badref.json"),
        "verify --input /nonexistent/file.json",
        "trees --n 1",
        "trees --n 11",
        "borel --example z2 --kmax 4 --degrees oops",
        "borel --example z2 --kmax 4 --format xml",
        "verify",                                      // neither example nor input
        "verify --example z2 --input " + test_data("magma.json"),
    };
    for (const std::string& args : bad_calls) {
        RunResult r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(r.out.find("betti") == std::string::npos);
    }
}

TEST_CASE("square-zero gate can be toggled") {
    RunResult on = run_cli("borel --example z2 --kmax 4 --check-d2");
    REQUIRE(on.code == 0);
    CHECK(json::parse(on.out)["d2"] == "ok");
    RunResult off = run_cli("borel --example z2 --kmax 4 --no-check-d2");
    REQUIRE(off.code == 0);
    CHECK_FALSE(json::parse(off.out).contains("d2"));
}
