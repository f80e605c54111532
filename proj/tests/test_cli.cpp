#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ellsurf/family.hpp"
#include "ellsurf/gaussmanin.hpp"

#include <json.hpp>

using namespace ellsurf;

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ELLSURF_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string family(const std::string& name) {
    return std::string(ELLSURF_FAMILY_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("analyze legendre") {
    auto r = run_cli("analyze " + family("legendre.family"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("I2*") != std::string::npos);
    CHECK(r.output.find("euler_number: 12") != std::string::npos);
    CHECK(r.output.find("rank_bound: 0") != std::string::npos);
    CHECK(r.output.find("j_degree: 6") != std::string::npos);
}

TEST_CASE("isotriviality gate exits with code 2") {
    auto r = run_cli("analyze " + family("isotrivial.family"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("isotrivial") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2 and carry line/column") {
    std::string path = "/tmp/ellsurf-bad.family";
    std::ofstream(path) << "variable = t\na4 = t +\n";
    auto r = run_cli("analyze " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
}

TEST_CASE("sections are checked against the curve") {
    std::string path = "/tmp/ellsurf-offcurve.family";
    std::ofstream(path) << "a4 = t\na6 = 1\nsection = (1, 1)\n";
    auto r = run_cli("manin " + path);
    CHECK(r.exit_code == 2);
}

TEST_CASE("manin on the rank-1 family") {
    auto r = run_cli("manin " + family("rank1.family"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("parabolic: true") != std::string::npos);
    CHECK(r.output.find("exact: false") != std::string::npos);
}

TEST_CASE("search exhaustion exits with code 4") {
    auto r = run_cli("idr " + family("k3.family") + " --search-bound 2");
    CHECK(r.exit_code == 4);
}

TEST_CASE("compare reports the verdict") {
    auto r = run_cli("compare " + family("legendre.family") + " " + family("level3.family"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("compatible: false") != std::string::npos);
    auto r2 = run_cli("compare " + family("legendre.family") + " " + family("legendre.family"));
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("compatible: true") != std::string::npos);
}

TEST_CASE("machine output is byte-identical across runs") {
    for (const char* invocation :
         {"analyze legendre.family", "picard-fuchs rank1.family", "idr rank1.family",
          "monodromy legendre.family"}) {
        std::istringstream iss(invocation);
        std::string cmd, fam;
        iss >> cmd >> fam;
        auto a = run_cli(cmd + " " + family(fam) + " --json /tmp/ellsurf-a.json");
        auto b = run_cli(cmd + " " + family(fam) + " --json /tmp/ellsurf-b.json");
        REQUIRE(a.exit_code == 0);
        REQUIRE(b.exit_code == 0);
        CHECK(a.output == b.output);
        std::string ja = slurp("/tmp/ellsurf-a.json");
        CHECK(!ja.empty());
        CHECK(ja == slurp("/tmp/ellsurf-b.json"));
    }
}

TEST_CASE("exact report values re-parse losslessly") {
    auto r = run_cli("picard-fuchs " + family("legendre.family") + " --json /tmp/ellsurf-pf.json");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(slurp("/tmp/ellsurf-pf.json"));
    CHECK(doc["schema"] == "ellsurf-report/1");
    std::string var = doc["variable"];
    FamilySpec fam = parse_family(slurp(family("legendre.family")));
    DiffOp2 op = picard_fuchs(fam.model);
    CHECK(parse_ratfunc(doc["p"].get<std::string>(), var) == op.p);
    CHECK(parse_ratfunc(doc["q"].get<std::string>(), var) == op.q);
}

TEST_CASE("unknown command fails cleanly") {
    auto r = run_cli("frobnicate " + family("legendre.family"));
    CHECK(r.exit_code != 0);
}
