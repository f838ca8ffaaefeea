#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "superhowe/cli.hpp"
#include "superhowe/report_io.hpp"

using namespace superhowe;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(SUPERHOWE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("exit code contract") {
    CHECK(run_binary("decompose --n 1 --dmax 2") == 0);
    CHECK(run_binary("decompose --n 0 --dmax 2") == 64);
    CHECK(run_binary("decompose --n 1") == 64);
    CHECK(run_binary("verify bogus") == 64);
    CHECK(run_binary("verify A1 --n 1 --dmax 2") == 0);
    CHECK(run_binary("family delta --n 1 --k 5") == 64);
    CHECK(run_binary("family nosuch --n 1 --k 1") == 64);
    CHECK(run_binary("nosuchcommand") == 64);
    CHECK(run_binary("family omega --n 1 --d 0 --k 0") == 0);
    CHECK(run_binary("enumerate --n 1 --d 2 --pair gl") == 0);
}

TEST_CASE("in-process driver mirrors the binary") {
    CHECK(cli::run({"verify", "--list"}) == 0);
    CHECK(cli::run({"verify", "bogus"}) == 64);
}

TEST_CASE("golden decomposition outputs are byte-stable") {
    const std::string golden_dir = SUPERHOWE_GOLDEN_DIR;
    const std::string tmp_json = "/tmp/superhowe_test_n1_d8.json";
    const std::string tmp_table = "/tmp/superhowe_test_n1_d8.txt";
    REQUIRE(run_binary("decompose --n 1 --dmax 8 --format json --out " + tmp_json) == 0);
    REQUIRE(run_binary("decompose --n 1 --dmax 8 --format table --out " + tmp_table) == 0);
    CHECK(slurp(tmp_json) == slurp(golden_dir + "/decompose_n1_dmax8.json"));
    CHECK(slurp(tmp_table) == slurp(golden_dir + "/decompose_n1_dmax8.txt"));
    std::remove(tmp_json.c_str());
    std::remove(tmp_table.c_str());
}

TEST_CASE("JSON reports round-trip byte-identically") {
    std::vector<DecompositionReport> reports;
    for (int d = 0; d <= 4; ++d) reports.push_back(decompose_harmonic(1, d));
    const std::string text = reports_to_json(reports, 1, 4);
    CHECK(json_roundtrip(text) == text);
}

TEST_CASE("randomized suites honor the seed") {
    auto capture = [](const std::string& args) {
        const std::string cmd = std::string(SUPERHOWE_CLI_PATH) + " " + args + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[512];
        while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
        const int status = pclose(pipe);
        REQUIRE(WEXITSTATUS(status) == 0);
        return out;
    };
    const std::string first = capture("verify PROPS --seed 98765");
    const std::string second = capture("verify PROPS --seed 98765");
    CHECK(first == second);
    CHECK(first.find("PASS") != std::string::npos);
}

TEST_CASE("output does not depend on the thread budget") {
    const std::string one = "/tmp/superhowe_threads1.json";
    const std::string many = "/tmp/superhowe_threads4.json";
    auto run_env = [](const std::string& env, const std::string& out) {
        const std::string cmd = env + " " + SUPERHOWE_CLI_PATH +
                                " decompose --n 2 --dmax 4 --format json --out " + out +
                                " > /dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    REQUIRE(run_env("SUPERHOWE_THREADS=1", one) == 0);
    REQUIRE(run_env("SUPERHOWE_THREADS=4", many) == 0);
    CHECK(slurp(one) == slurp(many));
    std::remove(one.c_str());
    std::remove(many.c_str());
}

TEST_CASE("single-degree and degree-zero runs") {
    CHECK(run_binary("decompose --n 1 --d 4 --format csv") == 0);
    const std::string tmp = "/tmp/superhowe_test_d0.txt";
    REQUIRE(run_binary("decompose --n 1 --dmax 0 --format csv --out " + tmp) == 0);
    const std::string csv = slurp(tmp);
    CHECK(csv.find("0,even,\"0\",\"1/2 -1/2\",1,1,\"1\"") != std::string::npos);
    std::remove(tmp.c_str());
}
