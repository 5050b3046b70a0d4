#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tmp = "cli_out_" + std::to_string(counter++) + ".tmp";
    const std::string cmd = std::string(HERMICODE_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    std::ostringstream os;
    os << in.rdbuf();
    res.output = os.str();
    std::remove(tmp.c_str());
    return res;
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("points command") {
    const CliResult res = run_cli("points --q 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("index,x,y") != std::string::npos);
    CHECK(res.output.find("modulus=[") != std::string::npos);
    CHECK(count_lines(res.output) == 2 + 8);  // header comment + column row + q^3 points

    const CliResult big = run_cli("points --q 8");
    CHECK(count_lines(big.output) == 2 + 512);
}

TEST_CASE("code-params command") {
    const CliResult res = run_cli("code-params --q 2 --s 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"n\": 8") != std::string::npos);
    CHECK(res.output.find("\"k\": 4") != std::string::npos);
    CHECK(res.output.find("\"d\": 4") != std::string::npos);

    // s >= n: k is the evaluation rank and d is omitted
    const CliResult rank = run_cli("code-params --q 4 --s 70");
    CHECK(rank.exit_code == 0);
    CHECK(rank.output.find("\"k\": 62") != std::string::npos);
    CHECK(rank.output.find("\"d\":") == std::string::npos);

    const CliResult dist = run_cli("code-params --q 2 --s 3 --true-distance");
    CHECK(dist.exit_code == 0);
    CHECK(dist.output.find("\"d_true\": 5") != std::string::npos);

    // budget refusal surfaces as a clean error
    const CliResult refuse = run_cli("code-params --q 4 --s 16 --true-distance --budget 1000");
    CHECK(refuse.exit_code == 2);
    CHECK(refuse.output.find("budget") != std::string::npos);
}

TEST_CASE("subfield-dim command") {
    const CliResult res = run_cli("subfield-dim --q 4 --r 2 --s 32");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "s,dim_subcode,dim_parent\n32,5,27\n");

    const CliResult sweep = run_cli("subfield-dim --q 4 --r 2 --s-from 30 --s-to 33");
    CHECK(sweep.output.find("30,1,25") != std::string::npos);
    CHECK(sweep.output.find("32,5,27") != std::string::npos);

    const CliResult json = run_cli("subfield-dim --q 4 --r 2 --s 32 --format json");
    CHECK(json.output.find("\"dim_subcode\": 5") != std::string::npos);

    // byte-identical reruns
    const CliResult again = run_cli("subfield-dim --q 4 --r 2 --s 32");
    CHECK(res.output == again.output);
}

TEST_CASE("invalid parameter pairs are rejected") {
    CHECK(run_cli("subfield-dim --q 6 --r 2 --s 1").exit_code == 2);
    CHECK(run_cli("subfield-dim --q 8 --r 4 --s 1").exit_code == 2);  // 8 is not a power of 4
    CHECK(run_cli("points --q 12").exit_code == 2);
}

TEST_CASE("verify theorem, delsarte and duality") {
    const CliResult thm = run_cli("verify --which theorem --q 4 --r 2");
    CHECK(thm.exit_code == 0);
    CHECK(thm.output.find("PASS") != std::string::npos);

    const CliResult del = run_cli("verify --which delsarte --q 2 --r 2");
    CHECK(del.exit_code == 0);
    CHECK(del.output.find("9/9 hold") != std::string::npos);

    const CliResult dual = run_cli("verify --which duality --q 2");
    CHECK(dual.exit_code == 0);
    CHECK(dual.output.find("self-dual at s=4: PASS") != std::string::npos);
}

TEST_CASE("verify table1") {
    const CliResult res = run_cli("verify --which table1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("70/70 rows match: PASS") != std::string::npos);
}

TEST_CASE("matrix export") {
    const CliResult res = run_cli("matrix --q 2 --s 2 --out cli_mat_test");
    CHECK(res.exit_code == 0);
    std::ifstream txt("cli_mat_test.txt");
    REQUIRE(txt.good());
    std::string line;
    size_t rows = 0, cols = 0;
    while (std::getline(txt, line)) {
        ++rows;
        if (rows == 1) cols = 1 + std::count(line.begin(), line.end(), ' ');
    }
    CHECK(rows == 2);  // monomials of pole order <= 2 at q = 2
    CHECK(cols == 8);
    std::ifstream json("cli_mat_test.json");
    std::ostringstream os;
    os << json.rdbuf();
    CHECK(os.str().find("\"modulus\"") != std::string::npos);
    std::remove("cli_mat_test.txt");
    std::remove("cli_mat_test.json");
}
