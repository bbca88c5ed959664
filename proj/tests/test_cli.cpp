// End-to-end tests against the built CLI binary (path injected by CMake).

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
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

CliResult run_cli(const std::string& args)
{
    const std::string command = std::string(FAULHABER_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return {};
    CliResult result;
    char buffer[4096];
    while (std::fgets(buffer, sizeof buffer, pipe))
        result.output += buffer;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("powersum prints the expected polynomials")
{
    const auto p2 = run_cli("powersum --p 2");
    CHECK(p2.exit_code == 0);
    CHECK(p2.output == "1/3*n^3 + 1/2*n^2 + 1/6*n\n");

    const auto p1 = run_cli("powersum --p 1 --method bernoulli-poly");
    CHECK(p1.exit_code == 0);
    CHECK(p1.output == "1/2*n^2 + 1/2*n\n");

    const auto all = run_cli("powersum --p 10 --method all");
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("AGREE") != std::string::npos);
}

TEST_CASE("powersum rejects invalid p")
{
    CHECK(run_cli("powersum --p 0").exit_code != 0);
}

TEST_CASE("bernoulli csv output")
{
    const auto four = run_cli("bernoulli --max-m 4 --format csv");
    CHECK(four.exit_code == 0);
    CHECK(four.output == "0,1,1\n1,-1,2\n2,1,6\n3,0,1\n4,-1,30\n");

    const auto zero = run_cli("bernoulli --max-m 0 --format csv");
    CHECK(zero.output == "0,1,1\n");

    const auto twelve = run_cli("bernoulli --max-m 12 --format csv");
    CHECK(twelve.output.find("12,-691,2730") != std::string::npos);
}

TEST_CASE("verify single identity")
{
    const auto symmetry = run_cli("verify --identity symmetry --range 1..10");
    CHECK(symmetry.exit_code == 0);
    CHECK(symmetry.output.find("10 checked, 0 failures") != std::string::npos);

    const auto json_run = run_cli("verify --identity eq-3 --range 0..15 --format json");
    CHECK(json_run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_run.output);
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["identity"] == "eq-3");
    CHECK(parsed[0]["checked"] == 16);
    CHECK(parsed[0]["failures"].empty());
}

TEST_CASE("verify all identities at default ranges")
{
    const auto all = run_cli("verify --format csv");
    CHECK(all.exit_code == 0);
    std::istringstream lines(all.output);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.ends_with(",0")); // zero failures everywhere
    }
    CHECK(rows == 7);
}

TEST_CASE("a perturbed Bernoulli value makes verification fail")
{
    const auto broken = run_cli("verify --identity theorem-3-4 --range 1..12 --perturb-b 4");
    CHECK(broken.exit_code == 1);
    CHECK(broken.output.find("FAIL") != std::string::npos);

    const auto fine = run_cli("verify --identity theorem-3-4 --range 1..12");
    CHECK(fine.exit_code == 0);
}

TEST_CASE("unknown identity is a usage error")
{
    CHECK(run_cli("verify --identity nonsense").exit_code != 0);
}

TEST_CASE("roots report for p = 3")
{
    const auto roots = run_cli("roots --p 3 --format json");
    CHECK(roots.exit_code == 0);
    const auto parsed = nlohmann::json::parse(roots.output);
    CHECK(parsed["p"] == 3);
    CHECK(parsed["degree"] == 4);
    CHECK(parsed["distinct_real_roots"] == 2);
    REQUIRE(parsed["rational_roots"].size() == 2);
    CHECK(parsed["rational_roots"][0]["value"] == "-1");
    CHECK(parsed["rational_roots"][0]["multiplicity"] == 2);
    CHECK(parsed["rational_roots"][1]["value"] == "0");
    CHECK(parsed["rational_roots"][1]["multiplicity"] == 2);
    CHECK(parsed["complex_roots"].empty());
    CHECK(parsed["precision_bits"] == 256);
}

TEST_CASE("roots csv summary over a range")
{
    const auto csv = run_cli("roots --range 1..4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == "1,2,2,2,no complex residual\n"
                        "2,3,3,3,no complex residual\n"
                        "3,4,2,2,no complex residual\n"
                        "4,5,5,3,2 complex\n");

    const auto sweep = run_cli("roots --range 1..20 --format csv");
    CHECK(sweep.exit_code == 0);
    std::istringstream lines(sweep.output);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 20);
}

TEST_CASE("gessel range must start at zero")
{
    CHECK(run_cli("verify --identity gessel --range 1..5").exit_code == 2);
    CHECK(run_cli("verify --identity gessel --range 0..5").exit_code == 0);
}

TEST_CASE("table command emits exact partial sums")
{
    const auto squares = run_cli("table --p 2 --max-n 4 --format csv");
    CHECK(squares.exit_code == 0);
    CHECK(squares.output == "1,1\n2,5\n3,14\n4,30\n");

    const auto triangles = run_cli("table --p 1 --max-n 3 --format csv");
    CHECK(triangles.output == "1,1\n2,3\n3,6\n");

    const auto cubes = run_cli("table --p 3 --max-n 3 --format csv");
    CHECK(cubes.output == "1,1\n2,9\n3,36\n");
}

TEST_CASE("identical configuration produces byte-identical output")
{
    const auto first = run_cli("roots --p 5 --format json");
    const auto second = run_cli("roots --p 5 --format json");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const auto b1 = run_cli("bernoulli --max-m 30 --format json");
    const auto b2 = run_cli("bernoulli --max-m 30 --format json");
    CHECK(b1.output == b2.output);
}

TEST_CASE("output is written to --out")
{
    const std::string path = "cli_test_output.csv";
    std::remove(path.c_str());
    const auto run = run_cli("bernoulli --max-m 2 --format csv --out " + path);
    CHECK(run.exit_code == 0);
    CHECK(run.output.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == "0,1,1\n1,-1,2\n2,1,6\n");
    std::remove(path.c_str());
}
