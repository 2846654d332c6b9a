#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(WALLED_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

json parse_json_prefix(const std::string& text) {
    return json::parse(text, nullptr, true, true);
}

}  // namespace

TEST_CASE("classes subcommand") {
    auto res = run_cli("classes --n 4");
    REQUIRE(res.exit_code == 0);
    json out = parse_json_prefix(res.output);
    CHECK(out["schema"] == "walled-classes/1");
    CHECK(out["classes"].size() == 9);
    for (const auto& cls : out["classes"]) CHECK(cls["elements"].size() == 2);
    CHECK(out["fixes_n"].size() == 6);
}

TEST_CASE("irreps subcommand emits the generator matrices") {
    auto res = run_cli("irreps --n 3 --d 4 --generators --alpha 1");
    REQUIRE(res.exit_code == 0);
    json out = parse_json_prefix(res.output);
    CHECK(out["schema"] == "walled-irreps/1");
    CHECK(out["dimension"] == 2);
    json wall = out["matrices"]["(2 3)'"];
    CHECK(wall[0][0] == 0);
    CHECK(wall[1][0] == 1);
    CHECK(wall[1][1] == 4);
}

TEST_CASE("irreps output is byte stable") {
    auto a = run_cli("irreps --n 4 --d 3 --generators");
    auto b = run_cli("irreps --n 4 --d 3 --generators");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("mult subcommand ends with the checksum line") {
    auto res = run_cli("mult --n 4 --d 4");
    REQUIRE(res.exit_code == 0);
    std::string tail = res.output.substr(res.output.rfind("checksum"));
    CHECK(tail == "checksum 256 = 4^4 OK\n");
}

TEST_CASE("gram subcommand reports rank deficiency") {
    auto res = run_cli("gram --n 4 --d 2 --alpha 1,1");
    REQUIRE(res.exit_code == 0);
    json out = parse_json_prefix(res.output);
    CHECK(out["rank"] == 2);
    CHECK_FALSE(out.contains("D"));
    CHECK(out["Q"][0] == json::array({2, -1, 1}));
}

TEST_CASE("verify subcommand prints a pass table") {
    auto res = run_cli("verify --n 3 --d 3 --exhaustive");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("PASS") != std::string::npos);
    CHECK(res.output.find("FAIL") == std::string::npos);
    CHECK(res.output.find("verification OK") != std::string::npos);
}

TEST_CASE("ppt-region writes a CSV file") {
    std::string path = "cli_region_test.csv";
    auto res = run_cli("ppt-region --d 3 --grid 10 --out " + path);
    REQUIRE(res.exit_code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    std::string header;
    std::getline(file, header);
    CHECK(header == "a_lambda1,a_lambda2,feasible,min_eig");
    int rows = 0;
    for (std::string line; std::getline(file, line);) ++rows;
    CHECK(rows == 66);  // (grid+1)(grid+2)/2 simplex points
    std::remove(path.c_str());
}

TEST_CASE("config file provides defaults and flags win") {
    std::string path = "cli_config_test.ini";
    {
        std::ofstream cfg(path);
        cfg << "n=4\nd=4\n";
    }
    auto res = run_cli("mult --config " + path);
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("checksum 256 = 4^4 OK") != std::string::npos);

    auto overridden = run_cli("mult --config " + path + " --d 2");
    REQUIRE(overridden.exit_code == 0);
    CHECK(overridden.output.find("checksum 16 = 2^4 OK") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run_cli("bogus-subcommand").exit_code == 64);
    CHECK(run_cli("irreps --n 4").exit_code == 64);          // missing required flag
    CHECK(run_cli("irreps --n 4 --d 3 --alpha 3").exit_code == 1);  // wrong weight
    CHECK(run_cli("ppt-region --d 3 --spectrum nonsense").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}
