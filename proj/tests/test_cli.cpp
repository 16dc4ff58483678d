#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(SEPVAR_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    std::array<char, 4096> buf{};
    while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), k);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(SEPVAR_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("gb with elimination") {
    const std::string in = temp_file("cli_ideal.txt", "ring: y0,y1,x0,x1,t\ny0 - x0\ny1 - x1 - t*x0\n");
    const std::string out = std::string(SEPVAR_TMP) + "/cli_basis.txt";
    const Run r = cli("gb " + in + " --elim t --output " + out);
    CHECK(r.code == 0);
    std::ifstream f(out);
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text.find("y0 - x0") != std::string::npos);
    CHECK(text.find("ring: y0,y1,x0,x1") == 0);
}

TEST_CASE("gb parse error names the line") {
    const std::string in = temp_file("cli_bad.txt", "ring: a,b\na + b\na + * b\n");
    const Run r = cli("gb " + in);
    CHECK(r.code == 2);
    CHECK(r.out.find("line 3") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(cli("basic 0").code == 2);
    CHECK(cli("basic 9").code == 2);
    CHECK(cli("--timeout 0 basic 3").code == 2);
    CHECK(cli("case df7").code == 2);
    CHECK(cli("").code == 2);
    const Run shape = cli("curve 2 --a 0,1,0 --b 0,1,0");
    CHECK(shape.code == 2);
    CHECK(shape.out.find("b_1 = (-1)^1 a_1") != std::string::npos);
}

TEST_CASE("basic reports") {
    const Run r = cli("--format json basic 3");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["dimensions"] == nlohmann::json::array({5}));
    CHECK(j["seed"] == 1);
    CHECK(j.contains("timings"));
    const auto quiet = nlohmann::json::parse(cli("--format json --no-timings basic 2").out);
    CHECK_FALSE(quiet.contains("timings"));
    CHECK(quiet["result"]["containments"].size() == 2);
}

TEST_CASE("lemma, curve and case commands") {
    const Run lemma = cli("--format json lemma --max-m 6");
    CHECK(lemma.code == 0);
    const auto lj = nlohmann::json::parse(lemma.out);
    REQUIRE(lj["result"]["rows"].size() == 6);
    CHECK(lj["result"]["rows"][0]["value"] == "2");
    CHECK(lj["result"]["rows"][1]["value"] == "0");
    for (const auto& row : lj["result"]["rows"]) CHECK(row["holds"] == true);

    const Run curve = cli("curve 2 --a 0,1,0 --b 0,-1,0");
    CHECK(curve.code == 0);
    CHECK(curve.out.find("x(u) = (-2*u, 1, 0)") != std::string::npos);
    CHECK(cli("curve 3 --a 0,0,1,2 --b 0,0,5,7").code == 0);

    const Run df5 = cli("--format json case df5");
    CHECK(df5.code == 0);
    CHECK(nlohmann::json::parse(df5.out)["result"]["dimensions"] == nlohmann::json::array({6, 6}));
    const Run f6 = cli("--format json case f6");
    CHECK(f6.code == 0);
    CHECK(nlohmann::json::parse(f6.out)["result"]["dimensions"] == nlohmann::json::array({7, 8, 7}));
}
