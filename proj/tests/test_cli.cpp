#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "splintkit/json_io.hpp"

using namespace splintkit;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " '" SPLINTKIT_CLI "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("splintkit_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("roots")
{
    const Run text = run("roots 'A(1,1)' --format text");
    CHECK(text.code == 0);
    std::size_t even = 0, odd = 0, lines = 0;
    std::istringstream is(text.out);
    for (std::string line; std::getline(is, line);) {
        if (line.empty() || line[0] == '#')
            continue;
        ++lines;
        even += line.find(" even") != std::string::npos;
        odd += line.find(" odd") != std::string::npos;
    }
    CHECK(lines == 6);
    CHECK(even == 2);
    CHECK(odd == 4);

    const Run json = run("roots 'F(4)' --format json");
    CHECK(json.code == 0);
    CHECK(Json::parse(json.out).at("roots").size() == 18);
    CHECK(run("roots 'X(1)'").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("roots 'A(1,1)' --format yaml").code == 2);
}

TEST_CASE("embed")
{
    const Run none = run("embed --from 'C(3)' --to 'B(4,2)'");
    CHECK(none.code == 0);
    CHECK(Json::parse(none.out).empty());
    CHECK(Json::parse(run("embed --from 'A(0,0)' --to 'A(1,1)'").out).size() == 4);
    CHECK(Json::parse(run("embed --from 'D(2,1)' --to 'F(4)' --max 1").out).size() == 1);

    const std::string file = temp_file("a10.json", to_json(build_from_spec("A(1,0)")).dump());
    const Run from_file = run("embed --from '" + file + "' --to 'A(1,1)' --metric-only");
    CHECK(from_file.code == 0);
    for (const auto& m : Json::parse(from_file.out))
        CHECK(m.at("metric") == "metric");
}

TEST_CASE("verify")
{
    const std::string good = temp_file("d21.json", R"J({
      "part1": [{"eps":["1","-1"],"delta":["0"]}, {"eps":["-1","0"],"delta":["1"]}, {"eps":["0","-1"],"delta":["1"]}],
      "type1": "A(1,0)",
      "part2": [{"eps":["0","0"],"delta":["2"]}, {"eps":["1","1"],"delta":["0"]},
                {"eps":["1","0"],"delta":["1"]}, {"eps":["0","1"],"delta":["1"]}],
      "type2": "2A_1+2A(0,0)"})J");
    const Run ok = run("verify --system 'D(2,1)' --splint '" + good + "'");
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out).at("verdict") == "valid");

    const std::string moved = temp_file("d21_bad.json", R"J({
      "part1": [{"eps":["1","-1"],"delta":["0"]}, {"eps":["-1","0"],"delta":["1"]}, {"eps":["0","-1"],"delta":["1"]},
                {"eps":["1","0"],"delta":["1"]}],
      "type1": "A(1,0)",
      "part2": [{"eps":["0","0"],"delta":["2"]}, {"eps":["1","1"],"delta":["0"]}, {"eps":["0","1"],"delta":["1"]}],
      "type2": "2A_1+2A(0,0)"})J");
    const Run bad = run("verify --system 'D(2,1)' --splint '" + moved + "'");
    CHECK(bad.code == 1);
    CHECK(Json::parse(bad.out).at("verdict").get<std::string>().rfind("invalid: ", 0) == 0);

    const std::string junk = temp_file("junk.json", R"J({"part1":[{"eps":["5","0"],"delta":["0"]}],"type1":"A_1",
                                                       "part2":[],"type2":"A_1"})J");
    CHECK(run("verify --system 'D(2,1)' --splint '" + junk + "'").code == 2);
    CHECK(run("verify --system 'B(1,1)' --splint '" + good + "'").code == 2);
    CHECK(run("verify --system 'D(2,1)' --splint /nonexistent.json").code == 2);

    const std::string fixture = temp_file("vi1.json", run("fixtures check VI.1").out);
    CHECK(run("verify --system 'D(2,1)' --splint '" + fixture + "'").code == 0);
}

TEST_CASE("enumerate")
{
    const Run a = run("enumerate --system 'A(1,1)'");
    CHECK(a.code == 0);
    CHECK(Json::parse(a.out).size() == 13);
    const Run b = run("enumerate --system 'B(1,2)' --jobs 1");
    const Run c = run("enumerate --system 'B(1,2)' --jobs 4");
    CHECK(b.code == 0);
    CHECK(b.out == c.out);
    CHECK(run("enumerate --system 'B(1,2)' --jobs 1").out == b.out);
    CHECK(run("enumerate --system 'A(1,1)' --dedup none").code == 0);
    CHECK(run("enumerate --system 'A(1,1)' --rank-rule nope").code == 2);
    CHECK(run("enumerate --system 'A(4,4)'").code == 3);
    CHECK(run("enumerate --system 'A(1,1)'", "SPLINTKIT_CAPS=roots=5").code == 3);
    CHECK(run("enumerate --system 'B(0,2)'", "SPLINTKIT_CAPS=weyl=4").code == 3);
    CHECK(run("enumerate --system 'A(1,1)'", "SPLINTKIT_CAPS=speed=9").code == 2);
}

TEST_CASE("report")
{
    const Run c = run("report --tables --filter C");
    CHECK(c.code == 0);
    CHECK(c.out.find("fixtures: 8 pass, 0 expected discrepancies, 0 fail") != std::string::npos);
    const Run g = run("report --tables --filter G");
    CHECK(g.code == 0);
    CHECK(g.out.find("fixtures: 2 pass") != std::string::npos);
    const std::string out = (std::filesystem::temp_directory_path() / "splintkit_report.json").string();
    const Run all = run("report --tables --json '" + out + "'");
    CHECK(all.code == 0);
    const Json j = read_json_file(out);
    CHECK(j.at("counts").at("fail") == 0);
    CHECK(j.at("counts").at("expected") == 8);
    for (const auto& row : j.at("rows"))
        for (const auto& f : row.at("fixtures"))
            if (f.at("status") == "expected")
                CHECK(f.contains("whitelist"));
    CHECK(run("report --tables").out == all.out);
    CHECK(run("report --tables --filter Z").code == 2);

    const std::string empty = temp_file("manifest.json", R"J({"expected_discrepancies":{}})J");
    CHECK(run("report --tables --manifest '" + empty + "'").code == 1);
}

TEST_CASE("fixtures")
{
    CHECK(run("fixtures check III.7.3x3").code == 0);
    CHECK(run("fixtures check IV.1").code == 1);
    CHECK(run("fixtures check IV.3").code == 1);
    CHECK(run("fixtures check IV.3 --rank-rule off").code == 0);
    CHECK(run("fixtures check nope").code == 2);
    const Run list = run("fixtures list");
    CHECK(list.out.find("VII.3b") != std::string::npos);
}

} // TEST_SUITE
