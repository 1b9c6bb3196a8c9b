#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(DEFW_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::ordered_json pieces(const Run& r) { return nlohmann::ordered_json::parse(r.out)["result"]["pieces"]; }

}  // namespace

TEST_CASE("GV line") {
    auto r = run("cohomology --q 1 --r inf --degree 3 --order 0");
    REQUIRE(r.status == 0);
    auto p = pieces(r);
    REQUIRE(p.size() == 1);
    CHECK(p[0]["dim"] == 1);
    CHECK(p[0]["basis"][0]["text"] == "h[1,0]*c[1,0]");
}

TEST_CASE("order 4 eigenspace vanishes") {
    auto r = run("cohomology --q 1 --r inf --f-lambda 0 --order 4 --degree 0..8");
    REQUIRE(r.status == 0);
    auto p = pieces(r);
    CHECK(p.size() == 9);
    for (const auto& c : p) CHECK(c["dim"] == 0);
}

TEST_CASE("type (2,2) slice at order 5") {
    auto r = run("cohomology --q 1 --r inf --f-lambda 0 --order 5 --degree 6 --type 2,2");
    REQUIRE(r.status == 0);
    CHECK(pieces(r)[0]["dim"] == 1);
}

TEST_CASE("byte-stable output") {
    const char* args = "cohomology --q 2 --degree 0..5 --order 0..2 --format json";
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == run(std::string("cohomology --q 2 --degree 0..5 --order 0..2")).out);
    auto e1 = run("invariants eval --q 2 --r 2 --seed 4"), e2 = run("invariants eval --q 2 --r 2 --seed 4");
    CHECK(e1.status == 0);
    CHECK(e1.out == e2.out);
    CHECK(nlohmann::ordered_json::parse(e1.out)["config"]["seed"] == 4);
}

TEST_CASE("invariants eval on a given jet") {
    auto r = run(R"(invariants eval --q 1 --r 1 --matrix '[[["3"]],[["5/2"]]]')");
    REQUIRE(r.status == 0);
    auto v = nlohmann::ordered_json::parse(r.out)["result"]["values"];
    CHECK(v[1]["l"] == 1);
    CHECK(v[1]["c_kl"]["rational_part"]["num"] == "5");
    CHECK(v[1]["c_kl"]["rational_part"]["den"] == "2");
    CHECK(v[1]["c_kl"]["pi_exponent"] == 1);
}

TEST_CASE("verify passes on a small grid") {
    auto r = run("verify --degree 0..5 --order 0..2 --trials 40 --invariant-trials 20 --format tsv");
    CHECK(r.status == 0);
    CHECK(r.out.find("\tfail\t") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("cohomology --q 2 --degree 3 --order 0 --type 1,1").status == 2);
    CHECK(run("cohomology --q 1 --degree 3..1 --order 0").status == 2);
    CHECK(run("cohomology --q 1 --r 2 --degree 3 --order 3").status == 2);
    CHECK(run("cohomology --q 1 --r infinity --degree 3 --order 0").status == 2);
    CHECK(run("cohomology --q 1 --degree 3 --order 0 --f-lambda 1/0").status == 2);
    CHECK(run("cohomology --q 1 --degree 3 --order 0 --variant V").status == 2);
    CHECK(run("cohomology --q 1 --degree 3").status == 2);
    CHECK(run("report-section10 --q 2").status == 2);
    CHECK(run("invariants eval --q 2 --r 1 --matrix '[[[\"1\"]]]'").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("timing is opt-in") {
    auto plain = run("cohomology --q 1 --degree 3 --order 0");
    CHECK(plain.out.find("wall_seconds") == std::string::npos);
    auto timed = run("cohomology --q 1 --degree 3 --order 0 --timing");
    CHECK(timed.out.find("wall_seconds") != std::string::npos);
}
