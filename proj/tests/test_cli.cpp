#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "freelab/parser.hpp"
#include "freelab/report.hpp"

using namespace freelab;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(FREELAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("json documents round-trip byte-identically") {
    GFp K(kDefaultPrime);
    auto rep = analyze(parse_poly("(y*z-x^2)^2-x^3*y", K));
    auto doc = report_to_json(rep, {"(y*z-x^2)^2-x^3*y", "fp", kDefaultPrime});
    auto dumped = doc.dump(2);
    auto reparsed = json::parse(dumped);
    CHECK(reparsed.dump(2) == dumped);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["class"] == "NearlyFree");
    CHECK(doc["tau"] == 6);
    CHECK(doc["b"] == 0);
    CHECK(doc["n_profile"] == json::array({{3, 1}}));
}

TEST_CASE("identical inputs give identical documents modulo timings") {
    GFp K(kDefaultPrime);
    auto strip = [](json j) {
        j.erase("timings");
        return j.dump();
    };
    auto f = parse_poly("(y*z-x^2)^2*y-x^5", K);
    auto a = report_to_json(analyze(f), {f.str(), "fp", kDefaultPrime});
    auto b = report_to_json(analyze(f), {f.str(), "fp", kDefaultPrime});
    CHECK(strip(a) == strip(b));
}

TEST_CASE("cli classify emits the documented json") {
    auto r = run_cli("classify --family c2k --k 3 --field fp --prime 32003 --json");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["class"] == "NearlyFree");
    CHECK(doc["exponents"] == json::array({3, 3, 3}));
    CHECK(doc["tau"] == 18);
    CHECK(doc["input"]["prime"] == 32003);
    // re-emitting the parsed document is byte-identical
    CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("cli classify default field is the 32003 prime field") {
    auto r = run_cli("classify --poly \"x^3+y^3+z^3\" --json");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["input"]["field"] == "fp");
    CHECK(doc["input"]["prime"] == 32003);
    CHECK(doc["class"] == "Neither");
    CHECK(doc["tau"] == 0);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("classify --poly \"x^2*y\"").exit_code == 2);          // non-reduced
    CHECK(run_cli("classify --poly \"x^2+y\"").exit_code == 3);          // not homogeneous
    CHECK(run_cli("classify --poly \"x-x\"").exit_code == 3);            // zero polynomial
    CHECK(run_cli("classify --poly \"q\"").exit_code == 3);              // malformed
    CHECK(run_cli("classify --family c5k --k 7").exit_code == 1);        // gated without --allow-slow
    CHECK(run_cli("kummer --family d5").exit_code == 5);                 // no base metadata
    CHECK(run_cli("classify --family c2k --k 2").exit_code == 0);
}

TEST_CASE("cli kummer json carries predictions and genus") {
    auto r = run_cli("kummer --family c5k --k 3 --json --emit-poly");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["components"] == 1);
    CHECK(doc["genus_per_component"] == 1);
    bool found_e8 = false;
    for (const auto& p : doc["points"])
        if (p["label"] == "E8") {
            found_e8 = true;
            CHECK(p["mu_pullback"] == 112);
            CHECK(p["branches"] == 3);
        }
    CHECK(found_e8);
    GFp K(kDefaultPrime);
    auto expected = make_family(K, FamilyName::c5k, 1).base.kummer_pullback(3).str();
    CHECK(doc["pullback_poly"] == expected);
}

TEST_CASE("cli verify passes its own suites") {
    CHECK(run_cli("verify --suite golden --max-k 10").exit_code == 0);
    CHECK(run_cli("verify --suite oracle --max-k 2").exit_code == 0);
    CHECK(run_cli("verify --suite all --max-k 1").exit_code == 0);
}
