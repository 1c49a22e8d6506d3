#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "leonard/json_io.hpp"

namespace {

const std::string cli = LEONARD_CLI_PATH;
const std::string fixtures = LEONARD_FIXTURE_DIR;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) { return fixtures + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("validate") {
    auto ok = run("validate " + fixture("krawtchouk_d2.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PA3: pass") != std::string::npos);

    auto bad = run("validate " + fixture("krawtchouk_d2_tampered.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("PA3: FAIL") != std::string::npos);
    CHECK(bad.out.find("i=2") != std::string::npos);

    CHECK(run("validate " + fixture("malformed.json")).exit_code == 2);
    CHECK(run("validate /nonexistent.json").exit_code == 2);
}

TEST_CASE("check") {
    auto ok = run("check " + fixture("krawtchouk_d2.json") + " --report /tmp/leonard_rep1.json");
    CHECK(ok.exit_code == 0);
    for (const char* suite : {"validation", "leonard-axioms", "td", "wrap-around", "dagger",
                              "intersection-oracle", "duality", "recurrence"})
        CHECK(ok.out.find(std::string(suite) + ": pass") != std::string::npos);

    auto rep = nlohmann::json::parse(slurp("/tmp/leonard_rep1.json"));
    CHECK(rep.contains("input_digest"));
    CHECK(rep["suites"].size() == 8);

    // identical inputs must produce byte-identical reports
    run("check " + fixture("krawtchouk_d2.json") + " --report /tmp/leonard_rep2.json");
    CHECK(slurp("/tmp/leonard_rep1.json") == slurp("/tmp/leonard_rep2.json"));

    // parallel fan-out keeps the ordering and the verdict
    auto par = run("check " + fixture("krawtchouk_d2.json") + " --parallel --report /tmp/leonard_rep3.json");
    CHECK(par.exit_code == 0);
    CHECK(slurp("/tmp/leonard_rep1.json") == slurp("/tmp/leonard_rep3.json"));

    auto only = run("check " + fixture("krawtchouk_d2.json") + " --suite td");
    CHECK(only.exit_code == 0);
    CHECK(only.out.find("td: pass") != std::string::npos);
    CHECK(only.out.find("duality") == std::string::npos);
    CHECK(run("check " + fixture("krawtchouk_d2.json") + " --suite bogus").exit_code == 2);

    CHECK(run("check " + fixture("krawtchouk_d2_tampered.json")).exit_code == 1);
    CHECK(run("check " + fixture("malformed.json")).exit_code == 2);

    // an optional expected-intersections block is honored by the oracle suite
    CHECK(run("check " + fixture("krawtchouk_d2_with_expected.json")).exit_code == 0);
    auto corrupted = run("check " + fixture("krawtchouk_d2_bad_expected.json"));
    CHECK(corrupted.exit_code == 1);
    CHECK(corrupted.out.find("intersection-oracle: FAIL") != std::string::npos);

    auto orphan = run("check " + fixture("orphan_gf4.json"));
    CHECK(orphan.exit_code == 0);
}

TEST_CASE("construct") {
    auto res = run("construct " + fixture("krawtchouk_d2.json") + " --out /tmp/leonard_real.json");
    CHECK(res.exit_code == 0);
    auto doc = nlohmann::json::parse(slurp("/tmp/leonard_real.json"));
    CHECK(doc["d"] == 2);
    CHECK(doc["A"]["order"] == 3);
    CHECK(doc["A"]["rows"][1][0] == "1");
    CHECK(doc["A_star"]["rows"][0][1] == "-4");
    CHECK(doc["idempotents"]["E"].size() == 3);
}

TEST_CASE("transform") {
    auto res = run("transform " + fixture("krawtchouk_d2.json") + " --g Down");
    CHECK(res.exit_code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["theta"] == nlohmann::json::array({"2", "1", "0"}));
    CHECK(doc["varphi"] == nlohmann::json::array({"-2", "-2"}));
    CHECK(doc["phi"] == nlohmann::json::array({"-4", "-4"}));

    // involutions cancel
    auto same = run("transform " + fixture("krawtchouk_d2.json") + " --g star.star");
    auto orig = nlohmann::json::parse(slurp(fixture("krawtchouk_d2.json")));
    CHECK(nlohmann::json::parse(same.out) == orig);

    CHECK(run("transform " + fixture("krawtchouk_d2.json") + " --g sideways").exit_code == 2);
}

TEST_CASE("intersections") {
    auto brute = run("intersections " + fixture("krawtchouk_d2.json"));
    CHECK(brute.exit_code == 0);
    auto doc = nlohmann::json::parse(brute.out);
    CHECK(doc["a"] == nlohmann::json::array({"4", "1", "-2"}));
    CHECK(doc["b"] == nlohmann::json::array({"-4", "-2"}));
    CHECK(doc["c"] == nlohmann::json::array({"1", "2"}));

    for (const char* m : {"bbcc", "cibiform", "bici", "bcform", "all"}) {
        auto res = run("intersections " + fixture("krawtchouk_d2.json") + " --method " + m);
        CHECK(res.exit_code == 0);
        CHECK(nlohmann::json::parse(res.out)["b"] == doc["b"]);
    }

    // the d = 1 instance rejects the methods whose hypotheses need d >= 2
    CHECK(run("intersections " + fixture("d1.json") + " --method bici").exit_code == 1);
    CHECK(run("intersections " + fixture("d1.json") + " --method bbcc").exit_code == 0);
}

TEST_CASE("family") {
    auto gen = run("family gen --name krawtchouk --d 2 --field Q --params "
                   "'{\"s\":\"1\",\"s_star\":\"1\",\"r\":\"2\",\"theta0\":\"0\",\"theta0_star\":\"0\"}'");
    CHECK(gen.exit_code == 0);
    auto doc = nlohmann::json::parse(gen.out);
    CHECK(doc["parameter_array"]["varphi"] == nlohmann::json::array({"-4", "-4"}));
    CHECK(doc["intersection_data"]["b"] == nlohmann::json::array({"-4", "-2"}));

    // inadmissible parameters exit 1
    CHECK(run("family gen --name krawtchouk --d 2 --field Q --params "
              "'{\"s\":\"1\",\"s_star\":\"1\",\"r\":\"1\",\"theta0\":\"0\",\"theta0_star\":\"0\"}'")
              .exit_code == 1);
    // wrong characteristic for the characteristic-2 family
    CHECK(run("family gen --name orphan --d 3 --field Q --params "
              "'{\"h\":\"1\",\"h_star\":\"1\",\"s\":\"2\",\"s_star\":\"2\",\"r\":\"1\","
              "\"theta0\":\"0\",\"theta0_star\":\"0\"}'")
              .exit_code == 1);
    CHECK(run("family gen --name nosuch --d 2 --field Q --params '{}'").exit_code == 2);

    auto s1 = run("family sample --name q-racah --d 4 --field GF:13 --seed 7 --count 3");
    CHECK(s1.exit_code == 0);
    auto list = nlohmann::json::parse(s1.out);
    CHECK(list.size() == 3);
    auto s2 = run("family sample --name q-racah --d 4 --field GF:13 --seed 7 --count 3");
    CHECK(s1.out == s2.out); // deterministic under the seed

    auto table = run("family table --name krawtchouk --d 2 --field Q --params "
                     "'{\"s\":\"1\",\"s_star\":\"1\",\"r\":\"2\",\"theta0\":\"0\",\"theta0_star\":\"0\"}'");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("| a_i | b_i | c_i") != std::string::npos);
}

TEST_CASE("roundtrip") {
    CHECK(run("roundtrip " + fixture("krawtchouk_d2.json")).exit_code == 0);
    CHECK(run("roundtrip " + fixture("orphan_gf4.json")).exit_code == 0);
    CHECK(run("roundtrip " + fixture("krawtchouk_d2_tampered.json")).exit_code == 1);
}

TEST_CASE("documents survive the serialization cycle") {
    using namespace leonard;
    for (const char* name : {"krawtchouk_d2.json", "orphan_gf4.json", "d1.json"}) {
        auto doc = nlohmann::json::parse(slurp(fixture(name)));
        auto pa = parray_from_json(doc);
        auto cycled = parray_from_json(to_json(pa));
        CHECK(cycled == pa);
        if (validate(pa).valid()) {
            auto data = brute_intersection(build_split(pa));
            auto cycled_data = intersection_from_json(pa.ctx, to_json(data));
            CHECK(cycled_data == data);
        }
    }
}
