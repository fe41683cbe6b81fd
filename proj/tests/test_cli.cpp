#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainf/cli.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/spec.hpp"

using namespace ainf;

namespace {

std::string data(const std::string& name) { return std::string(AINF_DATA_DIR) + "/" + name; }

cli::Report run(const std::string& cmd, const std::string& file, cli::Options opt = {})
{
    const auto space = cmd.find(' ');
    if (space == std::string::npos) return cli::run(cmd, "", data(file), opt);
    return cli::run(cmd.substr(0, space), cmd.substr(space + 1), data(file), opt);
}

bool mentions(const cli::Report& r, const std::string& needle)
{
    for (const auto& l : r.text)
        if (l.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("spec files reproduce the fixtures")
{
    CHECK(load_spec(data("k.json")).algebra.dim() == 1);
    auto m2 = load_spec(data("m2.json"));
    CHECK(m2.algebra.m == fixtures::matrix_m2().m);
    CHECK(load_spec(data("dg.json")).algebra.m == fixtures::dg_fixture().m);
    CHECK(load_spec(data("m3.json")).algebra.m == fixtures::m3_fixture().m);
    REQUIRE(m2.derivations.size() == 1);
    CHECK(is_derivation(m2.derivations[0].cochain, m2.algebra).ok);
    auto dg = load_spec(data("dg.json"));
    REQUIRE(dg.morphism);
    CHECK(check_strict_morphism(*dg.morphism).ok);
}

TEST_CASE("spec errors name the field")
{
    CHECK_THROWS_AS(load_spec(data("degree_mismatch.json")), SpecError);
    CHECK_THROWS_AS(load_spec(data("bad.json")), InvariantViolation);
    CHECK_NOTHROW(load_spec(data("bad.json"), false));
    try {
        parse_spec(R"({"field": "Q", "labels": [["1"]], "ops": {"2": [{"inputs": ["1", "z"], "output": "1"}]}})");
        FAIL("accepted an unknown label");
    } catch (const SpecError& e) {
        CHECK(e.field() == "/ops/2/0/inputs/1");
    }
    CHECK_THROWS_AS(parse_spec(R"({"field": "F2", "labels": [["1"]]})"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"labels": [["1"]], "dims": [2]})"), SpecError);
    CHECK_THROWS_AS(parse_spec(R"({"labels": [["1"]], "ops": {"2": [{"inputs": ["1", "1"], "output": "1", "coeff": 0.5}]}})"), SpecError);
    CHECK_THROWS_AS(parse_spec("{"), SpecError);
    auto ok = parse_spec(R"({"labels": [["1", "e"]], "unit": "1", "ops": {"2": [{"inputs": ["e", "e"], "output": "1", "coeff": "-3/2"}]}})");
    CHECK(ok.algebra.m.eval({1, 1}).get(0) == Scalar(-3, 2));
}

TEST_CASE("command examples")
{
    cli::Options opt;
    opt.max_weight = 8;
    auto hp = run("hp", "k.json", opt);
    CHECK(hp.exit_code == cli::kOk);
    CHECK(mentions(hp, "HP0 = 1, HP1 = 0, stabilized at k=1"));

    auto thm45 = run("verify thm45", "dg.json");
    CHECK(thm45.exit_code == cli::kOk);
    CHECK(thm45.status == "PASS");
    CHECK(thm45.results.size() == 4);

    auto bad = run("validate", "bad.json");
    CHECK(bad.exit_code == cli::kViolation);
    CHECK(mentions(bad, "Stasheff identity fails"));
    CHECK_FALSE(bad.results[0]["stasheff_violations"].empty());

    CHECK(run("validate", "m2.json").exit_code == cli::kOk);
    CHECK(run("validate", "degree_mismatch.json").exit_code == cli::kViolation);
}

TEST_CASE("every command runs on the data files")
{
    for (const char* cmd : {"hh", "hc", "traces", "bracket", "cohomology", "verify prop23", "verify cor42", "verify sbi",
                            "verify quasi-iso"})
        for (const char* file : {"k.json", "dual_numbers.json", "m2.json", "dg.json", "m3.json"}) {
            CAPTURE(cmd);
            CAPTURE(file);
            auto r = run(cmd, file, cli::Options{6, 4});
            CHECK(r.exit_code == cli::kOk);
        }
    CHECK(run("verify thm44", "augmented.json").status == "PASS");
    CHECK(run("verify thm44", "m3.json").status == "PASS");
    auto def = run("deform", "dual_numbers.json");
    CHECK(def.exit_code == cli::kOk);
    CHECK(def.results[0]["witness_mc"] == true);
    CHECK(run("deform", "k.json").exit_code == cli::kViolation);
}

TEST_CASE("window limits are reported as inconclusive")
{
    cli::Options opt;
    opt.max_weight = 4;
    opt.degrees = std::pair{0, 5};
    auto r = run("hc", "k.json", opt);
    CHECK(r.exit_code == cli::kInconclusive);
    CHECK(r.results[5]["dim"].is_null());

    cli::Options tight;
    tight.max_weight = 3;
    CHECK(run("hp", "m3.json", tight).exit_code == cli::kInconclusive);
}

TEST_CASE("json reports are stable")
{
    cli::Options opt;
    opt.format = "json";
    auto a = run("verify thm45", "m3.json", opt).render("json");
    auto b = run("verify thm45", "m3.json", opt).render("json");
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    for (const char* key : {"command", "window", "results", "evidence", "status"}) CHECK(j.contains(key));
    CHECK(j["window"]["reliable_bound"] == 6);
    auto t = run("traces", "m2.json").to_json();
    CHECK(t["results"][0]["closed_traces"][0]["1"] == "2");
}

TEST_CASE("degree ranges")
{
    CHECK(cli::parse_degrees("3") == std::pair{3, 3});
    CHECK(cli::parse_degrees("1..4") == std::pair{1, 4});
    CHECK_THROWS(cli::parse_degrees("4..1"));
    CHECK_THROWS(cli::parse_degrees("x"));
}
