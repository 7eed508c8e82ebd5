#include <catch_amalgamated.hpp>

#include <filesystem>

#include "reflecta/commands.hpp"

using namespace reflecta;

namespace {

RunConfig config(const std::string& group) {
    RunConfig c;
    c.group = group;
    return c;
}

}  // namespace

TEST_CASE("generator lists", "[cli]") {
    CHECK(parse_generators("1,3", 3) == 0b101);
    CHECK(parse_generators(" 2 ", 3) == 0b010);
    CHECK(parse_generators("", 3) == 0);
    CHECK_THROWS_AS(parse_generators("4", 3), ConfigError);
    CHECK_THROWS_AS(parse_generators("0", 3), ConfigError);
    CHECK_THROWS_AS(parse_generators("x", 3), ConfigError);
    CHECK(symbol_rank("G(3,1,3)") == 3);
    CHECK(symbol_rank("STAR4") == 4);
    CHECK_THROWS_AS(symbol_rank("Q7"), ConfigError);
}

TEST_CASE("command reports", "[cli]") {
    Json h = cmd_homology(config("A3"));
    CHECK(h["schema"] == 1);
    CHECK(h["H~"] == Json::array({0, 0, 1}));
    CHECK(cmd_homology(config("G4"))["H~"] == Json::array({0, 9}));

    RunConfig rc = config("A3");
    rc.U = 0b100;
    rc.T = 0b011;
    Json rib = cmd_ribbon(rc);
    CHECK(rib["matches_homology"] == true);
    CHECK(rib["dimension"] == "1");

    Json g = cmd_group(config("G(3,1,2)"));
    CHECK(g["order"] == 18);
    CHECK(g["degrees"] == Json::array({3, 6}));

    Json gf = cmd_gf(config("G4"));
    CHECK(gf["equal"] == true);
    CHECK(gf.contains("determinant"));

    Json cx = cmd_complex(config("STAR3"));
    CHECK(cx["f_vector"] == Json::array({12, 36, 24}));
    CHECK(cmd_shell(config("B3"))["verified"] == true);
    CHECK(cmd_flats(config("A3"))["locally_conical"] == true);

    CHECK_THROWS_AS(cmd_group(config("nonsense")), ConfigError);
    CHECK_THROWS_AS(cmd_group(config("")), ConfigError);
}

TEST_CASE("same config gives identical output", "[cli]") {
    RunConfig c = config("B3");
    c.jobs = 3;
    CHECK(cmd_flats(c).dump() == cmd_flats(c).dump());
    CHECK(run_suite("well-framed", c).to_json().dump() == run_suite("well-framed", config("B3")).to_json().dump());
    bool a = false, b = false;
    CHECK(report_all({"A2", "G4"}, c, a).dump() == report_all({"A2", "G4"}, c, b).dump());
    CHECK(a);
}

TEST_CASE("verification suites", "[cli]") {
    CHECK(run_suite("locally-conical", config("B3")).pass);
    CHECK(run_suite("lineardet", config("G(3,1,2)")).pass);
    CHECK_FALSE(run_suite("locally-conical", config("STAR4")).pass);
    auto star = run_suite("star-counterexample", config(""));
    CHECK(star.pass);
    CHECK(star.expected_failure);
    CHECK(star.details["pointed_betti"] == Json::array({0, 2, 1}));
    CHECK(star.details["flats_betti"] == Json::array({0, 0, 1}));
    CHECK(run_suite("well-framed", config("STAR3")).pass);

    CHECK_THROWS_AS(run_suite("eulerian", config("G4")), ConfigError);
    CHECK_THROWS_AS(run_suite("well-framed", config("G4")), ConfigError);
    CHECK_THROWS_AS(run_suite("nope", config("A2")), ConfigError);
    RunConfig big = config("");
    big.n = 9;
    CHECK_THROWS_AS(run_suite("ej", big), ConfigError);

    bool all = false;
    Json empty = report_all({}, config(""), all);
    CHECK(empty["rows"].empty());
    CHECK(all);
}

TEST_CASE("group table cache", "[cli]") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "reflecta_cache_test";
    fs::remove_all(dir);
    RunConfig c = config("H3");
    c.cache_dir = dir.string();
    Json first = cmd_group(c);
    CHECK(fs::exists(dir / "H3.v1.tbl"));
    CHECK(cmd_group(c).dump() == first.dump());
    CHECK(first["order"] == 120);
    fs::remove_all(dir);
}

TEST_CASE("budgets", "[cli]") {
    RunConfig c = config("H4");
    c.group_budget = 50;
    CHECK_THROWS_AS(cmd_group(c), BudgetExceeded);
}
