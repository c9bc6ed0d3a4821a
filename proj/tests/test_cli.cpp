#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "waring/cli.hpp"
#include "waring/form_parser.hpp"
#include "waring/json_io.hpp"
#include "waring/waring.hpp"

using namespace waring;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_form accepts sums of same-degree terms") {
    CHECK(parse_form("x0*x1^2").form == BinaryForm::monomial(1, 2));
    CHECK(parse_form("1/2*x0^2 - x1^2").form == BinaryForm(2, {rat(1, 2), rat(0), rat(-1)}));
    CHECK(parse_form("x0^3 + 3*x0^2*x1").form == BinaryForm(3, {rat(1), rat(3), rat(0), rat(0)}));
    CHECK(parse_form("-2*x1^4").form == BinaryForm(4, {rat(0), rat(0), rat(0), rat(0), rat(-2)}));
    CHECK(parse_form(" x0 + x1 ").form == BinaryForm(1, {rat(1), rat(1)}));
    CHECK(parse_form("x0^2 - x0^2").form == BinaryForm(2));
}

TEST_CASE("parse_form rejects malformed input") {
    CHECK_THROWS_AS(parse_form("x0 + x1^2"), InputError);  // mixed degrees
    CHECK_THROWS_AS(parse_form(""), InputError);
    CHECK_THROWS_AS(parse_form("x2"), InputError);
    CHECK_THROWS_AS(parse_form("x0^"), InputError);
    CHECK_THROWS_AS(parse_form("1/0*x0"), InputError);
    CHECK_THROWS_AS(parse_form("x0 *"), InputError);
    try {
        parse_form("x0^2 + y^2");
    } catch (const ParseError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("rank command") {
    CliRun r = run({"rank", "--monomial", "1", "2", "--field", "real"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");

    r = run({"rank", "--monomial", "2", "3", "--field", "complex"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");

    r = run({"rank", "--form", "x0*x1^4"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");

    r = run({"rank", "--form", "x0^3 + x1^3"});
    CHECK(r.out == "2\n");

    r = run({"rank", "--form", "x0*x1^2", "--field", "real"});
    CHECK(r.code == 0);
    CHECK(r.out == "[3, 3]\n");
}

TEST_CASE("rank command input errors exit 1") {
    CHECK(run({"rank"}).code == 1);
    CHECK(run({"rank", "--monomial", "1", "2", "--form", "x0*x1"}).code == 1);
    CHECK(run({"rank", "--form", "x0 + x1^2"}).code == 1);
    CHECK(run({"rank", "--form", "x0*x1", "--field", "rational"}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("rank --json carries the witness") {
    CliRun r = run({"--json", "rank", "--monomial", "1", "2", "--field", "real"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rank"] == 3);
    CHECK(j["field"] == "real");
    // the schema only records the degree, so reattach the target to verify
    WaringDecomposition dec = decomposition_from_json(j["witness"]);
    dec.target = BinaryForm::monomial(1, 2);
    CHECK(verify_decomposition(dec).ok);
    CHECK(j["lower_bounds"].size() == 2);  // r = 1 and r = 2 are both refuted
}

TEST_CASE("decompose command verifies before printing") {
    CliRun r = run({"decompose", "--monomial", "1", "2", "--field", "real"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("exact, residual 0") != std::string::npos);

    r = run({"--json", "decompose", "--monomial", "1", "2", "--field", "real", "--seed-roots", "1,2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["field"] == "real");
    CHECK(j["exact"] == true);
    CHECK(j["terms"].size() == 3);
    CHECK(j["residual"] == "0");
    // byte-identical round trip
    CHECK(decomposition_to_json(decomposition_from_json(j)).dump() == j.dump());

    r = run({"--json", "decompose", "--monomial", "2", "2", "--field", "complex"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["exact"] == false);
    CHECK(j["terms"].size() == 3);
    CHECK(j["precision"] == 128);

    CHECK(run({"decompose", "--monomial", "0", "3"}).code == 1);
    CHECK(run({"decompose", "--monomial", "1", "2", "--seed-roots", "1,1"}).code == 1);
    CHECK(run({"decompose", "--monomial", "1", "2", "--seed-roots", "-1,2"}).code == 1);
    CHECK(run({"decompose", "--monomial", "1", "2", "--field", "complex", "--seed-roots", "1,2"}).code == 1);
}

TEST_CASE("apolar command") {
    CliRun r = run({"apolar", "--form", "x0*x1^2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("degrees (2, 3)") != std::string::npos);
    CHECK(r.out.find("g1 = y0^2") != std::string::npos);

    r = run({"--json", "apolar", "--form", "x0^3 + x1^3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["d1"] == 2);
    CHECK(j["d2"] == 3);
    CHECK(j["g1"] == "y0*y1");
}

TEST_CASE("certify command") {
    CliRun r = run({"--json", "certify", "--monomial", "2", "3", "--terms", "4"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["a"] == 2);
    CHECK(j["b"] == 3);
    CHECK(j["r"] == 4);
    CHECK(j["gap"] == json::array({1, 2}));

    // enough terms: prints the witness decomposition instead
    r = run({"--json", "certify", "--monomial", "2", "3", "--terms", "5"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["terms"].size() == 5);

    CHECK(run({"certify", "--monomial", "0", "3", "--terms", "2"}).code == 1);
}

TEST_CASE("table command") {
    CliRun r = run({"--json", "table", "--max-degree", "5"});
    REQUIRE(r.code == 0);
    json rows = json::parse(r.out);
    REQUIRE(rows.is_array());
    CHECK(rows.size() == 6);  // (1,1) (1,2) (1,3) (1,4) (2,2) (2,3)
    for (const json& row : rows) {
        int a = row["a"], b = row["b"];
        CHECK(row["complex"] == b + 1);
        CHECK(row["real"] == a + b);
    }
    CHECK(run({"table", "--max-degree", "1"}).code == 1);
}

TEST_CASE("global options") {
    CliRun r = run({"--precision", "32", "rank", "--monomial", "1", "2"});
    CHECK(r.code == 1);

    r = run({"--tolerance", "-1", "rank", "--monomial", "1", "2"});
    CHECK(r.code == 1);

    r = run({"--json", "--precision", "96", "decompose", "--monomial", "2", "2", "--field", "complex"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["precision"] == 96);

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rank") != std::string::npos);
}
