#include "doctest.h"

#include <random>

#include "ltswan/checks.hpp"

using namespace ltswan;

TEST_CASE("rationals round-trip through JSON") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational r = make_rational(num(rng), den(rng));
        const Json j = rational_json(r);
        CHECK(parse_rational(Json::parse(j.dump()).get<std::string>()) == r);
    }
    CHECK(rational_json(make_rational(-2, 4)) == "-1/2");
    CHECK(rational_json(Rational(3)) == "3");
}

TEST_CASE("filtration JSON for q = 7, n = 1") {
    const Json j = filtration_json(lubin_tate_filtration(parse_ring("7:1:1:mixed")));
    CHECK(j.at("group_order") == 42);
    REQUIRE(j.at("jumps").size() == 1);
    CHECK(j.at("jumps")[0].at("flat") == "1/6");
    CHECK(j.at("jumps")[0].at("sharp") == -8);
    CHECK(j.at("jumps")[0].at("order") == 7);
}

TEST_CASE("dumps do not depend on insertion order") {
    Json a, b;
    a["zeta"] = 1;
    a["alpha"] = "x";
    b["alpha"] = "x";
    b["zeta"] = 1;
    CHECK(a.dump(2) == b.dump(2));
    CHECK(a.dump() == "{\"alpha\":\"x\",\"zeta\":1}");
}

TEST_CASE("csv projection") {
    const Json rows = Json::array({Json{{"b", "1/2"}, {"a", 3}}, Json{{"a", 4}, {"c", Json::array({1, 2})}}});
    CHECK(json_rows_to_csv(rows) == "a,b,c\n3,1/2,\n4,,\"[1,2]\"\n");
    CHECK(json_rows_to_csv(Json::array({Json{{"s", "say \"hi\""}}})) == "s\n\"say \"\"hi\"\"\"\n");
    CHECK_THROWS_AS(json_rows_to_csv(Json::object()), std::invalid_argument);
}

TEST_CASE("profile JSON carries exact breakpoints") {
    const auto ring = parse_ring("2:1:1:mixed");
    const auto filt = lubin_tate_filtration(ring);
    const auto table = dixon_table(enumerate_gl2(ring));
    const auto p = sweep(table.irreducibles[0], filt, Rational(1));
    const Json j = profile_json(p);
    CHECK(j.at("validity") == "ok");
    CHECK(j.at("breakpoints") == Json::array({"2/3"}));
    CHECK(j.at("pieces")[0].at("delta_slope") == "-3");
}

TEST_CASE("verify targets") {
    const auto ring = parse_ring("2:1:1:mixed");
    CHECK_THROWS_AS(run_verify("nope", ring, 1000, 1), std::invalid_argument);
    for (const auto& t : verify_targets()) {
        if (t == "thm2") {
            CHECK_THROWS_AS(run_verify(t, ring, 1000, 1), std::invalid_argument);
            continue;
        }
        CAPTURE(t);
        for (const auto& r : run_verify(t, ring, 1000, 1)) {
            CAPTURE(r.target);
            CHECK(r.pass);
        }
    }
    CHECK_FALSE(check_thm2(parse_ring("2:1:2:mixed"), 1000).pass);  // delta, see README
    CHECK(check_gycor(parse_ring("3:1:2:mixed")).pass);
}
