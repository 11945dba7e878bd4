#include "doctest.h"

#include <random>

#include "ltswan/conductor.hpp"
#include "ltswan/profile.hpp"

using namespace ltswan;

namespace {

struct TypeCase {
    RingPtr ring;
    CharTable table;
    std::vector<std::size_t> rows;
    Filtration filt;
};

TypeCase unramified(const char* spec) {
    const auto ring = parse_ring(spec);
    const auto G = enumerate_gl2(ring);
    TypeCase c{ring, dixon_table(G), {}, lubin_tate_filtration(ring)};
    c.rows = unramified_type_candidates(c.table, unit_characters(ring), congruence_tower(ring, G), unipotent_tower(ring));
    return c;
}

Rational expected_first_break(std::int64_t q, std::int64_t n) {
    return make_rational(1, (q - 1) * ipow(q, n - 1) * (ipow(q, 2 * n - 1) + 1));
}

void check_shape(const Profile& p) {
    REQUIRE_FALSE(p.pieces.empty());
    for (std::size_t k = 0; k < p.pieces.size(); ++k) {
        const auto& piece = p.pieces[k];
        CHECK(piece.delta_slope == Rational(piece.sw));
        CHECK(piece.delta_slope <= 0);
        CHECK(piece.delta_intercept >= 0);
        CHECK(piece.delta_intercept + piece.delta_slope * (piece.s_hi - piece.s_lo) >= 0);
        if (k == 0) continue;
        const auto& prev = p.pieces[k - 1];
        CHECK(prev.s_hi == piece.s_lo);
        CHECK(prev.delta_intercept + prev.delta_slope * (prev.s_hi - prev.s_lo) == piece.delta_intercept);
        CHECK(prev.delta_slope <= piece.delta_slope);
        CHECK(prev.sw <= piece.sw);
    }
}

}  // namespace

TEST_CASE("slide examples") {
    CHECK(slide(RankTwoLog(1, -3), Rational(0)) == RankTwoLog(1, -3));
    CHECK(slide(RankTwoLog(1, -3), make_rational(1, 3)) == RankTwoLog(0, -3));
    CHECK(slide(RankTwoLog(0, 3), make_rational(1, 2)) == RankTwoLog(make_rational(3, 2), 3));
}

TEST_CASE("slide is additive") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12), pos(0, 20);
    for (int trial = 0; trial < 300; ++trial) {
        const RankTwoLog h(make_rational(num(rng), den(rng)), num(rng));
        const Rational s1 = make_rational(pos(rng), den(rng));
        const Rational s2 = make_rational(pos(rng), den(rng));
        CHECK(slide(h, s1 + s2) == slide(slide(h, s1), s2));
    }
}

TEST_CASE("sweep over F_2: the cuspidal sheaf dies at t = 1/3") {
    auto c = unramified("2:1:1:mixed");
    REQUIRE(c.rows.size() == 1);
    const auto& chi = c.table.irreducibles[c.rows[0]];
    const Profile p = sweep(chi, c.filt, Rational(2));
    CHECK(p.validity == "ok");
    REQUIRE(p.pieces.size() == 2);
    CHECK(p.pieces[0].s_hi == make_rational(2, 3));
    CHECK(p.pieces[0].t_hi == make_rational(1, 3));
    CHECK(p.pieces[0].delta_intercept == 2);
    CHECK(p.pieces[0].delta_slope == -3);
    CHECK(p.pieces[0].sw == -3);
    CHECK(p.pieces[1].group_order == 1);
    CHECK(p.pieces[1].delta_intercept == 0);
    CHECK(p.pieces[1].sw == 0);
    CHECK(p.delta_at(make_rational(1, 3)) == 1);
    CHECK(p.breakpoints == std::vector<Rational>{make_rational(2, 3)});
    check_shape(p);
}

TEST_CASE("profiles of the unramified types") {
    for (const char* spec : {"2:1:1:mixed", "3:1:1:mixed", "2:1:2:mixed", "2:2:1:equal"}) {
        CAPTURE(spec);
        auto c = unramified(spec);
        const std::int64_t q = c.ring->q(), n = c.ring->n();
        REQUIRE_FALSE(c.rows.empty());
        for (std::size_t row : c.rows) {
            const auto& chi = c.table.irreducibles[row];
            const ConductorReport boundary = conductor(chi, c.filt);
            const Profile p = sweep(chi, c.filt, Rational(4));
            check_shape(p);
            CHECK(p.pieces[0].delta_intercept == boundary.delta);
            CHECK(p.pieces[0].sw == boundary.sw);
            const auto fb = first_break(chi, c.filt);
            REQUIRE(fb.has_value());
            CHECK(*fb == expected_first_break(q, n));
            const auto sampled = sampled_first_break(chi, c.filt, 1009, *fb * 3);
            REQUIRE(sampled.has_value());
            CHECK(*sampled == *fb);
        }
    }
}

TEST_CASE("a crossing of slid values truncates the sweep at q = 2, n = 2") {
    auto c = unramified("2:1:2:mixed");
    const auto& chi = c.table.irreducibles[c.rows.at(0)];
    const Profile p = sweep(chi, c.filt, Rational(4));
    CHECK(p.validity == "structural-break");
    REQUIRE(p.truncated_at.has_value());
    // (0,3) meets (1/2,-9) at t = 1/24, i.e. s = 8/24.
    CHECK(*p.truncated_at == make_rational(1, 3));
    CHECK_THROWS_AS(slide_filtration(c.filt, make_rational(1, 20)), NotSubgroup);
}

TEST_CASE("first break of the trivial character") {
    auto c = unramified("3:1:1:mixed");
    const auto triv = trivial_character(c.table.group);
    CHECK_FALSE(first_break(triv, c.filt).has_value());
    CHECK_FALSE(sampled_first_break(triv, c.filt, 50, Rational(1)).has_value());
    const Profile p = sweep(triv, c.filt, Rational(1));
    CHECK(p.pieces[0].delta_intercept == 0);
    CHECK(p.pieces[0].sw == 0);
}

TEST_CASE("clamped delta agrees with the profile inside the first piece") {
    auto c = unramified("3:1:1:mixed");
    const auto& chi = c.table.irreducibles[c.rows.at(0)];
    const Profile p = sweep(chi, c.filt, Rational(4));
    const auto& first = p.pieces.at(0);
    const Rational order(static_cast<long>(first.group_order));
    for (int k = 0; k <= 16; ++k) {
        const Rational t = first.t_hi * make_rational(k, 16);
        CHECK(clamped_delta(chi, c.filt, t) == p.delta_at(order * t));
    }
}

TEST_CASE("sweep rejects a nonpositive range") {
    auto c = unramified("2:1:1:mixed");
    CHECK_THROWS_AS(sweep(c.table.irreducibles[0], c.filt, Rational(0)), std::invalid_argument);
}
