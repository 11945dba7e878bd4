#include "doctest.h"

#include <cstdlib>
#include <random>

#include "ltswan/newton.hpp"
#include "ltswan/ramify.hpp"

using namespace ltswan;

namespace {

Val2 v(long pi_num, long pi_den, long t_num, long t_den) {
    return {make_rational(pi_num, pi_den), make_rational(t_num, t_den)};
}

}  // namespace

TEST_CASE("Val2 is ordered lexicographically") {
    CHECK(v(0, 1, 5, 1) < v(1, 1, -5, 1));
    CHECK(v(1, 1, -1, 1) < v(1, 1, 0, 1));
    CHECK(v(1, 2, 0, 1) == v(2, 4, 0, 1));
}

TEST_CASE("hull of the Lubin-Tate model") {
    const auto h2 = lower_hull(lubin_tate_model(2));
    REQUIRE(h2.segments.size() == 2);
    CHECK(h2.segments[0].x0 == 1);
    CHECK(h2.segments[0].x1 == 2);
    CHECK(h2.segments[0].slope == v(-1, 1, 1, 1));
    CHECK(h2.segments[0].root_val() == v(1, 1, -1, 1));
    CHECK(h2.segments[1].slope == v(0, 1, -1, 2));
    const auto h3 = lower_hull(lubin_tate_model(3));
    CHECK(h3.segments[0].root_val().pi == make_rational(1, 2));
    CHECK(h3.segments[0].length() == 2);
}

TEST_CASE("hull: degenerate inputs") {
    const auto two = lower_hull({{0, v(1, 1, 0, 1)}, {3, v(0, 1, 0, 1)}});
    REQUIRE(two.segments.size() == 1);
    CHECK(two.segments[0].length() == 3);
    CHECK_THROWS_AS(lower_hull({{0, v(1, 1, 0, 1)}}), std::invalid_argument);
    CHECK_THROWS_AS(lower_hull({{1, v(1, 1, 0, 1)}, {1, v(0, 1, 0, 1)}}), std::invalid_argument);
}

TEST_CASE("hull: collinear points and segment lengths") {
    // (0,2), (1,1), (2,0) are collinear; (3, 1) turns up.
    const auto h = lower_hull({{0, v(2, 1, 0, 1)}, {1, v(1, 1, 0, 1)}, {2, v(0, 1, 0, 1)}, {3, v(1, 1, 0, 1)}});
    REQUIRE(h.segments.size() == 2);
    CHECK(h.segments[0].length() == 2);
    std::int64_t total = 0;
    for (const auto& s : h.segments) total += s.length();
    CHECK(total == 3);
}

TEST_CASE("valuations of u_m") {
    const auto u22 = u_valuations(2, 2);
    REQUIRE(u22.size() == 2);
    CHECK(u22[0].flat == 1);
    CHECK(u22[1].flat == make_rational(1, 2));
    CHECK(u22[0].normalized_sharp == -8);
    CHECK(u22[1].normalized_sharp == -8);
    const auto u32 = u_valuations(3, 2);
    CHECK(u32[0].flat == make_rational(1, 2));
    CHECK(u32[1].flat == make_rational(1, 6));
    const auto u21 = u_valuations(2, 1);
    REQUIRE(u21.size() == 1);
    CHECK(u21[0].flat == 1);
    CHECK(u21[0].level_sharp == -2);
}

TEST_CASE("u_m and v_m for q in {2,3}, n <= 3") {
    for (std::int64_t q : {2, 3}) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            const auto u = u_valuations(q, n);
            const auto vv = v_valuations(q, n);
            for (std::uint32_t m = 1; m <= n; ++m) {
                CHECK(u[m - 1].flat == make_rational(1, (q - 1) * ipow(q, m - 1)));
                CHECK(u[m - 1].level_sharp == Rational(-ipow(q, 2 * m - 1)));
                CHECK(u[m - 1].normalized_sharp == Rational(-ipow(q, 2 * n - 1)));
                CHECK(vv[m - 1].level_sharp == 1);
                CHECK(vv[m - 1].normalized_sharp == Rational(ipow(q, 2 * (n - m))));
            }
        }
    }
}

TEST_CASE("Newton jump values agree with the ramification filtration") {
    for (const char* spec : {"2:1:1:mixed", "2:1:2:mixed", "2:1:3:mixed", "3:1:1:mixed", "3:1:2:mixed", "3:1:3:mixed"}) {
        CAPTURE(spec);
        const auto ring = parse_ring(spec);
        const std::uint32_t n = ring->n();
        const auto filt = lubin_tate_filtration(ring);
        const auto derived = unipotent_jump_values(ring->q(), n);
        REQUIRE(derived.size() == n);
        // Lower jumps n..2n-1 are j = 0..n-1.
        for (std::uint32_t j = 0; j < n; ++j) CHECK(filt.jumps[n - 1 + j].h == derived[j]);
    }
}

TEST_CASE("Eisenstein tower") {
    const auto t22 = eisenstein_tower(2, 2);
    REQUIRE(t22.steps.size() == 2);
    CHECK(t22.steps[0].val_z == 1);
    CHECK(t22.steps[1].val_z == make_rational(1, 2));
    CHECK(t22.degree == 2);
    const auto t31 = eisenstein_tower(3, 1);
    CHECK(t31.degree == 2);
    CHECK(t31.steps[0].val_z == make_rational(1, 2));
    CHECK(eisenstein_tower(2, 3).degree == 4);
    for (std::int64_t q : {2, 3, 4, 5})
        for (std::uint32_t n = 1; n <= 4; ++n) {
            const auto t = eisenstein_tower(q, n);
            CHECK(t.degree == (q - 1) * ipow(q, n - 1));
            for (const auto& s : t.steps) {
                CHECK(s.eisenstein);
                CHECK(s.polygon.segments.size() == 1);
            }
        }
}

TEST_CASE("residue factorization of [pi^n]") {
    const auto c = residue_factorization(2, 1, 2);
    CHECK(c.lhs.str() == "T^3X^4 + T^1X^8 + T^4X^8 + X^16");
    CHECK(c.holds());
    const auto one = residue_factorization(3, 1, 1);
    CHECK(one.lhs.str() == "T^1X^3 + X^9");
    CHECK(one.holds());
    for (auto [p, f] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}})
        for (std::uint32_t n = 1; n <= 3; ++n) {
            CAPTURE(p);
            CAPTURE(f);
            CAPTURE(n);
            CHECK(residue_factorization(p, f, n).holds());
        }
}

TEST_CASE("BiPoly arithmetic in characteristic p") {
    const auto F = make_ring(3, 1, 1, RingMode::equal);
    const auto x = BiPoly::monomial(F, 1, 1, 0);
    const auto t = BiPoly::monomial(F, 1, 0, 1);
    // (X + T)^3 = X^3 + T^3 over F_3, by expansion rather than Frobenius.
    CHECK((x + t) * (x + t) * (x + t) == x.pow(3) + t.pow(3));
    CHECK((x + t).pow(3) == x.pow(3) + t.pow(3));
    CHECK((x + t).pow(2).str() == "T^2 + [2]T^1X^1 + X^2");
    CHECK(x.compose(x + t) == x + t);
}

TEST_CASE("slope stability under perturbation") {
    // pi X^q sits above the hull.
    auto model = lubin_tate_model(2);
    auto expect = negative_segments(lower_hull(model));
    model[1].val = std::min(model[1].val, v(1, 1, 0, 1));
    const auto after = negative_segments(lower_hull(model));
    REQUIRE(after.size() == expect.size());
    for (std::size_t i = 0; i < after.size(); ++i) CHECK(after[i].slope == expect[i].slope);
    CHECK(slope_stability(3, 2, 1, 1, 0));
    CHECK(slope_stability(3, 3, 100, 2024));
    CHECK(slope_stability(2, 3, 100, 2024));
}

TEST_CASE("random hulls lie below every point with increasing slopes") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> count(2, 8), num(-6, 6), den(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        ValuedPoly poly;
        std::int64_t x = 0;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            x += 1 + std::abs(num(rng)) % 3;
            poly.push_back({x, v(num(rng), den(rng), num(rng), den(rng))});
        }
        const auto hull = lower_hull(poly);
        REQUIRE_FALSE(hull.segments.empty());
        CHECK(hull.segments.front().x0 == poly.front().exponent);
        CHECK(hull.segments.back().x1 == poly.back().exponent);
        for (std::size_t s = 1; s < hull.segments.size(); ++s) {
            CHECK(hull.segments[s - 1].x1 == hull.segments[s].x0);
            CHECK(hull.segments[s - 1].slope < hull.segments[s].slope);
        }
        // Each point sits on or above the segment spanning its exponent.
        for (const auto& p : poly) {
            for (std::size_t s = 0; s < hull.segments.size(); ++s) {
                const auto& seg = hull.segments[s];
                if (p.exponent < seg.x0 || p.exponent > seg.x1) continue;
                const Val2 base = hull.vertices[s].val;
                CHECK(!(p.val < base + seg.slope * Rational(p.exponent - seg.x0)));
            }
        }
    }
}
