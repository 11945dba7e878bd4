#include "doctest.h"

#include <random>

#include "ltswan/matrix_group.hpp"
#include "ltswan/rank_two_log.hpp"

using namespace ltswan;

TEST_CASE("cmp_value orders values, not minus-logs") {
    CHECK(cmp_value(RankTwoLog(0, 0), RankTwoLog(0, 0)) == std::strong_ordering::equal);
    CHECK(cmp_value(RankTwoLog(make_rational(1, 2), -9), RankTwoLog(1, -9)) == std::strong_ordering::greater);
    CHECK(cmp_value(RankTwoLog(0, 3), RankTwoLog(make_rational(1, 2), -9)) == std::strong_ordering::greater);
    CHECK(cmp_value(RankTwoLog(0, 3), RankTwoLog(0, 0)) == std::strong_ordering::less);
}

TEST_CASE("scale_sharp") {
    CHECK(scale_sharp(RankTwoLog(make_rational(1, 2), -1), 1) == RankTwoLog(make_rational(1, 2), -1));
    CHECK(scale_sharp(RankTwoLog(1, -2), 4) == RankTwoLog(1, -8));
    CHECK(scale_sharp(RankTwoLog(0, 1), 6) == RankTwoLog(0, 6));
    CHECK_THROWS(scale_sharp(RankTwoLog(0, 1), 0));
}

TEST_CASE("cmp_value is a total order and scale_sharp a monoid action") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-6, 6), pos(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        RankTwoLog a(make_rational(small(rng), pos(rng)), small(rng));
        RankTwoLog b(make_rational(small(rng), pos(rng)), small(rng));
        RankTwoLog c(make_rational(small(rng), pos(rng)), small(rng));
        CHECK((cmp_value(a, b) == std::strong_ordering::equal) == (a == b));
        CHECK(cmp_value(a, b) == 0 <=> cmp_value(b, a));
        if (cmp_value(a, b) < 0 && cmp_value(b, c) < 0) CHECK(cmp_value(a, c) < 0);
        const int d1 = pos(rng), d2 = pos(rng);
        CHECK(scale_sharp(scale_sharp(a, d1), d2) == scale_sharp(a, d1 * d2));
    }
}

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(to_string(parse_rational("-8")) == "-8");
    CHECK(to_string(make_rational(4, 6)) == "2/3");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/-2"));
}

TEST_CASE("residue rings") {
    auto z4 = make_ring(2, 1, 2, RingMode::mixed);
    CHECK(z4->val_pi(2) == 1);
    CHECK(z4->val_pi(0) == 2);
    CHECK(z4->unit_group().size() == 2);
    CHECK(make_ring(3, 1, 1, RingMode::mixed)->unit_group().size() == 2);
    CHECK_THROWS(make_ring(4, 1, 1, RingMode::mixed));
    CHECK_THROWS(make_ring(2, 2, 1, RingMode::mixed));
    CHECK(parse_ring("2:1:2:mixed")->spec() == "2:1:2:mixed");
    CHECK_THROWS(parse_ring("2:1:2"));
    CHECK_THROWS(parse_ring("2:1:2:weird"));

    for (const char* spec : {"2:2:1:equal", "2:1:3:equal", "3:2:1:equal", "3:1:2:equal", "5:1:2:mixed", "2:3:2:equal"}) {
        auto R = parse_ring(spec);
        INFO(spec);
        std::uint32_t units = 0;
        for (Elem x = 0; x < R->size(); ++x) {
            if (R->is_unit(x)) {
                ++units;
                CHECK(R->mul(x, R->inv(x)) == 1);
            }
            CHECK(R->add(x, R->neg(x)) == 0);
            for (Elem y = 0; y < R->size(); ++y) {
                CHECK(R->mul(x, y) == R->mul(y, x));
                CHECK(R->val_pi(R->mul(x, y)) == std::min(R->n(), R->val_pi(x) + R->val_pi(y)));
            }
        }
        CHECK(units == (R->q() - 1) * R->size() / R->q());
        CHECK(R->val_pi(R->pi()) == std::min<std::uint32_t>(1, R->n()));
    }
    // F_4: x^2 + x + 1 is the modulus; every nonzero element has order dividing 3.
    auto f4 = make_ring(2, 2, 1, RingMode::equal);
    for (Elem x = 1; x < 4; ++x) CHECK(f4->pow(x, 3) == 1);
}

TEST_CASE("GL2 orders") {
    CHECK(enumerate_gl2(make_ring(2, 1, 1, RingMode::mixed))->order() == 6);
    CHECK(enumerate_gl2(make_ring(2, 1, 2, RingMode::mixed))->order() == 96);
    CHECK(enumerate_gl2(make_ring(3, 1, 1, RingMode::mixed))->order() == 48);
    CHECK(enumerate_gl2(make_ring(2, 2, 1, RingMode::equal))->order() == 180);
    CHECK(enumerate_gl2(make_ring(2, 1, 2, RingMode::equal))->order() == 96);
    CHECK(enumerate_gl2(make_ring(2, 1, 3, RingMode::mixed))->order() == 1536);
    CHECK_THROWS_AS(enumerate_gl2(make_ring(2, 1, 2, RingMode::mixed), 50), CapExceeded);
}

TEST_CASE("class partition sums to the order and sizes divide it") {
    for (const char* spec : {"2:1:1:mixed", "3:1:1:mixed", "2:1:2:mixed", "2:2:1:equal", "2:1:2:equal"}) {
        auto G = enumerate_gl2(parse_ring(spec));
        std::size_t total = 0;
        for (std::size_t c = 0; c < G->class_count(); ++c) {
            total += G->class_size(c);
            CHECK(G->order() % G->class_size(c) == 0);
            for (std::size_t m : G->class_members(c)) CHECK(G->class_of(m) == c);
        }
        CHECK(total == G->order());
        CHECK(G->class_members(0) == std::vector<std::size_t>{G->identity_index()});
    }
    CHECK(enumerate_gl2(parse_ring("2:1:1:mixed"))->class_count() == 3);
    CHECK(enumerate_gl2(parse_ring("3:1:1:mixed"))->class_count() == 8);
}

TEST_CASE("class partition agrees with brute-force conjugation") {
    auto G = enumerate_gl2(parse_ring("2:1:2:mixed"));
    const auto& R = G->ring();
    for (std::size_t i = 0; i < G->order(); ++i)
        for (const auto& g : G->elements()) CHECK(G->class_of_elem(conj_by(R, G->element(i), g)) == G->class_of(i));
}

TEST_CASE("Borel stabilizer") {
    CHECK(borel_stabilizer(parse_ring("2:1:1:mixed"))->order() == 2);
    CHECK(borel_stabilizer(parse_ring("2:1:2:mixed"))->order() == 8);
    CHECK(borel_stabilizer(parse_ring("3:1:1:mixed"))->order() == 6);
    for (const char* spec : {"2:1:2:mixed", "3:1:2:mixed", "2:2:1:equal"}) {
        auto ring = parse_ring(spec);
        auto Gy = borel_stabilizer(ring);
        const auto& R = *ring;
        CHECK(Gy->order() == (R.q() - 1) * R.size() * R.size() / R.q());
        for (Elem u : R.unit_group()) {
            const GL2Elem t{u, 0, 0, R.inv(u)};
            for (const auto& x : Gy->elements()) {
                CHECK(x.c == 0);
                CHECK(det(R, x) == 1);
                CHECK(Gy->contains(conj_by(R, x, t)));
            }
        }
    }
}

TEST_CASE("named subgroups") {
    auto z4 = parse_ring("2:1:2:mixed");
    CHECK(iwahori(z4)->order() == 32);
    auto f2 = parse_ring("2:1:1:mixed");
    CHECK(enumerate_gl2(f2)->order() / k0_subgroup(f2)->order() == 3);
    CHECK(unipotent(parse_ring("3:1:1:mixed"), 0)->order() == 3);
    for (const char* spec : {"2:1:2:mixed", "3:1:2:mixed", "2:1:3:mixed"}) {
        auto ring = parse_ring(spec);
        const auto q = ring->q(), n = ring->n();
        const auto G = gl2_order(*ring);
        CHECK(G / iwahori(ring)->order() == q + 1);
        CHECK(G / k0_subgroup(ring)->order() == (q + 1) * ring->size() / q);
        for (std::uint32_t m = 0; m + 2 <= 2 * n; ++m) CHECK(iwahori_layer(ring, m)->order() > 0);
        CHECK_THROWS(iwahori_layer(ring, 2 * n - 1));
        CHECK_THROWS(unipotent(ring, n + 1));
        CHECK(principal_congruence(ring, n)->order() == 1);
        CHECK(center(ring)->order() == ring->unit_group().size());
        CHECK(det_one(ring)->order() * ring->unit_group().size() == G);
    }
}

TEST_CASE("non-subgroups are rejected") {
    auto ring = parse_ring("3:1:1:mixed");
    CHECK_THROWS_AS(gl2_subset(ring, [](const GL2Elem& x) { return x.b == 1 || x == identity_elem(); }, "bad"),
                    NotSubgroup);
    CHECK(!is_subgroup(*ring, {identity_elem(), GL2Elem{1, 1, 0, 1}}));
    CHECK(is_subgroup(*ring, {identity_elem(), GL2Elem{1, 1, 0, 1}, GL2Elem{1, 2, 0, 1}}));
}

TEST_CASE("double cosets") {
    auto f2 = parse_ring("2:1:1:mixed");
    auto G = enumerate_gl2(f2);
    CHECK(double_cosets(*borel_stabilizer(f2), *G, *iwahori(f2)).size() == 2);
    CHECK(double_cosets(*G, *G, *G).size() == 1);
    auto z4 = parse_ring("2:1:2:mixed");
    auto G4 = enumerate_gl2(z4);
    const auto dc = double_cosets(*borel_stabilizer(z4), *G4, *iwahori(z4));
    CHECK(dc.size() == 2);
    std::size_t total = 0;
    for (const auto& d : dc) total += d.size;
    CHECK(total == 96);
}
