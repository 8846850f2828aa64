#include <doctest.h>

#include <random>

#include "fan_generators.hpp"
#include "torica/builtin_examples.hpp"
#include "torica/errors.hpp"
#include "torica/fan.hpp"

using namespace torica;

namespace {
IntVec v(std::initializer_list<long> xs) {
    IntVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("make_fan on the reference fans") {
    SUBCASE("P1") {
        Fan f = fan_p1();
        CHECK(f.rays.size() == 2);
        CHECK(is_complete(f));
    }
    SUBCASE("P2 validates with pairwise common faces") {
        Fan f = fan_p2();
        CHECK(f.max_cones.size() == 3);
        CHECK(is_complete(f));
    }
    SUBCASE("non-primitive rays are normalized") {
        Fan f = make_fan(2, {v({2, 0}), v({0, 3}), v({-4, -4})}, {{0, 1}, {1, 2}, {2, 0}});
        CHECK(f.rays[0] == v({1, 0}));
        CHECK(f.rays[1] == v({0, 1}));
        CHECK(f.rays[2] == v({-1, -1}));
    }
    SUBCASE("overlapping cones rejected") {
        CHECK_THROWS_WITH_AS(make_fan(2, {v({1, 0}), v({0, 1}), v({1, 1})}, {{0, 1}, {0, 2}}),
                             doctest::Contains("OverlappingCones"), Error);
    }
    SUBCASE("no cones rejected") {
        CHECK_THROWS_WITH_AS(make_fan(2, {}, {}), doctest::Contains("EmptyFan"), Error);
    }
    SUBCASE("unused ray rejected") {
        CHECK_THROWS_WITH_AS(make_fan(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}}),
                             doctest::Contains("InvalidFan"), Error);
    }
    SUBCASE("cone with a line rejected") {
        CHECK_THROWS_WITH_AS(make_fan(1, {v({1}), v({-1})}, {{0, 1}}),
                             doctest::Contains("strongly convex"), Error);
    }
    SUBCASE("interior generator rejected") {
        CHECK_THROWS_WITH_AS(make_fan(2, {v({1, 0}), v({0, 1}), v({1, 1})}, {{0, 1, 2}}),
                             doctest::Contains("extreme"), Error);
    }
}

TEST_CASE("completeness by facet pairing") {
    CHECK(is_complete(fan_p2()));
    CHECK_FALSE(is_complete(fan_quadrant()));
    for (int n = 0; n <= 3; ++n) CHECK(is_complete(fan_hirzebruch(n)));
    CHECK(is_complete(fan_p3()));
    CHECK(is_complete(fan_p1xp2()));
    CHECK(is_complete(fan_p1cubed()));
    CHECK(is_complete(fan_cone_over_square()) == false);

    SUBCASE("non-pure fan raises NotPure") {
        Fan f = make_fan(2, {v({1, 0}), v({0, 1}), v({-1, 0})}, {{0, 1}, {2}});
        CHECK_THROWS_WITH_AS(is_complete(f), doctest::Contains("NotPure"), Error);
    }
}

TEST_CASE("simplicial and smooth predicates") {
    CHECK(is_simplicial(fan_p2()));
    CHECK(is_smooth(fan_p2()));

    Fan z2 = fan_z2_quotient();  // determinant -2
    CHECK(is_simplicial(z2));
    CHECK_FALSE(is_smooth(z2));

    Fan cos = fan_cone_over_square();  // 4 rays in rank 3
    CHECK_FALSE(is_simplicial(cos));
    CHECK_FALSE(is_smooth(cos));
}

TEST_CASE("star quotient") {
    SUBCASE("zero cone returns the fan itself") {
        Fan f = fan_p2();
        CHECK(star_quotient(f, Cone{{}}) == f);
    }
    SUBCASE("P2 modulo a ray is P1") {
        Fan q = star_quotient(fan_p2(), Cone{{0}});
        CHECK(q.dim == 1);
        CHECK(q.rays.size() == 2);
        CHECK(is_complete(q));
    }
    SUBCASE("Hirzebruch modulo the (0,1) ray is P1") {
        Fan q = star_quotient(fan_hirzebruch(3), Cone{{1}});
        CHECK(q.dim == 1);
        CHECK(q.rays.size() == 2);
        CHECK(is_complete(q));
    }
    SUBCASE("maximal cone gives the fan of a point") {
        Fan q = star_quotient(fan_p2(), Cone{{0, 1}});
        CHECK(q.dim == 0);
        CHECK(q.rays.empty());
        CHECK(is_complete(q));
    }
    SUBCASE("cone not in fan") {
        CHECK_THROWS_WITH_AS(star_quotient(fan_p2(), Cone{{0, 1, 2}}),
                             doctest::Contains("ConeNotInFan"), Error);
    }
    SUBCASE("non-face subset of a non-simplicial cone is rejected") {
        Fan f = fan_cone_over_square();
        // (0,0,1),(1,1,1) span a diagonal plane through the cone's interior
        CHECK_THROWS_WITH_AS(star_quotient(f, Cone{{0, 3}}), doctest::Contains("ConeNotInFan"),
                             Error);
        // while (0,0,1),(1,0,1) is an honest facet
        Fan q = star_quotient(f, Cone{{0, 1}});
        CHECK(q.dim == 1);
    }
    SUBCASE("dimension is additive") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 10; ++trial) {
            Fan f = testing::random_complete_fan(rng, 3);
            for (size_t k = 0; k < f.max_cones.size(); ++k) {
                const Cone& c = f.max_cones[k];
                Cone face{{c.ray_indices[0], c.ray_indices[1]}};
                Fan q = star_quotient(f, face);
                CHECK(q.dim == f.dim - 2);
            }
        }
    }
}

TEST_CASE("fan file round trip") {
    const char* p2_text =
        "# projective plane\n"
        "dim: 2\n"
        "rays:\n"
        "1 0\n"
        "0 1\n"
        "-1 -1\n"
        "cones:\n"
        "0 1\n"
        "1 2\n"
        "2 0\n";
    Fan f = parse_fan_file(p2_text);
    CHECK(f == fan_p2());

    SUBCASE("whitespace and comment variants parse to the same fan") {
        const char* messy =
            "\n  # comment\ndim: 2\n\nrays:\n 1   0  # e1\n0 1\n-1 -1\ncones:\n0 1\n1 2\n0 2\n";
        CHECK(parse_fan_file(messy) == f);
    }
    SUBCASE("serialize then parse is the identity") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 12; ++trial) {
            Fan g = testing::random_complete_fan(rng, trial % 2 ? 2 : 3);
            CHECK(parse_fan_file(serialize_fan(g)) == g);
        }
    }
    SUBCASE("missing rays section") {
        CHECK_THROWS_WITH_AS(parse_fan_file("dim: 2\ncones:\n0 1\n"), doctest::Contains("rays"),
                             Error);
        CHECK_THROWS_WITH_AS(parse_fan_file("rays:\n1 0\n"), doctest::Contains("SyntaxError"),
                             Error);
    }
    SUBCASE("bad tokens carry line numbers") {
        CHECK_THROWS_WITH_AS(parse_fan_file("dim: 2\nrays:\n1 x\ncones:\n0\n"),
                             doctest::Contains("line 3"), Error);
    }
}

TEST_CASE("fan properties on random complete fans") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 16; ++trial) {
        Fan f = testing::random_complete_fan(rng, trial % 2 ? 2 : 3);
        CHECK(is_complete(f));
        CHECK(is_simplicial(f));
        if (is_smooth(f)) CHECK(is_simplicial(f));
        CHECK(star_quotient(f, Cone{{}}) == f);
    }
}
