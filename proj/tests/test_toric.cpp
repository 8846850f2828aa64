#include <doctest.h>

#include <random>

#include "fan_generators.hpp"
#include "torica/builtin_examples.hpp"
#include "torica/errors.hpp"
#include "torica/toric.hpp"

using namespace torica;

namespace {

IntVec v(std::initializer_list<long> xs) {
    IntVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

RatVec rv(std::initializer_list<long> xs) {
    RatVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

InvariantDivisor ray_divisor(const Fan& f, int i) {
    RatVec c(f.rays.size(), Rat(0));
    c[i] = 1;
    return InvariantDivisor{c};
}

}  // namespace

TEST_CASE("class group") {
    SUBCASE("P2: Z, equal ray classes") {
        Fan f = fan_p2();
        ClassGroup cg = class_group(f);
        CHECK(cg.free_rank == 1);
        CHECK(cg.torsion.empty());
        ClassElement d0 = divisor_class(f, cg, ray_divisor(f, 0));
        ClassElement d1 = divisor_class(f, cg, ray_divisor(f, 1));
        ClassElement d2 = divisor_class(f, cg, ray_divisor(f, 2));
        CHECK(d0 == d1);
        CHECK(d1 == d2);
        CHECK_FALSE(ge_is_zero(d0));
    }
    SUBCASE("Hirzebruch surfaces: Z^2") {
        for (int n = 0; n <= 3; ++n) {
            ClassGroup cg = class_group(fan_hirzebruch(n));
            CHECK(cg.free_rank == 2);
            CHECK(cg.torsion.empty());
        }
    }
    SUBCASE("quotient cone: torsion Z/2") {
        Fan f = fan_z2_quotient();
        ClassGroup cg = class_group(f);
        CHECK(cg.free_rank == 0);
        REQUIRE(cg.torsion.size() == 1);
        CHECK(cg.torsion[0] == 2);
        // D0 generates the torsion
        ClassElement d0 = divisor_class(f, cg, ray_divisor(f, 0));
        CHECK(ge_order(cg.group(), d0) == 2);
    }
    SUBCASE("rays must span") {
        Fan line_in_plane = make_fan(2, {v({1, 0}), v({-1, 0})}, {{0}, {1}});
        CHECK_THROWS_WITH_AS(class_group(line_in_plane), doctest::Contains("RaysDoNotSpan"),
                             Error);
    }
    SUBCASE("principal divisors are trivial; zero divisor is trivial") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 10; ++trial) {
            Fan f = testing::random_complete_fan(rng, trial % 2 ? 2 : 3);
            ClassGroup cg = class_group(f);
            CHECK(ge_is_zero(divisor_class(f, cg, InvariantDivisor{RatVec(f.rays.size(), Rat(0))})));
            std::uniform_int_distribution<long> dist(-4, 4);
            IntVec m(f.dim);
            for (Int& x : m) x = dist(rng);
            CHECK(ge_is_zero(divisor_class(f, cg, principal_divisor(f, m))));
        }
    }
    SUBCASE("non-integral coefficients rejected") {
        Fan f = fan_p2();
        ClassGroup cg = class_group(f);
        InvariantDivisor d{RatVec{Rat(1, 2), Rat(0), Rat(0)}};
        CHECK_THROWS_WITH_AS(divisor_class(f, cg, d), doctest::Contains("NonIntegral"), Error);
    }
}

TEST_CASE("support functions and Q-Cartier") {
    SUBCASE("smooth fan: every divisor has one") {
        Fan f = fan_p2();
        auto sf = support_function(f, InvariantDivisor{rv({3, -1, 2})});
        REQUIRE(sf.has_value());
        for (size_t k = 0; k < f.max_cones.size(); ++k)
            for (int i : f.max_cones[k].ray_indices)
                CHECK(dot(sf->covectors[k], f.rays[i]) ==
                      -InvariantDivisor{rv({3, -1, 2})}.coeffs[i]);
    }
    SUBCASE("Z/2 cone: D0 not Cartier but 2 D0 is Q-Cartier (exact solve)") {
        Fan f = fan_z2_quotient();
        // <m,(1,1)> = -1, <m,(1,-1)> = 0 has the rational solution m = (-1/2,-1/2)
        auto sf = support_function(f, ray_divisor(f, 0));
        REQUIRE(sf.has_value());
        CHECK(sf->covectors[0] == RatVec{Rat(-1, 2), Rat(-1, 2)});
    }
    SUBCASE("cone over the square: D0 is not Q-Cartier") {
        Fan f = fan_cone_over_square();
        CHECK_FALSE(support_function(f, ray_divisor(f, 0)).has_value());
        // but the full boundary sum is (m = (0,0,-1) works on all four rays)
        CHECK(support_function(f, InvariantDivisor{rv({1, 1, 1, 1})}).has_value());
    }
}

TEST_CASE("canonical divisor") {
    Fan f = fan_hirzebruch(2);
    InvariantDivisor k = canonical_divisor(f);
    CHECK(k.coeffs == rv({-1, -1, -1, -1}));
    // K + sum D_i = 0 on any fan
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        Fan g = testing::random_complete_fan(rng, 2);
        InvariantDivisor kk = canonical_divisor(g);
        for (size_t i = 0; i < g.rays.size(); ++i) CHECK(kk.coeffs[i] + Rat(1) == 0);
    }
}

// Hand-computed convexity table for -K on the Hirzebruch surface F_n with
// rays u1=(1,0), u2=(0,1), u3=(-1,n), u4=(0,-1) and the four quadrant-style
// cones: the covectors solving <m,u> = -1 on each cone are
//   sigma(u1,u2): (-1,-1)   sigma(u2,u3): (1-n,-1)
//   sigma(u3,u4): (n+1,1)   sigma(u4,u1): (-1,1)
// and the only inequality that can fail is <(-1,-1),(-1,n)> = 1-n >= -1,
// i.e. n <= 2.
TEST_CASE("nef and ample against the hand-computed F_n table") {
    struct Row {
        int n;
        long m[4][2];
        bool nef;
        bool ample;
    };
    const Row table[] = {
        {0, {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, true, true},
        {1, {{-1, -1}, {0, -1}, {2, 1}, {-1, 1}}, true, true},
        {2, {{-1, -1}, {-1, -1}, {3, 1}, {-1, 1}}, true, false},
        {3, {{-1, -1}, {-2, -1}, {4, 1}, {-1, 1}}, false, false},
    };
    for (const Row& row : table) {
        Fan f = fan_hirzebruch(row.n);
        InvariantDivisor minus_k{rv({1, 1, 1, 1})};
        auto sf = support_function(f, minus_k);
        REQUIRE(sf.has_value());
        for (int k = 0; k < 4; ++k) {
            CHECK(sf->covectors[k][0] == Rat(row.m[k][0]));
            CHECK(sf->covectors[k][1] == Rat(row.m[k][1]));
        }
        CHECK(is_nef(f, minus_k) == row.nef);
        CHECK(is_ample(f, minus_k) == row.ample);
    }
}

TEST_CASE("nef and ample basics") {
    SUBCASE("-K on P2 is ample") {
        Fan f = fan_p2();
        InvariantDivisor minus_k{rv({1, 1, 1})};
        CHECK(is_nef(f, minus_k));
        CHECK(is_ample(f, minus_k));
    }
    SUBCASE("zero divisor is nef but not ample") {
        Fan f = fan_p2();
        InvariantDivisor zero{rv({0, 0, 0})};
        CHECK(is_nef(f, zero));
        CHECK_FALSE(is_ample(f, zero));
    }
    SUBCASE("incomplete fan rejected") {
        Fan f = fan_quadrant();
        CHECK_THROWS_WITH_AS(is_nef(f, InvariantDivisor{rv({1, 1})}),
                             doctest::Contains("NotComplete"), Error);
    }
    SUBCASE("non Q-Cartier rejected") {
        // complete non-simplicial fan: face fan of the cube has the
        // cone-over-square obstruction; use the octahedron's dual. Simpler:
        // cone over square is not complete, so take nef on it -> NotComplete;
        // Q-Cartier error needs a complete example, use the 3-dim fan over
        // the cube's faces.
        std::vector<IntVec> rays = {v({1, 1, 1}),  v({1, 1, -1}),  v({1, -1, 1}),  v({1, -1, -1}),
                                    v({-1, 1, 1}), v({-1, 1, -1}), v({-1, -1, 1}), v({-1, -1, -1})};
        std::vector<std::vector<int>> cones = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5},
                                               {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}};
        Fan cube = make_fan(3, rays, cones);
        REQUIRE(is_complete(cube));
        CHECK_THROWS_WITH_AS(is_nef(cube, ray_divisor(cube, 0)),
                             doctest::Contains("NotQCartier"), Error);
        // the boundary itself is Cartier on the cube fan
        CHECK(is_nef(cube, InvariantDivisor{RatVec(8, Rat(1))}));
    }
    SUBCASE("ample implies nef; nef invariant under principal twists") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<long> coeff(-2, 3), mdist(-3, 3);
        for (int trial = 0; trial < 40; ++trial) {
            Fan f = testing::random_complete_fan(rng, trial % 2 ? 2 : 3);
            RatVec c(f.rays.size());
            for (Rat& x : c) x = coeff(rng);
            InvariantDivisor d{c};
            if (!support_function(f, d)) continue;
            bool nef = is_nef(f, d);
            if (is_ample(f, d)) CHECK(nef);
            IntVec m(f.dim);
            for (Int& x : m) x = mdist(rng);
            InvariantDivisor twisted = d;
            InvariantDivisor pr = principal_divisor(f, m);
            for (size_t i = 0; i < twisted.coeffs.size(); ++i) twisted.coeffs[i] += pr.coeffs[i];
            CHECK(is_nef(f, twisted) == nef);
        }
    }
}

TEST_CASE("log discrepancy") {
    SUBCASE("at a ray: 1 - a_i") {
        Fan f = fan_p2();
        InvariantDivisor delta{rv({0, 0, 0})};
        delta.coeffs[1] = Rat(3, 4);
        CHECK(log_discrepancy(f, delta, f.rays[1]) == Rat(1, 4));
        CHECK(log_discrepancy(f, delta, f.rays[0]) == Rat(1));
    }
    SUBCASE("blow-up of the origin of the affine plane") {
        Fan f = fan_quadrant();
        InvariantDivisor zero{rv({0, 0})};
        CHECK(log_discrepancy(f, zero, v({1, 1})) == Rat(2));
        InvariantDivisor full{rv({1, 1})};
        CHECK(log_discrepancy(f, full, v({1, 1})) == Rat(0));  // log canonical place
    }
    SUBCASE("outside the support") {
        Fan f = fan_quadrant();
        CHECK_THROWS_WITH_AS(log_discrepancy(f, InvariantDivisor{rv({0, 0})}, v({-1, 0})),
                             doctest::Contains("OutsideSupport"), Error);
    }
    SUBCASE("not simplicial") {
        Fan f = fan_cone_over_square();
        CHECK_THROWS_WITH_AS(log_discrepancy(f, InvariantDivisor{rv({0, 0, 0, 0})}, v({0, 0, 1})),
                             doctest::Contains("NotSimplicial"), Error);
    }
    SUBCASE("linear in v within a cone") {
        std::mt19937_64 rng(13);
        std::uniform_int_distribution<long> num(0, 3);
        Fan f = fan_p2();
        InvariantDivisor delta{RatVec{Rat(1, 2), Rat(1, 3), Rat(1)}};
        for (int trial = 0; trial < 20; ++trial) {
            IntVec a = v({num(rng), num(rng)});
            IntVec b = v({num(rng), num(rng)});
            IntVec sum = vec_comb(Int(1), a, Int(1), b);
            // a, b, a+b all lie in the first quadrant cone of P2
            Rat la = log_discrepancy(f, delta, a);
            Rat lb = log_discrepancy(f, delta, b);
            CHECK(log_discrepancy(f, delta, sum) == la + lb);
        }
    }
}

TEST_CASE("lc check") {
    Fan f = fan_hirzebruch(1);
    CHECK(lc_check_invariant(f, InvariantDivisor{rv({1, 1, 1, 1})}));
    CHECK(lc_check_invariant(f, InvariantDivisor{rv({0, 0, 0, 0})}));
    // Delta = 2 E_inf + fibres on a Hirzebruch surface is not log canonical
    CHECK_FALSE(lc_check_invariant(f, InvariantDivisor{rv({1, 2, 1, 1})}));
    // equivalence with the pointwise discrepancy bound at the rays
    for (size_t i = 0; i < f.rays.size(); ++i) {
        InvariantDivisor d{rv({1, 2, 1, 1})};
        Rat disc = log_discrepancy(f, d, f.rays[i]);
        CHECK((disc >= 0) == (d.coeffs[i] <= 1));
    }
}

TEST_CASE("lift from invariant subvariety") {
    SUBCASE("P1xP1, sigma = ray e1, rho = ray -e1: vertical divisor") {
        Fan f = fan_p1xp1();
        LiftResult lift = lift_from_invariant_subvariety(f, Cone{{0}}, 1);
        CHECK(lift.quotient.fan.dim == 1);
        // A is a point class on V = P1 and B its vertical preimage, zero on
        // the horizontal rays e1, -e1
        CHECK(lift.b.coeffs[0] == 0);
        CHECK(lift.b.coeffs[1] == 0);
        Rat vertical = lift.b.coeffs[2] + lift.b.coeffs[3];
        CHECK(vertical > 0);
    }
    SUBCASE("zero cone: B equals A up to the identity projection") {
        Fan f = fan_p2();
        LiftResult lift = lift_from_invariant_subvariety(f, Cone{{}}, 0);
        CHECK(lift.quotient.fan == f);
        CHECK(lift.b.coeffs == lift.a.coeffs);
        CHECK(lift.b.coeffs[0] == 0);  // rho coefficient
    }
    SUBCASE("maximal cone: V is a point, A = B = 0") {
        Fan f = fan_p2();
        LiftResult lift = lift_from_invariant_subvariety(f, Cone{{0, 1}}, 2);
        CHECK(lift.quotient.fan.dim == 0);
        for (const Rat& b : lift.b.coeffs) CHECK(b == 0);
    }
    SUBCASE("postconditions hold on the smooth fan library") {
        std::vector<Fan> library = {fan_p2(),   fan_p1xp1(),      fan_hirzebruch(1),
                                    fan_hirzebruch(2), fan_hirzebruch(3), fan_del_pezzo6(),
                                    fan_p3(),   fan_p1xp2(),      fan_p1cubed()};
        std::mt19937_64 rng(47);
        int successes = 0;
        for (int trial = 0; trial < 60 && successes < 25; ++trial) {
            const Fan& f = library[trial % library.size()];
            std::uniform_int_distribution<int> cone_pick(0, static_cast<int>(f.max_cones.size()) - 1);
            const Cone& top = f.max_cones[cone_pick(rng)];
            std::uniform_int_distribution<int> size_pick(0, static_cast<int>(top.ray_indices.size()));
            int sz = size_pick(rng);
            Cone sigma{std::vector<int>(top.ray_indices.begin(), top.ray_indices.begin() + sz)};
            std::uniform_int_distribution<int> ray_pick(0, static_cast<int>(f.rays.size()) - 1);
            int rho = ray_pick(rng);
            LiftResult lift = lift_from_invariant_subvariety(f, sigma, rho);
            // library's own re-checks passed; assert the headline facts again
            for (const Rat& b : lift.b.coeffs) CHECK(b >= 0);
            CHECK(lift.b.coeffs[rho] == 0);
            for (int i : sigma.ray_indices) CHECK(lift.b.coeffs[i] == 0);
            ++successes;
        }
        CHECK(successes >= 25);
    }
}

TEST_CASE("cox presentation") {
    SUBCASE("P2: 3 variables of equal degree over Z") {
        GradedPresentation p = cox_presentation(fan_p2());
        CHECK(p.group.free_rank == 1);
        CHECK(p.group.torsion.empty());
        REQUIRE(p.nvars() == 3);
        CHECK(p.variables[0].degree == p.variables[1].degree);
        CHECK(p.variables[1].degree == p.variables[2].degree);
        CHECK(p.relation.is_zero());
    }
    SUBCASE("F_n: 4 variables over Z^2") {
        for (int n = 0; n <= 3; ++n) {
            GradedPresentation p = cox_presentation(fan_hirzebruch(n));
            CHECK(p.group.free_rank == 2);
            CHECK(p.nvars() == 4);
        }
    }
    SUBCASE("Z/2 cone: 2 variables graded by Z/2") {
        GradedPresentation p = cox_presentation(fan_z2_quotient());
        CHECK(p.group.free_rank == 0);
        REQUIRE(p.group.torsion.size() == 1);
        CHECK(p.group.torsion[0] == 2);
        CHECK(p.nvars() == 2);
    }
    SUBCASE("variable count = dim + free rank on complete simplicial fans") {
        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 12; ++trial) {
            Fan f = testing::random_complete_fan(rng, trial % 2 ? 2 : 3);
            GradedPresentation p = cox_presentation(f);
            CHECK(p.nvars() == f.dim + p.group.free_rank);
        }
    }
}

TEST_CASE("divisor file parsing") {
    Fan f = fan_p2();
    InvariantDivisor d = parse_divisor_file("divisor: 1 1/2 -3\n", f);
    CHECK(d.coeffs == RatVec{Rat(1), Rat(1, 2), Rat(-3)});
    CHECK(parse_divisor_file(serialize_divisor(d), f) == d);
    CHECK_THROWS_WITH_AS(parse_divisor_file("divisor: 1 2\n", f), doctest::Contains("3 rays"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_divisor_file("1 2 3\n", f), doctest::Contains("divisor:"), Error);
}
