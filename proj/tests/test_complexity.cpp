#include <doctest.h>

#include <random>

#include "fan_generators.hpp"
#include "torica/builtin_examples.hpp"
#include "torica/complexity.hpp"
#include "torica/errors.hpp"

using namespace torica;

namespace {

Decomposition singletons(const AbstractPairData& pair) {
    Decomposition dec;
    for (size_t j = 0; j < pair.components.size(); ++j) {
        DecompositionPart part;
        part.a = pair.components[j].coeff;
        part.s.assign(pair.components.size(), Int(0));
        part.s[j] = 1;
        part.names = {pair.components[j].name};
        dec.parts.push_back(std::move(part));
    }
    return dec;
}

}  // namespace

TEST_CASE("decomposition complexity on the worked examples") {
    SUBCASE("two lines and a conic on P2: c = 2 + 1 - 5/2 = 1/2") {
        AbstractPairData pair = pair_example_1_9();
        ComplexityReport rep = decomposition_complexity(pair, singletons(pair));
        CHECK(rep.r == 1);
        CHECK(rep.d == Rat(5, 2));
        CHECK(rep.c == Rat(1, 2));
    }
    SUBCASE("2 E_inf + fibres on F_n: c = 2 + 2 - (n+4) = -n (permissive)") {
        for (int n = 1; n <= 5; ++n) {
            AbstractPairData pair = pair_example_1_10(n);
            ComplexityReport rep = decomposition_complexity(pair, singletons(pair));
            CHECK(rep.c == Rat(-n));
        }
    }
    SUBCASE("six divisors on the small resolution: c = 3 + 2 - 6 = -1") {
        AbstractPairData pair = pair_example_1_12();
        ComplexityReport rep = decomposition_complexity(pair, singletons(pair));
        CHECK(rep.r == 2);
        CHECK(rep.d == Rat(6));
        CHECK(rep.c == Rat(-1));
    }
    SUBCASE("exceeding the boundary is rejected") {
        AbstractPairData pair = pair_example_1_9();
        Decomposition dec = singletons(pair);
        dec.parts[2].a = Rat(3, 4);  // conic coefficient is only 1/2
        CHECK_THROWS_WITH_AS(decomposition_complexity(pair, dec),
                             doctest::Contains("DecompositionExceedsBoundary"), Error);
    }
}

TEST_CASE("minimizer over the partition family") {
    SUBCASE("toric pair on P2: c = 0 via singletons") {
        InvariantDivisor boundary{RatVec(3, Rat(1))};
        AbstractPairData pair = pair_from_fan(fan_p2(), boundary);
        ComplexityReport rep = min_complexity(pair);
        CHECK(rep.c == 0);
        CHECK(rep.witness.parts.size() == 3);
    }
    SUBCASE("worked examples attain the published values") {
        CHECK(min_complexity(pair_example_1_9()).c == Rat(1, 2));
        for (int n = 1; n <= 5; ++n) {
            CHECK(min_complexity(pair_example_1_10(n)).c == Rat(-n));
            CHECK(min_complexity(pair_example_1_11(n)).c == Rat(1 - n));
        }
        CHECK(min_complexity(pair_example_1_12()).c == Rat(-1));
    }
    SUBCASE("two independent coefficient-one components in dimension 2: minimum 2") {
        AbstractPairData pair = make_pair(
            2, 2, {{{Rat(1), Rat(0)}, Rat(1), "A"}, {{Rat(0), Rat(1)}, Rat(1), "B"}});
        ComplexityReport rep = min_complexity(pair);
        CHECK(rep.c == Rat(2));
        // tie between singletons and the grouped partition: fewer parts wins
        CHECK(rep.witness.parts.size() == 1);
    }
    SUBCASE("empty boundary: c = n") {
        ComplexityReport rep = min_complexity(pair_example_1_13());
        CHECK(rep.c == Rat(1));
    }
    SUBCASE("component cap") {
        std::vector<PairComponent> comps(13, PairComponent{{Rat(1)}, Rat(1), "D"});
        AbstractPairData pair = make_pair(3, 1, comps);
        CHECK_THROWS_WITH_AS(min_complexity(pair), doctest::Contains("TooManyComponents"), Error);
    }
    SUBCASE("minimum is at most the singleton decomposition and at least c <= gamma") {
        std::mt19937_64 rng(61);
        std::uniform_int_distribution<int> nc(1, 6), rank(1, 3);
        std::uniform_int_distribution<long> cls(-2, 2);
        std::uniform_int_distribution<int> den(1, 4);
        for (int trial = 0; trial < 40; ++trial) {
            int rho = rank(rng), k = nc(rng);
            std::vector<PairComponent> comps;
            for (int j = 0; j < k; ++j) {
                RatVec c(rho);
                for (Rat& x : c) x = cls(rng);
                int d = den(rng);
                std::uniform_int_distribution<int> num(1, d);
                comps.push_back({c, Rat(num(rng), d), "P" + std::to_string(j)});
            }
            AbstractPairData pair = make_pair(2, rho, comps);
            ComplexityReport rep = min_complexity(pair);
            CHECK(rep.c <= decomposition_complexity(pair, singletons(pair)).c);
            CHECK(rep.c <= absolute_complexity(pair));
            CHECK(rep.c == Rat(pair.n + rep.r) - rep.d);
        }
    }
}

TEST_CASE("absolute complexity") {
    CHECK(absolute_complexity(pair_section7()) == Rat(1));
    CHECK(absolute_complexity(pair_example_1_13()) == Rat(2));
    InvariantDivisor boundary{RatVec(3, Rat(1))};
    CHECK(absolute_complexity(pair_from_fan(fan_p2(), boundary)) == Rat(0));
}

TEST_CASE("boundary bracket") {
    SUBCASE("conic at exactly 1/2 is excluded") {
        AbstractPairData pair = pair_example_1_9();
        CHECK(boundary_bracket(pair) == std::vector<int>{0, 1});
    }
    SUBCASE("all coefficients 1/2: empty") {
        AbstractPairData pair = make_pair(
            2, 1, {{{Rat(1)}, Rat(1, 2), "A"}, {{Rat(1)}, Rat(1, 2), "B"}});
        CHECK(boundary_bracket(pair).empty());
    }
    SUBCASE("all coefficients 1: everything") {
        AbstractPairData pair = pair_example_1_12();
        CHECK(boundary_bracket(pair).size() == 6);
    }
}

TEST_CASE("local complexity") {
    CHECK(local_complexity(2, {Rat(1), Rat(1)}) == Rat(0));
    CHECK(local_complexity(3, {Rat(1), Rat(1), Rat(1, 2)}) == Rat(1, 2));
    CHECK(local_complexity(2, {}) == Rat(2));
    CHECK_THROWS_AS(local_complexity(2, {Rat(-1)}), Error);
}

TEST_CASE("coefficient boundary condition") {
    CHECK_THROWS_WITH_AS(make_pair(2, 1, {{{Rat(1)}, Rat(2), "D"}}),
                         doctest::Contains("CoefficientOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(make_pair(2, 1, {{{Rat(1)}, Rat(0), "D"}}),
                         doctest::Contains("CoefficientOutOfRange"), Error);
    CHECK_NOTHROW(make_pair(2, 1, {{{Rat(1)}, Rat(2), "D"}}, /*permissive=*/true));
}

TEST_CASE("toric characterisation check") {
    Fan p2 = fan_p2();
    SUBCASE("toric boundary passes with c = 0") {
        TheoremVerdict v = toric_theorem_check(p2, InvariantDivisor{RatVec(3, Rat(1))});
        CHECK(v.pass);
        CHECK(v.c == 0);
        CHECK(v.missing == 0);
        CHECK(v.bracket_dominated);
    }
    SUBCASE("D0 + D1 + 3/4 D2: c = 1/4, passes") {
        TheoremVerdict v =
            toric_theorem_check(p2, InvariantDivisor{RatVec{Rat(1), Rat(1), Rat(3, 4)}});
        CHECK(v.pass);
        CHECK(v.c == Rat(1, 4));
        CHECK(v.floor_2c == 0);
        CHECK(v.missing == 0);
    }
    SUBCASE("D0 + D1: c = 1 fails the complexity hypothesis") {
        TheoremVerdict v = toric_theorem_check(p2, InvariantDivisor{RatVec{Rat(1), Rat(1), Rat(0)}});
        CHECK_FALSE(v.pass);
        CHECK(v.failed_hypothesis == "complexity >= 1");
        CHECK(v.c == Rat(1));
    }
    SUBCASE("non log canonical boundary reported") {
        TheoremVerdict v = toric_theorem_check(fan_hirzebruch(1),
                                               InvariantDivisor{RatVec{Rat(1), Rat(2), Rat(1), Rat(1)}});
        CHECK_FALSE(v.pass);
        CHECK(v.failed_hypothesis == "(X,Delta) not log canonical");
    }
    SUBCASE("non-nef boundary reported") {
        // -(K + Delta) on F_3 with the full boundary is -K, which is not nef
        TheoremVerdict v = toric_theorem_check(fan_hirzebruch(3),
                                               InvariantDivisor{RatVec(4, Rat(0))});
        CHECK_FALSE(v.pass);
        CHECK(v.failed_hypothesis == "-(K+Delta) not nef");
    }
    SUBCASE("incomplete fan reported") {
        TheoremVerdict v = toric_theorem_check(fan_quadrant(), InvariantDivisor{RatVec(2, Rat(1))});
        CHECK_FALSE(v.pass);
        CHECK(v.failed_hypothesis == "fan not complete");
    }
}

TEST_CASE("pair file round trip") {
    const char* text =
        "n: 2\n"
        "rho: 1\n"
        "components:\n"
        "class = 1 ; coeff = 1 ; name = L1\n"
        "class = 1 ; coeff = 1 ; name = L2\n"
        "class = 2 ; coeff = 1/2 ; name = C\n";
    AbstractPairData pair = parse_pair_file(text);
    CHECK(pair.n == 2);
    CHECK(pair.group_rank == 1);
    REQUIRE(pair.components.size() == 3);
    CHECK(pair.components[2].coeff == Rat(1, 2));
    CHECK(min_complexity(pair).c == Rat(1, 2));

    AbstractPairData back = parse_pair_file(serialize_pair(pair));
    CHECK(back.components.size() == pair.components.size());
    CHECK(min_complexity(back).c == Rat(1, 2));

    CHECK_THROWS_WITH_AS(parse_pair_file("n: 2\ncomponents:\n"), doctest::Contains("rho"), Error);
    CHECK_THROWS_WITH_AS(parse_pair_file(text + std::string("class = 1 ; coeff = 3/2\n")),
                         doctest::Contains("CoefficientOutOfRange"), Error);
}
