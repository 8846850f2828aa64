#include "torica/builtin_examples.hpp"

#include "torica/coxrat.hpp"

namespace torica {

namespace {
IntVec v(std::initializer_list<long> xs) {
    IntVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
}  // namespace

Fan fan_p1() { return make_fan(1, {v({1}), v({-1})}, {{0}, {1}}); }

Fan fan_p2() {
    return make_fan(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
}

Fan fan_p1xp1() {
    return make_fan(2, {v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})},
                    {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
}

Fan fan_hirzebruch(int n) {
    return make_fan(2, {v({1, 0}), v({0, 1}), v({-1, n}), v({0, -1})},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan fan_p3() {
    return make_fan(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({-1, -1, -1})},
                    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Fan fan_p1xp2() {
    return make_fan(3,
                    {v({1, 0, 0}), v({-1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({0, -1, -1})},
                    {{0, 2, 3}, {0, 3, 4}, {0, 4, 2}, {1, 2, 3}, {1, 3, 4}, {1, 4, 2}});
}

Fan fan_p1cubed() {
    std::vector<IntVec> rays = {v({1, 0, 0}), v({-1, 0, 0}), v({0, 1, 0}),
                                v({0, -1, 0}), v({0, 0, 1}), v({0, 0, -1})};
    std::vector<std::vector<int>> cones;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) cones.push_back({a, b, c});
    return make_fan(3, std::move(rays), std::move(cones));
}

Fan fan_del_pezzo6() {
    return make_fan(2,
                    {v({1, 0}), v({1, 1}), v({0, 1}), v({-1, 0}), v({-1, -1}), v({0, -1})},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

Fan fan_quadrant() { return make_fan(2, {v({1, 0}), v({0, 1})}, {{0, 1}}); }

Fan fan_z2_quotient() { return make_fan(2, {v({1, 1}), v({1, -1})}, {{0, 1}}); }

Fan fan_cone_over_square() {
    return make_fan(3, {v({0, 0, 1}), v({1, 0, 1}), v({0, 1, 1}), v({1, 1, 1})}, {{0, 1, 2, 3}});
}

AbstractPairData pair_example_1_9() {
    // P^2 with two lines and a conic: classes 1, 1, 2 in Z, coefficients 1, 1, 1/2.
    return make_pair(2, 1,
                     {{{Rat(1)}, Rat(1), "L1"},
                      {{Rat(1)}, Rat(1), "L2"},
                      {{Rat(2)}, Rat(1, 2), "C"}});
}

AbstractPairData pair_example_1_10(int n) {
    // Hirzebruch surface: Delta = 2 E_inf + sum of n+2 fibres (not log canonical).
    std::vector<PairComponent> comps = {{{Rat(1), Rat(0)}, Rat(2), "Einf"}};
    for (int i = 0; i < n + 2; ++i)
        comps.push_back({{Rat(0), Rat(1)}, Rat(1), "F" + std::to_string(i + 1)});
    return make_pair(2, 2, std::move(comps), /*permissive=*/true);
}

AbstractPairData pair_example_1_11(int n) {
    // Same configuration with E_inf of coefficient one: log canonical,
    // -(K+Delta) only pseudo-effective.
    std::vector<PairComponent> comps = {{{Rat(1), Rat(0)}, Rat(1), "Einf"}};
    for (int i = 0; i < n + 2; ++i)
        comps.push_back({{Rat(0), Rat(1)}, Rat(1), "F" + std::to_string(i + 1)});
    return make_pair(2, 2, std::move(comps));
}

AbstractPairData pair_example_1_12() {
    // Small resolution of the rank-4 quadric threefold: six coefficient-one
    // divisors, three in each ruling class.
    std::vector<PairComponent> comps;
    for (int i = 0; i < 3; ++i) comps.push_back({{Rat(1), Rat(0)}, Rat(1), "D" + std::to_string(i + 1)});
    for (int i = 3; i < 6; ++i) comps.push_back({{Rat(0), Rat(1)}, Rat(1), "D" + std::to_string(i + 1)});
    return make_pair(3, 2, std::move(comps));
}

AbstractPairData pair_example_1_13() {
    // Elliptic curve with empty boundary.
    return make_pair(1, 1, {});
}

AbstractPairData pair_section7() {
    return make_pair(3, 3,
                     {{{Rat(1), Rat(0), Rat(0)}, Rat(1), "Gy"},
                      {{Rat(1), Rat(0), Rat(0)}, Rat(1), "Gy'"},
                      {{Rat(0), Rat(1), Rat(0)}, Rat(1), "Gz"},
                      {{Rat(0), Rat(1), Rat(0)}, Rat(1), "Gz'"},
                      {{Rat(0), Rat(0), Rat(1)}, Rat(1), "E2"}});
}

std::vector<ExampleRow> run_paper_examples() {
    std::vector<ExampleRow> rows;
    auto add = [&](std::string id, std::string quantity, std::string expected,
                   std::string computed) {
        bool pass = expected == computed;
        rows.push_back({std::move(id), std::move(quantity), std::move(expected),
                        std::move(computed), pass});
    };

    {
        AbstractPairData p = pair_example_1_9();
        add("example 1.9", "c", "1/2", to_string(min_complexity(p).c));
        std::string bracket;
        for (int i : boundary_bracket(p)) bracket += (bracket.empty() ? "" : "+") +
                                                     p.components[i].name;
        add("example 1.9", "bracket", "L1+L2", bracket);
    }
    for (int n = 1; n <= 5; ++n) {
        add("example 1.10 n=" + std::to_string(n), "c", to_string(Rat(-n)),
            to_string(min_complexity(pair_example_1_10(n)).c));
    }
    for (int n = 1; n <= 5; ++n) {
        add("example 1.11 n=" + std::to_string(n), "c", to_string(Rat(1 - n)),
            to_string(min_complexity(pair_example_1_11(n)).c));
    }
    add("example 1.12", "c", "-1", to_string(min_complexity(pair_example_1_12()).c));
    add("example 1.13", "gamma", "2", to_string(absolute_complexity(pair_example_1_13())));
    {
        Fan p2 = fan_p2();
        InvariantDivisor toric_boundary{RatVec(3, Rat(1))};
        AbstractPairData p = pair_from_fan(p2, toric_boundary);
        add("toric pair P2", "c", "0", to_string(min_complexity(p).c));
        add("toric pair P2", "gamma", "0", to_string(absolute_complexity(p)));
    }
    {
        Section7Report rep = section7_report(4);
        add("section 7 d=4", "gamma", "1", to_string(rep.gamma));
        add("section 7 d=4", "verdict", "DoubleCoverThenRational",
            verdict_name(rep.certificate.verdict));
        add("section 7 d=4", "cover verdict", "Rational",
            rep.certificate.cover ? verdict_name(rep.certificate.cover->verdict) : "(none)");
        add("section 7 d=4", "genus", "49", to_string(rep.genus));
        add("section 7 d=4", "irrationality gate", "pass", rep.gate_passes ? "pass" : "fail");
        Section7Report rep3 = section7_report(3);
        add("section 7 d=3", "irrationality gate", "fail", rep3.gate_passes ? "pass" : "fail");
    }
    return rows;
}

}  // namespace torica
