#pragma once

#include <string>
#include <vector>

#include "torica/complexity.hpp"
#include "torica/fan.hpp"

namespace torica {

// Compiled-in regression rows for the worked examples; each row compares a
// computed invariant against its published value.
struct ExampleRow {
    std::string id;
    std::string quantity;
    std::string expected;
    std::string computed;
    bool pass = false;
};

std::vector<ExampleRow> run_paper_examples();

// Reference fans used across examples and tests.
Fan fan_p1();
Fan fan_p2();
Fan fan_p1xp1();
Fan fan_hirzebruch(int n);
Fan fan_p3();
Fan fan_p1xp2();
Fan fan_p1cubed();
Fan fan_del_pezzo6();  // P2 blown up in the three invariant points
Fan fan_quadrant();    // single cone <e1, e2> (affine plane)
Fan fan_z2_quotient(); // rays (1,1), (1,-1), one cone; Z/2 class group
Fan fan_cone_over_square();

// Abstract pair data of the worked examples.
AbstractPairData pair_example_1_9();
AbstractPairData pair_example_1_10(int n);  // permissive: E_inf coefficient 2
AbstractPairData pair_example_1_11(int n);
AbstractPairData pair_example_1_12();
AbstractPairData pair_example_1_13();
AbstractPairData pair_section7();

}  // namespace torica
