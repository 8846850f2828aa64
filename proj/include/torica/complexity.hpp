#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torica/fan.hpp"
#include "torica/rational.hpp"
#include "torica/toric.hpp"

namespace torica {

// Minimal input for the complexity calculus: the dimension, the free rank of
// the divisor class group, and the boundary components as classes in the free
// quotient with their coefficients.
struct PairComponent {
    RatVec cls;   // length group_rank
    Rat coeff;    // in (0,1]; larger admitted only under `permissive`
    std::string name;
};

struct AbstractPairData {
    int n = 0;
    int group_rank = 0;
    std::vector<PairComponent> components;
};

// Validates the boundary condition (coefficients in (0,1], shapes).
AbstractPairData make_pair(int n, int group_rank, std::vector<PairComponent> components,
                           bool permissive = false);

// One decomposition sum a_i S_i <= Delta; S_i are multiplicity vectors over
// the component indices.
struct DecompositionPart {
    Rat a;                       // >= 0
    std::vector<Int> s;          // componentwise multiplicities, >= 0
    std::vector<std::string> names;  // display only
};

struct Decomposition {
    std::vector<DecompositionPart> parts;
};

struct ComplexityReport {
    int n = 0;
    int r = 0;  // rank of the span of the S_i classes
    Rat d;      // sum of the a_i
    Rat c;      // n + r - d
    Decomposition witness;
};

// Complexity n + r - d of one decomposition (DecompositionExceedsBoundary if
// sum a_i S_i exceeds Delta componentwise).
ComplexityReport decomposition_complexity(const AbstractPairData& pair, const Decomposition& dec);

// Minimum over the partition family: each set partition {G_1..G_k} of the
// components, S_i = sum of the components of G_i, a_i = min coefficient in
// G_i. Ties: fewer parts, then restricted-growth-string order. This is the
// partition-family minimum; the Def-style infimum also admits decompositions
// that omit components and is not claimed here.
ComplexityReport min_complexity(const AbstractPairData& pair);

// Absolute complexity n + rho - sum of coefficients.
Rat absolute_complexity(const AbstractPairData& pair);

// Indices with coefficient strictly greater than 1/2.
std::vector<int> boundary_bracket(const AbstractPairData& pair);

// Local complexity n - sum of coefficients.
Rat local_complexity(int n, const RatVec& coefficients);

// Verdict of the toric characterisation checked on an invariant pair.
struct TheoremVerdict {
    bool pass = false;
    std::string failed_hypothesis;  // empty when all hypotheses hold
    Rat c;
    Int floor_2c;
    int missing = 0;                // invariant divisors absent from the witness support
    bool bracket_dominated = false; // D >= [[Delta]] (automatic, reported)
    std::optional<ComplexityReport> report;
};

// Hypotheses: complete simplicial fan, boundary coefficients in [0,1],
// -(K+Delta) nef, partition-family complexity < 1. Conclusion checked: at
// most floor(2c) invariant divisors are missing from the decomposition.
TheoremVerdict toric_theorem_check(const Fan& f, const InvariantDivisor& delta);

// The abstract pair of an invariant boundary: components are the rays with
// positive coefficient, classes taken in ClassGroup tensor Q.
AbstractPairData pair_from_fan(const Fan& f, const InvariantDivisor& delta, bool permissive = false);

AbstractPairData parse_pair_file(const std::string& text, bool permissive = false);
std::string serialize_pair(const AbstractPairData& pair);

}  // namespace torica
