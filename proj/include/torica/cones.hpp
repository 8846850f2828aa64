#pragma once

#include <vector>

#include "torica/rational.hpp"

namespace torica::cones {

// V-description of a rational polyhedral cone: lineality basis + extreme rays,
// all primitive integer vectors.
struct Generators {
    std::vector<IntVec> lineality;
    std::vector<IntVec> rays;
};

// Generators of {x in Q^dim : <a, x> >= 0 for every row a}, by the double
// description method. Exact; intended for desk-scale fans, not bulk polyhedra.
Generators solve_inequalities(const std::vector<IntVec>& ineqs, int dim);

// Dual cone of cone(gens): {m : <m, g> >= 0 for all g}.
inline Generators dual_cone(const std::vector<IntVec>& gens, int dim) {
    return solve_inequalities(gens, dim);
}

// Membership x in C, where dual = dual_cone(generators of C).
bool contains(const Generators& dual, const IntVec& x);

// Is cone(gens) strongly convex (no line through the origin)?
bool is_pointed(const Generators& dual, int dim);

// Drops generators lying in the cone of the others (and zero vectors /
// duplicates). Input and output are primitive vectors.
std::vector<IntVec> extreme_rays(std::vector<IntVec> gens, int dim);

}  // namespace torica::cones
