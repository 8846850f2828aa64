#pragma once

#include <string>
#include <vector>

#include "torica/cones.hpp"
#include "torica/int_matrix.hpp"

namespace torica {

// A cone of a fan, as ordered (ascending) indices into the fan's ray list.
struct Cone {
    std::vector<int> ray_indices;

    bool operator==(const Cone& other) const = default;
};

// A fan: ambient lattice rank, primitive pairwise-distinct rays, and the
// maximal cones. Validated on construction (make_fan / parse_fan_file):
// rays primitive and used, listed generators extreme, cones strongly convex,
// any two cones meet in a common face. Immutable afterwards.
struct Fan {
    int dim = 0;
    std::vector<IntVec> rays;
    std::vector<Cone> max_cones;

    // Dual (inequality) description of each maximal cone, cached at
    // construction; used by membership, face and completeness tests.
    std::vector<cones::Generators> duals;

    bool operator==(const Fan& other) const {
        return dim == other.dim && rays == other.rays && max_cones == other.max_cones;
    }

    std::vector<IntVec> cone_rays(const Cone& c) const;
    // Dimension of a cone (rank of its ray span).
    int cone_dim(const Cone& c) const;
    // Does max cone k contain the lattice point x?
    bool cone_contains(int k, const IntVec& x) const;
    // Index of some maximal cone containing x, or -1.
    int find_containing_cone(const IntVec& x) const;
    // Is `face` (rays indexing into this fan) a face of max cone k?
    bool is_face_of(const Cone& face, int k) const;
    // Is `c` a cone of this fan (a face of some listed cone)?
    bool has_cone(const Cone& c) const;
};

Fan make_fan(int dim, std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones);

// True iff the cones cover N_R; decided by facet pairing, which requires the
// fan to be pure of top dimension (NotPure otherwise).
bool is_complete(const Fan& f);

bool is_simplicial(const Fan& f);
bool is_smooth(const Fan& f);

// The fan of the invariant subvariety V(sigma) in the quotient lattice
// N / (span(sigma) cap N), together with the projection and bookkeeping
// needed to transport divisors along it.
struct StarQuotient {
    Fan fan;
    IntMatrix projection;                // (dim - dim sigma) x dim, surjective
    std::vector<int> containing_cones;   // indices of max cones of f with sigma as a face
};

StarQuotient star_quotient_full(const Fan& f, const Cone& sigma);
Fan star_quotient(const Fan& f, const Cone& sigma);

Fan parse_fan_file(const std::string& text);
std::string serialize_fan(const Fan& f);

}  // namespace torica
