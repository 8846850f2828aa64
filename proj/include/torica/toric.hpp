#pragma once

#include <optional>
#include <vector>

#include "torica/fan.hpp"
#include "torica/graded.hpp"
#include "torica/int_matrix.hpp"

namespace torica {

// Weil divisor class: free coordinates plus reduced torsion residues.
using ClassElement = GradedElement;

// A_{n-1}(X) as the cokernel of the ray-pairing map M -> Z^{#rays}, presented
// through the stored Smith transform so classes (and torsion representatives)
// are constructive.
struct ClassGroup {
    int free_rank = 0;
    IntVec torsion;  // cyclic orders >= 2, divisibility chain

    int num_rays = 0;
    int rank = 0;       // rank of the ray matrix (= dim when rays span)
    IntMatrix u;        // unimodular #rays x #rays, U * raymatrix * V = D
    IntVec divisors;    // elementary divisors of the ray matrix

    GradedGroup group() const { return GradedGroup{free_rank, torsion}; }

    // Class of an integer ray-coefficient vector.
    ClassElement degree(const IntVec& coeffs) const;
    // Free part of the class, as rationals (for rank computations).
    RatVec degree_free(const RatVec& coeffs) const;
};

ClassGroup class_group(const Fan& f);

// Sum of b_i D_i over the invariant prime divisors, exact coefficients.
struct InvariantDivisor {
    RatVec coeffs;  // one per ray of the fan

    bool operator==(const InvariantDivisor& other) const = default;
};

InvariantDivisor canonical_divisor(const Fan& f);
InvariantDivisor principal_divisor(const Fan& f, const IntVec& m);  // div(chi^m): <m, u_i>

ClassElement divisor_class(const Fan& f, const ClassGroup& cg, const InvariantDivisor& d);

// Per-maximal-cone covectors m_sigma with <m_sigma, u_i> = -b_i on the rays
// of sigma. Exists iff the divisor is Q-Cartier.
struct SupportFunction {
    std::vector<RatVec> covectors;  // parallel to f.max_cones
};

std::optional<SupportFunction> support_function(const Fan& f, const InvariantDivisor& d);

// Value <m_sigma, x> for any maximal cone containing x (OutsideSupport else).
Rat evaluate(const Fan& f, const SupportFunction& sf, const IntVec& x);

bool is_nef(const Fan& f, const InvariantDivisor& d);
bool is_ample(const Fan& f, const InvariantDivisor& d);

// Log discrepancy of the divisorial valuation at lattice point v with respect
// to (X, Delta): v = sum c_j u_j over the containing cone, result
// sum c_j (1 - a_j). Requires a simplicial fan.
Rat log_discrepancy(const Fan& f, const InvariantDivisor& delta, const IntVec& v);

// All coefficients <= 1; equivalent to log discrepancy >= 0 everywhere.
bool lc_check_invariant(const Fan& f, const InvariantDivisor& delta);

// Lexicographically first divisor with entries in {0..N} (N doubling up to 8)
// that is ample and has zero coefficient on `forced_zero`. nullopt when the
// bounded search is exhausted.
std::optional<InvariantDivisor> find_ample(const Fan& f, const std::vector<int>& forced_zero);

// Constructive form of the lifting lemma: given sigma (defining V = V(sigma))
// and a ray rho (the fixed divisor D), produce B on X supported off V and D
// restricting to a chosen ample A on V. All four postconditions are verified,
// not trusted.
struct LiftResult {
    StarQuotient quotient;
    std::vector<int> w_rays;        // rays of the quotient fan whose divisors contain W
    InvariantDivisor a;             // ample divisor on the quotient fan
    InvariantDivisor b;             // lifted divisor on f
};

LiftResult lift_from_invariant_subvariety(const Fan& f, const Cone& sigma, int rho);

// Cox presentation of the fan: one variable per ray graded by the class
// group, no relation.
GradedPresentation cox_presentation(const Fan& f);

// Divisor file: "divisor:" followed by one rational per ray, in ray order.
InvariantDivisor parse_divisor_file(const std::string& text, const Fan& f);
std::string serialize_divisor(const InvariantDivisor& d);

}  // namespace torica
