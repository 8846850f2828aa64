#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torica/rational.hpp"

namespace torica {

// Finitely generated abelian group Z^free_rank + Z/m1 + ... (each mi >= 2).
struct GradedGroup {
    int free_rank = 0;
    IntVec torsion;

    bool operator==(const GradedGroup& other) const = default;
};

// Element of a GradedGroup; residues are kept reduced into [0, mi).
struct GradedElement {
    IntVec free;
    IntVec residues;

    bool operator==(const GradedElement& other) const = default;
};

GradedElement ge_zero(const GradedGroup& g);
GradedElement ge_make(const GradedGroup& g, IntVec free, IntVec residues);
GradedElement ge_add(const GradedGroup& g, const GradedElement& a, const GradedElement& b);
GradedElement ge_sub(const GradedGroup& g, const GradedElement& a, const GradedElement& b);
GradedElement ge_scale(const GradedGroup& g, const Int& k, const GradedElement& a);
bool ge_is_zero(const GradedElement& a);
// Additive order of a, or 0 if infinite.
Int ge_order(const GradedGroup& g, const GradedElement& a);
std::string ge_to_string(const GradedElement& a);

// Exponent vector of a monomial; compared lexicographically via std::map.
using Exponents = std::vector<int>;

// Multivariate polynomial with exact rational coefficients. Terms are kept in
// a map so every traversal is deterministic.
struct Polynomial {
    int nvars = 0;
    std::map<Exponents, Rat> terms;

    static Polynomial zero(int nvars) { return Polynomial{nvars, {}}; }
    static Polynomial variable(int nvars, int i, const Rat& coeff = Rat(1));
    static Polynomial monomial(int nvars, Exponents e, const Rat& coeff);
    static Polynomial constant(int nvars, const Rat& c);

    bool is_zero() const { return terms.empty(); }
    int total_degree() const;
    Rat coeff(const Exponents& e) const;

    bool operator==(const Polynomial& other) const = default;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rat& c, const Polynomial& a);
Polynomial poly_pow(const Polynomial& a, int e);

// Q[x_j := h]. h must live in the same variable set.
Polynomial substitute(const Polynomial& q, int j, const Polynomial& h);

// Terms of q with positive x_i-exponent, divided by x_i.             (q = x_i * result + rest)
Polynomial divide_out(const Polynomial& q, int i);
// Terms of q with zero x_i-exponent.
Polynomial free_of(const Polynomial& q, int i);
// Homogeneous slice of the given total degree.
Polynomial degree_part(const Polynomial& q, int degree);

std::string poly_to_string(const Polynomial& p, const std::vector<std::string>& names);

// Laurent polynomials (integer exponents of either sign); used for symbolic
// verification of rational parametrizations.
struct Laurent {
    int nvars = 0;
    std::map<IntVec, Rat> terms;

    static Laurent from_polynomial(const Polynomial& p);
    static Laurent monomial(int nvars, IntVec e, const Rat& coeff);
    bool is_zero() const { return terms.empty(); }
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent laurent_pow(const Laurent& a, int e);
// Evaluate an ordinary polynomial at a tuple of Laurent polynomials.
Laurent evaluate_at(const Polynomial& p, const std::vector<Laurent>& tuple);

// Cox-style presentation: named variables with multidegrees and one relation.
struct GradedVariable {
    std::string name;
    GradedElement degree;
};

struct GradedPresentation {
    GradedGroup group;
    std::vector<GradedVariable> variables;
    Polynomial relation;  // empty allowed (polynomial ring)

    int nvars() const { return static_cast<int>(variables.size()); }
};

// Multidegree of an exponent vector (entries may be negative).
GradedElement multidegree(const GradedPresentation& p, const std::vector<Int>& exponents);
GradedElement multidegree(const GradedPresentation& p, const Exponents& exponents);

// True iff every monomial of the relation has one and the same multidegree.
bool validate_homogeneous(const GradedPresentation& p);
// Multidegree shared by all monomials of q (nullopt if q = 0 or inhomogeneous).
std::optional<GradedElement> homogeneous_degree(const GradedPresentation& p, const Polynomial& q);

GradedPresentation parse_presentation_file(const std::string& text);
std::string serialize_presentation(const GradedPresentation& p);

}  // namespace torica
