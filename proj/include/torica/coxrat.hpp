#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torica/graded.hpp"

namespace torica {

// Rank over Q of the symmetric matrix of the degree-2 part of Q.
int quadratic_rank(const Polynomial& q);

enum class GermClass { Smooth, cA, NotCA };

// Hypersurface germ gates: Smooth when the linear part is nonzero, cA when
// the quadratic rank is at least two. Requires zero constant term.
GermClass classify_germ(const Polynomial& q);

// Smallest (i, j), i < j, with monomial x_i x_j in Q.
std::optional<std::pair<int, int>> find_cross_term(const Polynomial& q);

// One recorded change of variables x_var := replacement (degree-preserving,
// invertible). Applied to polynomials as Q <- Q[x_var := replacement].
struct Substitution {
    int var;
    Polynomial replacement;
};

struct NormalForm {
    Polynomial q;                         // Q' = x_i x_j - q, q free of x_i
    Polynomial normal;                    // x_i x_j - q itself
    std::vector<Substitution> substitutions;
};

// Brings Q (with cross term x_i x_j) to x_i x_j - q by degree-preserving
// substitutions into x_j; iterates at most total-degree(Q) times and throws
// EliminationStalled beyond that.
NormalForm eliminate_to_normal_form(const GradedPresentation& p, const Polynomial& q, int i, int j);

struct MuData {
    IntVec mu;        // exponent vector e_i + e_j - exp(nu), multidegree 0
    Exponents nu;     // lexicographically first monomial of q
};

// The Laurent monomial mu = x_i x_j / nu of the rationality argument.
// ZeroQ when q = 0 (reducible relation).
MuData build_mu(const GradedPresentation& p, const Polynomial& q, int i, int j);

enum class Verdict { Toric, Rational, DoubleCoverThenRational, Inconclusive };

const char* verdict_name(Verdict v);

struct RationalityCertificate {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;  // set for Inconclusive

    // Rational verdict
    std::optional<MuData> mu;
    std::vector<Substitution> substitutions;
    std::optional<std::pair<int, int>> cross_pair;
    std::optional<Polynomial> normal_form;  // x_i x_j - q, cross coefficient 1
    bool mu_primitive_in_m = false;         // verified only when the kernel lattice is available
    bool mu_primitivity_checked = false;

    // Diagonal branch bookkeeping
    std::optional<std::pair<Rat, Rat>> scaling;  // (c1, c2) of the two squares
    bool requires_sqrt = false;                   // -c2/c1 is not a rational square

    // DoubleCoverThenRational verdict
    std::optional<GradedElement> torsion_class;
    std::shared_ptr<const GradedPresentation> regraded;
    std::shared_ptr<const RationalityCertificate> cover;
};

// Decision procedure of the Cox-ring rationality argument:
//   (0) empty relation -> Toric
//   (1) cross term -> eliminate, build mu -> Rational
//   (2) quadratic rank >= 2 -> two diagonal squares; equal degrees -> shear
//       into (1); else the degree difference is 2-torsion ->
//       DoubleCoverThenRational with the regraded cover's certificate
//   (3) otherwise Inconclusive
RationalityCertificate rationality_certificate(const GradedPresentation& p);

// Grading group replaced by G/<tau> for a 2-torsion tau; degrees reduced,
// relation untouched.
GradedPresentation regrade_double_cover(const GradedPresentation& p, const GradedElement& tau);

// The double-cover construction over P1 x P1: conic bundle relation
// x0^2 - x1^2 = q(y,z) x2^2 with q bihomogeneous of bidegree (2d, 2d) in the
// invariant monomials, graded by Z^3 + Z/2.
GradedPresentation section7_presentation(int d);

struct Section7Report {
    int d = 0;
    GradedPresentation presentation;
    Rat gamma;                 // absolute complexity of the associated pair
    Int genus;                 // (2d-1)^2, discriminant curve on P1 x P1
    Int martens_bound;         // 2d
    bool gate_passes = false;  // 2d > 6, i.e. d > 3: irrationality gate
    RationalityCertificate certificate;
};

Section7Report section7_report(int d);

std::string certificate_report(const GradedPresentation& p, const RationalityCertificate& cert);

}  // namespace torica
