#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "torica/rational.hpp"

namespace torica {

// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    IntVec entries;  // rows*cols, row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> data);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix from_columns(const std::vector<IntVec>& cols);

    Int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

    IntVec row(int i) const;
    IntVec column(int j) const;
    IntMatrix transpose() const;
    IntVec apply(const IntVec& x) const;  // this * x

    bool operator==(const IntMatrix& other) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// U*A*V = D with U, V unimodular and D diagonal (up to rectangular shape),
// d1 | d2 | ... | dk, zero divisors trailing. elementary_divisors has
// min(rows, cols) entries, all non-negative.
struct SmithDecomposition {
    IntMatrix u;  // rows x rows
    IntMatrix d;  // rows x cols
    IntMatrix v;  // cols x cols
    IntVec elementary_divisors;
};

// Pivot selection takes the smallest nonzero |entry| of the remaining block,
// which keeps intermediate entries from blowing up on desk-scale inputs.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Rank over Q, by fraction-free (Bareiss) elimination. Independent of the
// Smith route so the two can be cross-checked.
int rank(const IntMatrix& a);

// Basis of {v : A v = 0} as a saturated sublattice of Z^cols
// (columns of the Smith V beyond the rank).
std::vector<IntVec> kernel_basis(const IntMatrix& a);

// Determinant of a square matrix (Bareiss).
Int determinant(const IntMatrix& a);

// One integer solution of A x = b, if any.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

// One rational solution of A x = b (free variables set to 0), if consistent.
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

// Rank over Q of a rational matrix given as rows.
int rational_rank(const std::vector<RatVec>& rows);

}  // namespace torica
