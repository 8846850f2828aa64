#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace torica {

// All arithmetic in the library is exact: GMP integers and rationals, no
// floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Largest integer <= q.
Int rat_floor(const Rat& q);

// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& q);

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). No whitespace.
std::optional<Rat> parse_rational(const std::string& s);

std::string to_string(const Rat& q);
std::string to_string(const Int& z);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// gcd of absolute values; gcd of the empty set / all zeros is 0.
Int vec_gcd(const IntVec& v);

// Divides v by the gcd of its entries (zero vector is returned unchanged).
IntVec primitive(IntVec v);

bool is_zero(const IntVec& v);

IntVec vec_neg(IntVec v);
// a*x + b*y componentwise.
IntVec vec_comb(const Int& a, const IntVec& x, const Int& b, const IntVec& y);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);

}  // namespace torica
