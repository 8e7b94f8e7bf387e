#ifndef RIGIDCURVES_RAT_HPP
#define RIGIDCURVES_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rigidcurves {

// Exact scalars. mpq_class keeps exactly the invariants we need:
// positive denominator, fully reduced, zero canonical as 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

bool is_zero(const Rat& a);
bool is_integer(const Rat& a);

// Parses "p/q" or "p"; throws ParseError on malformed input or q == 0.
Rat rat_from_string(const std::string& s);
std::string to_string(const Rat& a);

Rat rat_pow(const Rat& a, long e);  // e may be negative if a != 0
Int int_pow(const Int& a, unsigned long e);

// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
Rat binomial(long n, long k);

long long to_ll(const Int& a);

} // namespace rigidcurves

#endif
