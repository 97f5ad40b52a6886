#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "idkit/errors.hpp"

namespace idkit {

using Int = boost::multiprecision::mpz_int;

// Exact rational scalar. Arithmetic results are always canonical (lowest
// terms, positive denominator); rat_parse preserves that invariant for
// values read from text.
using Rat = boost::multiprecision::mpq_rational;

/** Parse "p/q" or "p" (optional sign, arbitrary precision). */
Rat rat_parse(const std::string& s);

/** Format as "p/q", or "p" when the denominator is 1. */
std::string rat_format(const Rat& q);

double rat_to_double(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace idkit
