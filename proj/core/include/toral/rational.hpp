// Exact rational scalars (GMP-backed) with string I/O.
//
// Accepted input forms: "p/q", integers, and finite decimals with optional
// exponent ("0.025", "-1.5e-3"). Finite decimals are promoted exactly.
#pragma once

#include <gmpxx.h>
#include <string>

namespace toral {

using Rat = mpq_class;

// Parse "p/q" | integer | finite decimal. Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" if denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace toral
