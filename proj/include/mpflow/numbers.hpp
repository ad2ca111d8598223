#ifndef MPFLOW_NUMBERS_HPP
#define MPFLOW_NUMBERS_HPP

#include <gmpxx.h>
#include <string>

namespace mpf {

// Exact arbitrary-precision integer and rational scalars. Every value in the
// decision path of the solver is one of these two; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" with optional sign. Throws Error{malformed_rational}
/// on bad syntax or zero denominator.
Rat parse_rat(const std::string& s);

Int parse_int(const std::string& s);

/// Canonical form "p/q", or just "p" when the denominator is 1.
std::string rat_string(const Rat& r);

inline Rat rat_of(const Int& z) { return Rat(z); }

}  // namespace mpf

#endif
