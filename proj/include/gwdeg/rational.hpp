// Exact rational scalars. GMP's mpq_class keeps values in lowest terms with
// positive denominator, which is the canonical form assumed everywhere.
#ifndef GWDEG_RATIONAL_HPP
#define GWDEG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "gwdeg/errors.hpp"

namespace gwdeg {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

// Accepts "n" or "n/d" with optional leading minus; canonicalizes.
Rational rat_from_string(const std::string& text);

}  // namespace gwdeg

#endif
