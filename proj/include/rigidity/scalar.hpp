#pragma once

#include <string>

#include <gmpxx.h>

namespace rigidity {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rigidity
