#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "heightlab/errors.hpp"

namespace heightlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p", or "-p/q". Throws parse_error on malformed input or
// zero denominator.
Rational parse_rational(const std::string& s);

// Canonical "p/q" form; integers render without the "/1".
std::string format_rational(const Rational& q);

// q^e with e possibly negative (q must be nonzero for e < 0).
Rational pow_rational(const Rational& q, long e);

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// gcd of the absolute values of a vector of integers; 0 for the zero vector.
Integer content(const std::vector<Integer>& v);

} // namespace heightlab
