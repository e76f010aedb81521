#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q"; the result is canonical (gcd 1, q > 0).
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// r^e for a (possibly negative) integer exponent; r must be nonzero when e < 0.
Rational pow(const Rational& r, long e);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace sn
