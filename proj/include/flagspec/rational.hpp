#pragma once

// Exact arithmetic used throughout: GMP integers and canonicalized rationals.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace flagspec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). The result
/// is canonicalized; a zero denominator or junk throws Error(invalid_argument).
Rational parse_rational(std::string_view text);

/// Parses a decimal integer of any size.
BigInt parse_bigint(std::string_view text);

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Converts an integral rational to long; throws if not integral or too big.
long to_long(const Rational& r);

BigInt pow2(unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);

/// Parses a comma-separated list of rationals, e.g. "1,-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace flagspec
