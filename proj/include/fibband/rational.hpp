#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fibband {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Arbitrary-precision rational, kept in canonical (lowest-terms) form.
using Rat = mpq_class;

/// Exact rational num/den. Throws std::invalid_argument on a zero denominator.
Rat make_rat(long num, long den = 1);

/// Canonical rendering: integers as plain decimal ("-12"), everything else
/// as "p/q" in lowest terms with the sign on the numerator.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);

/// Parses "p" or "p/q" with an optional sign on either part. No whitespace,
/// no decimal points, denominator must be nonzero.
std::optional<Rat> parse_rational(std::string_view text);

/// Floor division, rounding toward minus infinity. Divisor must be positive.
long floor_div(long a, long b);

/// Ceiling division. Divisor must be positive.
long ceil_div(long a, long b);

}  // namespace fibband
