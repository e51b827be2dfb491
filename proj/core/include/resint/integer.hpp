#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace resint {

/// Arbitrary-precision signed integer used for every coefficient and degree.
using Integer = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when k < 0, n < 0 or k > n.
Integer binomial(long n, long k);

/// Integer power with a non-negative exponent.
Integer ipow(const Integer& base, unsigned exponent);

/// Decimal rendering with comma thousands separators, e.g. -20,855,205.
std::string group_thousands(const Integer& value);

/// Parses a base-10 integer with optional sign; throws ParseError on bad input.
Integer parse_integer(const std::string& text);

}  // namespace resint
