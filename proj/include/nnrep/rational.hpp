#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nnrep {

// All arithmetic in this library is exact. Comparisons between squared
// distances, linear tests, and polynomial values never round.
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with optional sign on either part; q must be nonzero.
// Non-canonical inputs ("4/6", "1/-2") are accepted and normalized.
rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with
// q > 1 and the sign carried by p.
std::string format_rational(const rational& value);

// Smallest integer >= value.
bigint ceil_rational(const rational& value);

// Smallest e >= 0 with 2^e >= value; requires value >= 1.
unsigned ceil_log2(const bigint& value);

}  // namespace nnrep
