#pragma once

// Text conversions for exact integers and rationals.
//
// Accepted rational syntax: "N", "N/D", or a finite decimal "x.yz".
// An optional leading '-' is accepted; callers that need a positive value
// check the sign themselves.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gpseq {

/// Parses "N", "N/D" or "x.yz" exactly. Throws std::invalid_argument on
/// malformed input or a zero denominator. The result is canonical.
mpq_class parse_rational(std::string_view text);

/// "N" when the denominator is 1, otherwise "N/D".
std::string to_string(const mpq_class& value);

/// Always "N/D", even for integers.
std::string to_fraction_string(const mpq_class& value);

std::string to_string(const mpz_class& value);

}  // namespace gpseq
