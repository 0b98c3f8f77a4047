#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nashgraph {

// All payoffs, probabilities and LP quantities are exact.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses an integer, a decimal literal ("0.125", "-3.", ".5"; no exponents)
// or a fraction "p/q". Decimals are converted exactly. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view token);

// Canonical text: "n" for integers, "p/q" otherwise (always reduced).
std::string to_string(const Rational& value);

// Comma separated list, e.g. "1/2,1/2".
RationalVector parse_rational_list(std::string_view text);
std::string join(const RationalVector& values, std::string_view sep = ",");

}  // namespace nashgraph
