#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superkac {

using Rational = mpq_class;

// "3", "-1/2"; always canonical.
std::string to_string(const Rational& q);

// Accepts integers and p/q fractions with optional sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace superkac
