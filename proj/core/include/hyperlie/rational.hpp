#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperlie {

/// Exact coefficient field. GMP keeps every value in lowest terms with a
/// positive denominator, zero being 0/1.
using Rational = mpq_class;

/// Parses "7", "-4/3", "+2/6" (reduced on read). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace hyperlie
