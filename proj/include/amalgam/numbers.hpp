#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace amalgam {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace amalgam
