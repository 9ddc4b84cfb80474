// Exact rational scalar shared by all geometry code.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cwn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// -1, 0 or +1.
inline int sgn(const Rat& v) { return v.sign(); }

/// Parses "p/q" or a bare integer "p". Throws TopoError{ParseError} on
/// malformed text or a zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical "p/q" form; the denominator is always written ("3" -> "3/1").
std::string format_rat(const Rat& value);

/// Exact fixed-point decimal with `places` fractional digits, rounded half
/// away from zero. Display helper (SVG coordinates); never used in predicates.
std::string decimal_digits(const Rat& value, int places);

}  // namespace cwn
