#pragma once

// One canonical textual form for every exact value: ascending powers,
// explicit ^ exponents, spaces around + and -.  The parsers accept the full
// expression grammar (numbers, t, x, + - * / ^, parentheses, implicit
// multiplication), so every rendered value round-trips.

#include <string>

#include "narayana/xpoly.hpp"

namespace narayana {

std::string format_value(const BigInt& v);
std::string format_value(const Rational& v);
std::string format_value(const IntPoly& p, const std::string& var = "t");
std::string format_value(const RatFunc& f);
std::string format_value(const XPoly& p);

// Expression parsers; throw ParseError on malformed input and when the
// expression does not lie in the requested ring (e.g. x in an IntPoly, a
// genuine denominator in an IntPoly).
XPoly parse_xpoly(const std::string& text);
RatFunc parse_ratfunc(const std::string& text);
IntPoly parse_intpoly(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace narayana
