#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace qapc {

// Every weight in the toolchain is an exact rational. Floats never enter the
// certification path; parsers convert decimal literals exactly when allowed.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rat_num(const Rat &r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat &r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat &r) { return r < 0 ? Rat(-r) : r; }

// "p" when integral, "p/q" otherwise.
std::string rat_str(const Rat &r);

// Accepts optional sign, then digits, "digits/digits", or "digits.digits"
// (decimals convert exactly, e.g. "1.25" -> 5/4). Returns nullopt on any
// other shape, including empty strings and division by zero.
std::optional<Rat> rat_parse(const std::string &text);

// True when the token contains '.', 'e' or 'E' between digits: the shapes we
// treat as float literals for the --allow-float-as-rational gate.
bool looks_like_float(const std::string &text);

} // namespace qapc
