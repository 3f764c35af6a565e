#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cumbound {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number (canonical scalar of the library).
using Rat = boost::multiprecision::cpp_rational;

/// A scalar that is exact where a closed form exists and a double otherwise.
/// Holds Rat for the exact path, double for the float path.
using Value = std::variant<Rat, double>;

inline bool is_exact(const Value& v) { return std::holds_alternative<Rat>(v); }

double to_double(const Rat& r);
double to_double(const Value& v);
long double to_long_double(const Rat& r);
long double to_long_double(const Int& x);

Int factorial(int n);
Int binomial(int n, int k);

/// (n)!! with the usual conventions (-1)!! = 0!! = 1.
Int double_factorial(int n);

/// Parses "a/b", an integer, or a decimal string ("1.25", "-3e-2") into an
/// exact rational. Decimal strings convert exactly (base-10 digits scaled by
/// a power of ten); binary floats are never parsed as exact values.
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(std::string_view text);

/// Renders a rational as "a" when integral, "a/b" otherwise.
std::string format_rational(const Rat& r);

/// Shortest round-trip decimal rendering of a double (std::to_chars).
std::string format_double(double d);

}  // namespace cumbound
