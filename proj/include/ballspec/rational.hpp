#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ballspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an integer token ("-3") or a fraction token ("7/12"). Anything
/// else, including decimals, yields nullopt. A zero denominator throws
/// ParseError.
std::optional<Rational> parse_rational(std::string_view token);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace ballspec
