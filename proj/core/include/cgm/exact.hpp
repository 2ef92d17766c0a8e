#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cgm {

/// Arbitrary-precision rational used wherever a sign decision must be exact
/// (region boundaries, polynomial coefficient positivity).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact value of a finite double. Every finite double is a dyadic rational,
/// so no information is lost.
Rational to_rational(double x);

double to_double(const Rational& r);

/// Parses "3", "-1.25", "16/3", "2.5e-3", "-7/2". Decimal literals are read
/// as the decimal they spell ("0.1" is exactly 1/10), not as the nearest
/// double. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Integer value of r if it has denominator 1.
std::optional<BigInt> as_integer(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace cgm
