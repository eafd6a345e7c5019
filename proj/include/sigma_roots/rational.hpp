#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sigma_roots {

/// Arbitrary-precision reduced fraction.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p" or "p/q" with optional sign on p; q must be positive.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

} // namespace sigma_roots
