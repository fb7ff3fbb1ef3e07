#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace lpm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n, k) with C(n, 0) = 1 for every integer n and C(n, k) = 0 for
/// k < 0, for negative n, and for k > n >= 0.
Int binomial(const Int& n, long k);

Int factorial(unsigned n);

/// Parses "3/4", "-1/2" or a plain integer token.
Rat parse_rational(std::string_view token);

std::string to_string(const Int& v);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rat& v);

}  // namespace lpm
