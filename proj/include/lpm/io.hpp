#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpm/distributive.hpp"
#include "lpm/lpm.hpp"
#include "lpm/polytope.hpp"

namespace lpm {

/// Matroid spec grammar:
///   spec  := term (' + ' term)*
///   term  := 'S(' a1 ',' ... ')'  |  'U=' bits ',L=' bits
/// Parse errors carry the offending position in the message.
Lpm parse_matroid_spec(std::string_view spec);

Snake parse_snake(std::string_view spec);        // "S(2,3,2)"
std::vector<long> parse_runs(std::string_view spec, char tag);  // S(...) / Z(...)

/// Comma-separated "num/den" tokens.
RatPoint parse_rat_point(std::string_view s);
std::string format_rat_point(const RatPoint& p);

std::string format_lpm(const Lpm& m);  // "U=...,L=..."

}  // namespace lpm
