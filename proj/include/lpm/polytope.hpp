#pragma once

#include <vector>

#include "lpm/lpm.hpp"
#include "lpm/numeric.hpp"

namespace lpm {

using RatPoint = std::vector<Rat>;

struct Bend {
  Rat x;
  Rat y;
  bool operator==(const Bend&) const = default;
};

/// Bends (x_i, y_i), i = 0..n, one on each line x + y = i.
using GeneralizedPath = std::vector<Bend>;

/// Indicator step vector as a rational point.
RatPoint step_point(const StepVector& v);

/// Membership in the base polytope P_M: 0 <= p_i <= 1 and
/// lheight(i) <= p_1 + ... + p_i <= uheight(i) for all i.
bool contains(const Lpm& m, const RatPoint& p);

/// Strict interiority for connected M: all box and band inequalities
/// strict at the indices where they are not forced equalities.
bool is_interior(const Lpm& m, const RatPoint& p);

/// Bends (i - s_i, s_i) with s_i the i-th prefix sum of p.
GeneralizedPath path_from_point(const Lpm& m, const RatPoint& p);

/// Step vector of a generalized path; inverse of path_from_point.
RatPoint point_from_path(const Lpm& m, const GeneralizedPath& path);

/// |kP_M  ∩ Z^n| by DP over the lines l_0..l_n with integer state
/// h in [k*lheight(i), k*uheight(i)] and transitions h -> h' for
/// h <= h' <= h + k.
Int count_lattice_points(const Lpm& m, long k);

/// Independent oracle: enumerates all vectors in {0..k}^n and checks the
/// k-scaled band system directly.  Rejects (k+1)^n > cap with TooLarge.
Int brute_force_count(const Lpm& m, long k, long long cap = 100000000);

}  // namespace lpm
