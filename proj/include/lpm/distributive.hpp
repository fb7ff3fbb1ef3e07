#pragma once

#include <vector>

#include "lpm/lpm.hpp"
#include "lpm/polytope.hpp"

namespace lpm {

/// Constraint system of the distributive polytope Q_M (connected M):
///   0 <= (-1)^{L_{i+1}} (q_{i+1} - q_i) <= 1   for i in [n-2]
///   0 <= q_i <= ub_i                            for i in [n-1]
/// with ub_i = uheight(i) - lheight(i).  flipped[i-1] records whether the
/// i-th difference constraint reads q_i - q_{i+1} (L_{i+1} = 1) or
/// q_{i+1} - q_i (L_{i+1} = 0).
struct QSystem {
  std::vector<bool> flipped;  // size n-2
  std::vector<long> ub;       // size n-1
};

QSystem q_system(const Lpm& m);

/// Membership of an integer vector in the k-th dilate of Q_M.
bool q_contains(const QSystem& q, const std::vector<long>& point, long k);
/// Rational membership in Q_M itself.
bool q_contains(const QSystem& q, const RatPoint& point);

/// Prefix-difference map q_i = sum_{j<=i} (p_j - L_j), i = 1..n-1.
RatPoint pi_map(const Lpm& m, const RatPoint& p);

/// Inverse: p_i = q_i - q_{i-1} + L_i with q_0 = 0 and
/// p_n = r - sum_{i<n} p_i.
RatPoint pi_inverse(const Lpm& m, const RatPoint& q);

/// Disconnected generalization: computes all prefix differences and drops
/// the indices where U and L meet (forced zeros); dimension n - c.
RatPoint psi_map(const Lpm& m, const RatPoint& p);

/// |kQ_M ∩ Z^{n-1}| by a left-to-right DP over the difference-constraint
/// system.  Equals count_lattice_points(m, k).
Int count_Q_points(const Lpm& m, long k);

/// All integer points of kQ_M, for small instances.
std::vector<std::vector<long>> enumerate_Q_points(const Lpm& m, long k);

/// Distributive lattice order on P_M: prefix-sum comparison.
bool lattice_leq(const Lpm& m, const RatPoint& p, const RatPoint& q);
RatPoint lattice_join(const Lpm& m, const RatPoint& p, const RatPoint& q);
RatPoint lattice_meet(const Lpm& m, const RatPoint& p, const RatPoint& q);

/// Chain-partitioned poset X^k_M.  Chain i (1-based line index) holds the
/// diagram points on the line x + y = i strictly above L and weakly below
/// U, at heights that are multiples of 1/k, ordered bottom-up.  Heights
/// are stored k-scaled as integers.
struct ChainPoset {
  long k = 1;
  struct Elem {
    int line;       // 1-based line index l_i
    long height;    // k * y, integer
  };
  std::vector<Elem> elems;
  std::vector<std::vector<int>> chains;        // element ids, bottom-up
  std::vector<std::pair<int, int>> covers;     // (lower, upper)

  int size() const { return static_cast<int>(elems.size()); }
};

ChainPoset build_chain_poset(const Lpm& m, long k);

/// Number of order ideals, by transfer DP across the chains.
Int ideal_count(const ChainPoset& p);

/// Dilworth embedding of one ideal: phi(I)_i = |I ∩ C_i|.  Validates that
/// the element set is downward closed.
std::vector<long> ideal_embed(const ChainPoset& p, const std::vector<int>& ideal_elems);

/// phi images of all ideals (each ideal is determined by its chain prefix
/// sizes); for small instances.
std::vector<std::vector<long>> enumerate_ideal_vectors(const ChainPoset& p);

}  // namespace lpm
