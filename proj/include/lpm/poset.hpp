#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpm/ehrhart.hpp"
#include "lpm/lpm.hpp"
#include "lpm/numeric.hpp"

namespace lpm {

/// Finite poset on elements labeled 1..n (0-based internally), stored as a
/// transitively closed strict order.
class Poset {
public:
  explicit Poset(int n);

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return n_; }

  /// Adds i < j (0-based) and re-closes transitively.
  void add_relation(int i, int j);

  bool less(int i, int j) const { return lt_[static_cast<size_t>(i * n_ + j)]; }

  /// i <_X j implies i < j.
  bool naturally_labeled() const;

  std::vector<std::pair<int, int>> covers() const;

  Poset relabel(const std::vector<int>& perm) const;

  /// Order ideals as bitmasks (bit i = element i); n <= 20.
  std::vector<uint32_t> ideals() const;

private:
  int n_ = 0;
  std::vector<bool> lt_;  // row-major n x n
};

/// Zig-zag chain Z(a_1,...,a_k), a_i >= 2: chains glued alternately at
/// bottoms (odd gluing index) and tops (even), naturally labeled by a
/// deterministic chain-by-chain bottom-up topological sort.
Poset zigzag(const std::vector<long>& runs);

/// Omega_X(k): order-preserving maps X -> [k], counted as multichains of
/// k-1 ideals.
Int order_polynomial(const Poset& x, long k);

struct ExtensionStats {
  Int count;                // e(X)
  std::vector<Int> omega;   // omega_s, s = 0..n-1
};

/// Enumerates all linear extensions; omega_s counts extensions with
/// exactly s descents relative to the natural labeling.
ExtensionStats linear_extensions(const Poset& x);

/// e(X) by DP over the ideal lattice (oracle independent of the
/// backtracking enumeration).
Int count_linear_extensions(const Poset& x);

/// |k O(X) ∩ Z^n| counted directly from the system 0 <= x_i <= k,
/// x_i >= x_j for i <_X j.
Int order_polytope_count(const Poset& x, long k);

/// The 0/1 points of O(X) are exactly the ideal indicator vectors.
bool vertex_check(const Poset& x);

/// Leading coefficient of the interpolated Ehrhart polynomial of O(X)
/// equals e(X)/n!.
bool volume_check(const Poset& x);

/// count_Q_points(S, k) = order_polytope_count(Z, k) for k = 0..k_max;
/// requires all runs >= 2.
bool verify_orderpoly_equiv(const Snake& s, long k_max);

}  // namespace lpm
