#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpm/numeric.hpp"
#include "lpm/step_vector.hpp"

namespace lpm {

/// Lattice path matroid M[U,L]: bases are the monotone lattice paths from
/// (0,0) to (m,r) staying weakly between the lower path L and the upper
/// path U.  Immutable after construction.
class Lpm {
public:
  /// The empty matroid (n = 0), identity for direct_sum.
  Lpm() = default;

  /// Validates |U| = |L|, sum U = sum L, and that L never goes above U.
  Lpm(StepVector upper, StepVector lower);

  int size() const { return upper_.size(); }   // n
  int rank() const { return upper_.sum(); }    // r
  int width() const { return size() - rank(); }  // m

  const StepVector& upper() const { return upper_; }
  const StepVector& lower() const { return lower_; }

  int uheight(int i) const { return upper_.height(i); }
  int lheight(int i) const { return lower_.height(i); }

  /// U and L meet only at (0,0) and (m,r).  The empty matroid is not
  /// connected; a single element is.
  bool connected() const;
  int component_count() const;

  /// Splits at every interior index where the paths meet; concatenation of
  /// the components reproduces the matroid.
  std::vector<Lpm> components() const;

  /// Reflection along the diagonal x = y: U* = complement(L),
  /// L* = complement(U).
  Lpm dual() const;

  bool operator==(const Lpm&) const = default;

private:
  StepVector upper_;
  StepVector lower_;
};

Lpm direct_sum(const Lpm& a, const Lpm& b);

/// Run-length encoding S(a_1,...,a_k) of a border strip: a_1 >= 1 cells to
/// the right, then a_2 >= 2 up, a_3 >= 2 right, ..., consecutive runs
/// sharing one cell.
class Snake {
public:
  explicit Snake(std::vector<long> runs);

  const std::vector<long>& runs() const { return runs_; }
  /// Number of cells in the strip.
  long cells() const;
  std::string str() const;

  bool operator==(const Snake&) const = default;

private:
  std::vector<long> runs_;
};

Lpm snake_to_lpm(const Snake& s);

/// Recognizes border strips: connected, >= 2 elements, and height gap
/// uheight(i) - lheight(i) <= 1 everywhere.  Inverse of snake_to_lpm.
std::optional<Snake> is_snake(const Lpm& m);

/// Number of monotone lattice paths weakly between L and U, by
/// prefix-height DP.
Int count_bases(const Lpm& m);

/// All bases in ascending lexicographic order of step vectors.
/// Rejects n > cap_n with TooLarge.
std::vector<StepVector> enumerate_bases(const Lpm& m, int cap_n = 24);

}  // namespace lpm
