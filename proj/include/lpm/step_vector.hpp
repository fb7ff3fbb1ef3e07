#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lpm {

/// A 0/1 sequence encoding a monotone lattice path by its y-increments.
/// height(i) is the number of north steps among the first i steps.
class StepVector {
public:
  StepVector() = default;
  explicit StepVector(std::vector<int> entries);

  /// Parses a string of '0'/'1' characters, leftmost = step 1.
  static StepVector parse(std::string_view s);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

  /// Prefix sum of the first i entries; height(0) = 0.
  int height(int i) const { return heights_[static_cast<size_t>(i)]; }
  int sum() const { return heights_.empty() ? 0 : heights_.back(); }

  /// Entrywise 1 - e_i.
  StepVector complement() const;

  const std::vector<int>& entries() const { return entries_; }
  std::string str() const;

  bool operator==(const StepVector&) const = default;

private:
  std::vector<int> entries_;
  std::vector<int> heights_;  // heights_[i] = height(i), size n+1
};

StepVector concat(const StepVector& a, const StepVector& b);

}  // namespace lpm
