#include "lpm/step_vector.hpp"

#include "lpm/error.hpp"

namespace lpm {

StepVector::StepVector(std::vector<int> entries) : entries_(std::move(entries)) {
  heights_.reserve(entries_.size() + 1);
  heights_.push_back(0);
  for (int e : entries_) {
    if (e != 0 && e != 1)
      fail(Errc::InvalidValue, "step vector entries must be 0 or 1");
    heights_.push_back(heights_.back() + e);
  }
}

StepVector StepVector::parse(std::string_view s) {
  std::vector<int> entries;
  entries.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c != '0' && c != '1')
      fail(Errc::ParseError,
           "step vector: expected '0' or '1' at position " + std::to_string(i + 1));
    entries.push_back(c - '0');
  }
  return StepVector(std::move(entries));
}

StepVector StepVector::complement() const {
  std::vector<int> e;
  e.reserve(entries_.size());
  for (int v : entries_) e.push_back(1 - v);
  return StepVector(std::move(e));
}

std::string StepVector::str() const {
  std::string s;
  s.reserve(entries_.size());
  for (int v : entries_) s.push_back(static_cast<char>('0' + v));
  return s;
}

StepVector concat(const StepVector& a, const StepVector& b) {
  std::vector<int> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return StepVector(std::move(e));
}

}  // namespace lpm
