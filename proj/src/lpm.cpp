#include "lpm/lpm.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lpm/error.hpp"

namespace lpm {

Lpm::Lpm(StepVector upper, StepVector lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.size() != lower_.size())
    fail(Errc::LengthMismatch, "|U| = " + std::to_string(upper_.size()) +
                                   " but |L| = " + std::to_string(lower_.size()));
  if (upper_.sum() != lower_.sum())
    fail(Errc::RankMismatch, "sum U = " + std::to_string(upper_.sum()) +
                                 " but sum L = " + std::to_string(lower_.sum()));
  for (int i = 1; i <= size(); ++i) {
    if (lower_.height(i) > upper_.height(i))
      fail(Errc::PathsCross,
           "L rises above U at index " + std::to_string(i));
  }
}

bool Lpm::connected() const {
  if (size() == 0) return false;
  for (int i = 1; i < size(); ++i)
    if (uheight(i) == lheight(i)) return false;
  return true;
}

std::vector<Lpm> Lpm::components() const {
  std::vector<Lpm> out;
  int start = 0;
  for (int i = 1; i <= size(); ++i) {
    if (i == size() || uheight(i) == lheight(i)) {
      std::vector<int> u(upper_.entries().begin() + start,
                         upper_.entries().begin() + i);
      std::vector<int> l(lower_.entries().begin() + start,
                         lower_.entries().begin() + i);
      out.emplace_back(StepVector(std::move(u)), StepVector(std::move(l)));
      start = i;
    }
  }
  return out;
}

int Lpm::component_count() const {
  if (size() == 0) return 0;
  int c = 1;
  for (int i = 1; i < size(); ++i)
    if (uheight(i) == lheight(i)) ++c;
  return c;
}

Lpm Lpm::dual() const {
  return Lpm(lower_.complement(), upper_.complement());
}

Lpm direct_sum(const Lpm& a, const Lpm& b) {
  return Lpm(concat(a.upper(), b.upper()), concat(a.lower(), b.lower()));
}

Snake::Snake(std::vector<long> runs) : runs_(std::move(runs)) {
  if (runs_.empty()) fail(Errc::InvalidRuns, "snake needs at least one run");
  if (runs_[0] < 1) fail(Errc::InvalidRuns, "a_1 must be >= 1");
  for (size_t i = 1; i < runs_.size(); ++i)
    if (runs_[i] < 2)
      fail(Errc::InvalidRuns, "a_" + std::to_string(i + 1) + " must be >= 2");
}

long Snake::cells() const {
  long c = 0;
  for (long a : runs_) c += a;
  return c - static_cast<long>(runs_.size()) + 1;
}

std::string Snake::str() const {
  std::string s = "S(";
  for (size_t i = 0; i < runs_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(runs_[i]);
  }
  return s + ")";
}

Lpm snake_to_lpm(const Snake& s) {
  // Build the cell set, then the boundary paths column by column.
  std::vector<std::pair<int, int>> cells;
  {
    int x = 0, y = 0;
    bool horizontal = true;
    cells.emplace_back(0, 0);
    for (size_t i = 0; i < s.runs().size(); ++i) {
      long a = s.runs()[i];
      for (long j = 1; j < a; ++j) {
        if (horizontal) ++x; else ++y;
        cells.emplace_back(x, y);
      }
      horizontal = !horizontal;
    }
  }
  int m = 0, r = 0;
  for (auto [cx, cy] : cells) {
    m = std::max(m, cx + 1);
    r = std::max(r, cy + 1);
  }
  std::vector<int> ylo(static_cast<size_t>(m), r), yhi(static_cast<size_t>(m), -1);
  for (auto [cx, cy] : cells) {
    ylo[static_cast<size_t>(cx)] = std::min(ylo[static_cast<size_t>(cx)], cy);
    yhi[static_cast<size_t>(cx)] = std::max(yhi[static_cast<size_t>(cx)], cy);
  }
  std::vector<int> u, l;
  int yu = 0, yl = 0;
  for (int x = 0; x < m; ++x) {
    while (yu < yhi[static_cast<size_t>(x)] + 1) { u.push_back(1); ++yu; }
    u.push_back(0);
    while (yl < ylo[static_cast<size_t>(x)]) { l.push_back(1); ++yl; }
    l.push_back(0);
  }
  while (yu < r) { u.push_back(1); ++yu; }
  while (yl < r) { l.push_back(1); ++yl; }
  return Lpm(StepVector(std::move(u)), StepVector(std::move(l)));
}

std::optional<Snake> is_snake(const Lpm& m) {
  if (m.size() < 2 || !m.connected()) return std::nullopt;
  for (int i = 1; i < m.size(); ++i)
    if (m.uheight(i) - m.lheight(i) > 1) return std::nullopt;

  // Reconstruct the cell strip.  Column x spans rows ylo(x)..yhi(x) read
  // off the heights at the east steps of L and U.
  int w = m.width();
  std::vector<int> ylo, yhi;
  {
    int y = 0;
    for (int i = 0; i < m.size(); ++i) {
      if (m.lower()[i] == 0) ylo.push_back(y); else ++y;
    }
    y = 0;
    for (int i = 0; i < m.size(); ++i) {
      if (m.upper()[i] == 0) yhi.push_back(y - 1); else ++y;
    }
  }
  std::set<std::pair<int, int>> cells;
  for (int x = 0; x < w; ++x)
    for (int y = ylo[static_cast<size_t>(x)]; y <= yhi[static_cast<size_t>(x)]; ++y)
      cells.insert({x, y});

  // Walk the strip from (0,0); at each cell exactly one of the east/north
  // neighbors may follow.
  std::pair<int, int> cur{0, 0};
  if (!cells.count(cur)) return std::nullopt;
  std::vector<int> moves;  // 0 = east, 1 = north
  size_t visited = 1;
  for (;;) {
    bool east = cells.count({cur.first + 1, cur.second}) > 0;
    bool north = cells.count({cur.first, cur.second + 1}) > 0;
    if (east && north) return std::nullopt;
    if (!east && !north) break;
    if (east) { cur.first += 1; moves.push_back(0); }
    else { cur.second += 1; moves.push_back(1); }
    ++visited;
  }
  if (visited != cells.size()) return std::nullopt;

  std::vector<long> runs;
  size_t i = 0;
  if (!moves.empty() && moves[0] == 1) {
    runs.push_back(1);  // strip starts upward: a_1 = 1
  } else {
    size_t j = i;
    while (j < moves.size() && moves[j] == 0) ++j;
    runs.push_back(static_cast<long>(j - i) + 1);
    i = j;
  }
  while (i < moves.size()) {
    size_t j = i;
    while (j < moves.size() && moves[j] == moves[i]) ++j;
    runs.push_back(static_cast<long>(j - i) + 1);
    i = j;
  }
  return Snake(std::move(runs));
}

Int count_bases(const Lpm& m) {
  if (m.size() == 0) return 1;
  // DP over lines; state = path height h in [lheight(i), uheight(i)].
  std::vector<Int> cur{1};
  int lo = 0;
  for (int i = 1; i <= m.size(); ++i) {
    int nlo = m.lheight(i), nhi = m.uheight(i);
    std::vector<Int> next(static_cast<size_t>(nhi - nlo + 1), 0);
    for (size_t j = 0; j < cur.size(); ++j) {
      int h = lo + static_cast<int>(j);
      for (int step = 0; step <= 1; ++step) {
        int h2 = h + step;
        if (h2 >= nlo && h2 <= nhi) next[static_cast<size_t>(h2 - nlo)] += cur[j];
      }
    }
    cur = std::move(next);
    lo = nlo;
  }
  return cur[0];
}

namespace {

void enumerate_rec(const Lpm& m, int i, int h, std::vector<int>& acc,
                   std::vector<StepVector>& out) {
  if (i == m.size()) {
    out.emplace_back(acc);
    return;
  }
  for (int step = 0; step <= 1; ++step) {
    int h2 = h + step;
    if (h2 < m.lheight(i + 1) || h2 > m.uheight(i + 1)) continue;
    acc.push_back(step);
    enumerate_rec(m, i + 1, h2, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<StepVector> enumerate_bases(const Lpm& m, int cap_n) {
  if (m.size() > cap_n)
    fail(Errc::TooLarge, "enumeration capped at n <= " + std::to_string(cap_n));
  std::vector<StepVector> out;
  std::vector<int> acc;
  enumerate_rec(m, 0, 0, acc, out);
  return out;
}

}  // namespace lpm
