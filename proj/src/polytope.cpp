#include "lpm/polytope.hpp"

#include <algorithm>

#include "lpm/error.hpp"

namespace lpm {

RatPoint step_point(const StepVector& v) {
  RatPoint p;
  p.reserve(static_cast<size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) p.emplace_back(v[i]);
  return p;
}

static void check_dim(const Lpm& m, const RatPoint& p) {
  if (static_cast<int>(p.size()) != m.size())
    fail(Errc::DimensionMismatch,
         "point has dimension " + std::to_string(p.size()) + ", expected " +
             std::to_string(m.size()));
}

bool contains(const Lpm& m, const RatPoint& p) {
  check_dim(m, p);
  Rat s = 0;
  for (int i = 0; i < m.size(); ++i) {
    const Rat& pi = p[static_cast<size_t>(i)];
    if (pi < 0 || pi > 1) return false;
    s += pi;
    if (s < m.lheight(i + 1) || s > m.uheight(i + 1)) return false;
  }
  return true;
}

bool is_interior(const Lpm& m, const RatPoint& p) {
  check_dim(m, p);
  if (!m.connected()) fail(Errc::Disconnected, "interiority needs a connected LPM");
  if (!contains(m, p)) return false;
  Rat s = 0;
  for (int i = 0; i < m.size(); ++i) {
    const Rat& pi = p[static_cast<size_t>(i)];
    if (pi <= 0 || pi >= 1) return false;
    s += pi;
    // At meeting points of L and U (only i = n for connected M) equality
    // is forced; everywhere else the band must be strict.
    if (i + 1 < m.size() && (s <= m.lheight(i + 1) || s >= m.uheight(i + 1)))
      return false;
  }
  return true;
}

GeneralizedPath path_from_point(const Lpm& m, const RatPoint& p) {
  if (!contains(m, p)) fail(Errc::NotInPolytope, "point is not in P_M");
  GeneralizedPath path;
  path.reserve(p.size() + 1);
  Rat s = 0;
  path.push_back({0, 0});
  for (int i = 1; i <= m.size(); ++i) {
    s += p[static_cast<size_t>(i - 1)];
    path.push_back({Rat(i) - s, s});
  }
  return path;
}

RatPoint point_from_path(const Lpm& m, const GeneralizedPath& path) {
  if (static_cast<int>(path.size()) != m.size() + 1)
    fail(Errc::DimensionMismatch, "path must have n+1 bends");
  RatPoint p;
  p.reserve(path.size() - 1);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i].x + path[i].y != static_cast<long>(i))
      fail(Errc::NotInPolytope, "bend " + std::to_string(i) + " is not on its line");
    p.push_back(path[i + 1].y - path[i].y);
  }
  if (path.back().x + path.back().y != m.size())
    fail(Errc::NotInPolytope, "last bend is not on its line");
  if (!contains(m, p)) fail(Errc::NotInPolytope, "path leaves the diagram");
  return p;
}

Int count_lattice_points(const Lpm& m, long k) {
  if (k < 0) fail(Errc::InvalidValue, "k must be nonnegative");
  if (k == 0 || m.size() == 0) return 1;
  // State: k-scaled height h on line l_i, h in [k*lheight, k*uheight].
  long lo = 0;
  std::vector<Int> cur{1};
  for (int i = 1; i <= m.size(); ++i) {
    long nlo = k * m.lheight(i), nhi = k * m.uheight(i);
    std::vector<Int> next(static_cast<size_t>(nhi - nlo + 1), 0);
    for (size_t j = 0; j < cur.size(); ++j) {
      if (cur[j] == 0) continue;
      long h = lo + static_cast<long>(j);
      long from = std::max(h, nlo), to = std::min(h + k, nhi);
      for (long h2 = from; h2 <= to; ++h2)
        next[static_cast<size_t>(h2 - nlo)] += cur[j];
    }
    cur = std::move(next);
    lo = nlo;
  }
  return cur[0];
}

Int brute_force_count(const Lpm& m, long k, long long cap) {
  if (k < 0) fail(Errc::InvalidValue, "k must be nonnegative");
  if (k == 0 || m.size() == 0) return 1;
  int n = m.size();
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k + 1;
    if (total > cap)
      fail(Errc::TooLarge, "(k+1)^n exceeds the enumeration cap");
  }
  std::vector<long> v(static_cast<size_t>(n), 0);
  long long count = 0;
  for (;;) {
    long s = 0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      s += v[static_cast<size_t>(i)];
      if (s < k * m.lheight(i + 1) || s > k * m.uheight(i + 1)) { ok = false; break; }
    }
    if (ok) ++count;
    int pos = 0;
    while (pos < n && v[static_cast<size_t>(pos)] == k) v[static_cast<size_t>(pos++)] = 0;
    if (pos == n) break;
    ++v[static_cast<size_t>(pos)];
  }
  return count;
}

}  // namespace lpm
