#include "lpm/poset.hpp"

#include <algorithm>
#include <numeric>

#include "lpm/distributive.hpp"
#include "lpm/error.hpp"

namespace lpm {

Poset::Poset(int n) : n_(n), lt_(static_cast<size_t>(n) * static_cast<size_t>(n), false) {
  if (n < 0) fail(Errc::InvalidValue, "poset size must be nonnegative");
}

Poset Poset::chain(int n) {
  Poset p(n);
  for (int i = 0; i + 1 < n; ++i) p.add_relation(i, i + 1);
  return p;
}

Poset Poset::antichain(int n) { return Poset(n); }

void Poset::add_relation(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    fail(Errc::IndexOutOfRange, "poset element out of range");
  if (i == j || less(j, i))
    fail(Errc::InvalidValue, "relation would violate antisymmetry");
  // Close transitively: everything below i is below everything above j.
  std::vector<int> below{i}, above{j};
  for (int x = 0; x < n_; ++x) {
    if (less(x, i)) below.push_back(x);
    if (less(j, x)) above.push_back(x);
  }
  for (int b : below)
    for (int a : above) lt_[static_cast<size_t>(b * n_ + a)] = true;
}

bool Poset::naturally_labeled() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (less(i, j)) return false;
  return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (int x = 0; x < n_ && cover; ++x)
        if (less(i, x) && less(x, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

Poset Poset::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    fail(Errc::LengthMismatch, "relabeling permutation has wrong size");
  Poset p(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (less(i, j))
        p.lt_[static_cast<size_t>(perm[static_cast<size_t>(i)] * n_ +
                                  perm[static_cast<size_t>(j)])] = true;
  return p;
}

std::vector<uint32_t> Poset::ideals() const {
  if (n_ > 20) fail(Errc::TooLarge, "ideal enumeration capped at 20 elements");
  // down[j] = mask of elements strictly below j.
  std::vector<uint32_t> down(static_cast<size_t>(n_), 0);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if (less(i, j)) down[static_cast<size_t>(j)] |= 1u << i;
  std::vector<uint32_t> out;
  for (uint32_t mask = 0; mask < (1u << n_); ++mask) {
    bool ok = true;
    for (int j = 0; j < n_ && ok; ++j)
      if ((mask >> j) & 1u)
        if ((mask & down[static_cast<size_t>(j)]) != down[static_cast<size_t>(j)])
          ok = false;
    if (ok) out.push_back(mask);
  }
  return out;
}

Poset zigzag(const std::vector<long>& runs) {
  if (runs.empty()) fail(Errc::InvalidRuns, "zig-zag needs at least one chain");
  for (long a : runs)
    if (a < 2) fail(Errc::InvalidRuns, "zig-zag chain lengths must be >= 2");
  long n = std::accumulate(runs.begin(), runs.end(), 0L) -
           static_cast<long>(runs.size()) + 1;

  // Build on creation ids first, then relabel naturally.
  std::vector<std::pair<int, int>> covers;
  int next_id = 0;
  int bottom = next_id++;
  int top = bottom;
  for (long j = 1; j < runs[0]; ++j) {
    int e = next_id++;
    covers.emplace_back(top, e);
    top = e;
  }
  int prev_bottom = bottom, prev_top = top;
  for (size_t i = 1; i < runs.size(); ++i) {
    if (i % 2 == 1) {
      // glue bottoms: new chain grows upward from prev_bottom
      int cur = prev_bottom;
      for (long j = 1; j < runs[i]; ++j) {
        int e = next_id++;
        covers.emplace_back(cur, e);
        cur = e;
      }
      prev_top = cur;  // prev_bottom unchanged
    } else {
      // glue tops: new chain grows downward from prev_top
      int cur = prev_top;
      for (long j = 1; j < runs[i]; ++j) {
        int e = next_id++;
        covers.emplace_back(e, cur);
        cur = e;
      }
      prev_bottom = cur;
    }
  }
  if (next_id != n) fail(Errc::InvalidValue, "zig-zag construction is inconsistent");

  // Deterministic natural labels: repeatedly take the smallest creation id
  // whose predecessors are all labeled.
  std::vector<std::vector<int>> preds(static_cast<size_t>(n));
  for (auto [a, b] : covers) preds[static_cast<size_t>(b)].push_back(a);
  std::vector<int> label(static_cast<size_t>(n), -1);
  for (int next_label = 0; next_label < n; ++next_label) {
    for (int e = 0; e < n; ++e) {
      if (label[static_cast<size_t>(e)] != -1) continue;
      bool ready = true;
      for (int pr : preds[static_cast<size_t>(e)])
        if (label[static_cast<size_t>(pr)] == -1) ready = false;
      if (ready) {
        label[static_cast<size_t>(e)] = next_label;
        break;
      }
    }
  }
  Poset p(static_cast<int>(n));
  for (auto [a, b] : covers)
    p.add_relation(label[static_cast<size_t>(a)], label[static_cast<size_t>(b)]);
  return p;
}

Int order_polynomial(const Poset& x, long k) {
  if (k < 0) fail(Errc::InvalidValue, "order polynomial needs k >= 0");
  if (x.size() == 0) return 1;
  if (k == 0) return 0;
  if (k == 1) return 1;
  // Maps X -> [k] are multichains I_1 <= ... <= I_{k-1} of ideals.
  std::vector<uint32_t> ideals = x.ideals();
  std::vector<Int> cur(ideals.size(), 1);
  for (long step = 3; step < k + 1; ++step) {
    std::vector<Int> next(ideals.size(), 0);
    for (size_t a = 0; a < ideals.size(); ++a)
      for (size_t b = 0; b < ideals.size(); ++b)
        if ((ideals[a] & ideals[b]) == ideals[a]) next[b] += cur[a];
    cur = std::move(next);
  }
  Int total = 0;
  for (const Int& v : cur) total += v;
  return total;
}

namespace {

void extensions_rec(const Poset& x, std::vector<bool>& used, std::vector<int>& seq,
                    std::vector<Int>& omega) {
  int n = x.size();
  if (static_cast<int>(seq.size()) == n) {
    int descents = 0;
    for (size_t i = 0; i + 1 < seq.size(); ++i)
      if (seq[i] > seq[i + 1]) ++descents;
    omega[static_cast<size_t>(descents)] += 1;
    return;
  }
  for (int e = 0; e < n; ++e) {
    if (used[static_cast<size_t>(e)]) continue;
    bool minimal = true;
    for (int f = 0; f < n && minimal; ++f)
      if (!used[static_cast<size_t>(f)] && x.less(f, e)) minimal = false;
    if (!minimal) continue;
    used[static_cast<size_t>(e)] = true;
    seq.push_back(e);
    extensions_rec(x, used, seq, omega);
    seq.pop_back();
    used[static_cast<size_t>(e)] = false;
  }
}

}  // namespace

ExtensionStats linear_extensions(const Poset& x) {
  if (!x.naturally_labeled())
    fail(Errc::NotNaturallyLabeled, "descent statistics need a natural labeling");
  ExtensionStats st;
  st.omega.assign(static_cast<size_t>(std::max(x.size(), 1)), 0);
  if (x.size() == 0) {
    st.count = 1;
    st.omega = {1};
    return st;
  }
  std::vector<bool> used(static_cast<size_t>(x.size()), false);
  std::vector<int> seq;
  extensions_rec(x, used, seq, st.omega);
  st.count = 0;
  for (const Int& v : st.omega) st.count += v;
  return st;
}

Int count_linear_extensions(const Poset& x) {
  // DP over the ideal lattice: extensions are maximal chains of ideals.
  std::vector<uint32_t> ideals = x.ideals();
  std::sort(ideals.begin(), ideals.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Int> ways(ideals.size(), 0);
  ways[0] = 1;  // empty ideal
  for (size_t i = 0; i < ideals.size(); ++i)
    for (size_t j = i + 1; j < ideals.size(); ++j) {
      uint32_t diff = ideals[j] ^ ideals[i];
      if ((ideals[i] & ideals[j]) == ideals[i] && __builtin_popcount(diff) == 1)
        ways[j] += ways[i];
    }
  return ways.back();
}

namespace {

void opc_rec(const Poset& x, long k, int j, std::vector<long>& val, Int& count) {
  int n = x.size();
  if (j == n) {
    count += 1;
    return;
  }
  // Smaller poset elements carry larger coordinates: x_i >= x_j for
  // i <_X j, and all i <_X j have labels < j.
  long hi = k;
  for (int i = 0; i < j; ++i)
    if (x.less(i, j)) hi = std::min(hi, val[static_cast<size_t>(i)]);
  for (long v = 0; v <= hi; ++v) {
    val.push_back(v);
    opc_rec(x, k, j + 1, val, count);
    val.pop_back();
  }
}

}  // namespace

Int order_polytope_count(const Poset& x, long k) {
  if (k < 0) fail(Errc::InvalidValue, "k must be nonnegative");
  if (!x.naturally_labeled())
    fail(Errc::NotNaturallyLabeled, "counting sweeps labels in natural order");
  Int count = 0;
  std::vector<long> val;
  opc_rec(x, k, 0, val, count);
  return count;
}

bool vertex_check(const Poset& x) {
  if (x.size() > 12) fail(Errc::TooLarge, "vertex check capped at 12 elements");
  std::vector<uint32_t> binary_points;
  for (uint32_t mask = 0; mask < (1u << x.size()); ++mask) {
    bool ok = true;
    for (int i = 0; i < x.size() && ok; ++i)
      for (int j = 0; j < x.size() && ok; ++j)
        if (x.less(i, j) && ((mask >> i) & 1u) < ((mask >> j) & 1u)) ok = false;
    if (ok) binary_points.push_back(mask);
  }
  std::vector<uint32_t> ideal_masks = x.ideals();
  std::sort(binary_points.begin(), binary_points.end());
  std::sort(ideal_masks.begin(), ideal_masks.end());
  return binary_points == ideal_masks;
}

bool volume_check(const Poset& x) {
  if (x.size() > 8) fail(Errc::TooLarge, "volume check capped at 8 elements");
  int n = x.size();
  std::vector<Rat> xs, ys;
  for (long k = 0; k <= n; ++k) {
    xs.emplace_back(k);
    ys.emplace_back(order_polytope_count(x, k));
  }
  RatPolynomial ehr = interpolate(xs, ys);
  Rat expected = Rat(count_linear_extensions(x)) / Rat(factorial(static_cast<unsigned>(n)));
  return ehr.degree() == n ? ehr.leading() == expected
                           : (n == 0 && ehr == RatPolynomial::constant(1));
}

bool verify_orderpoly_equiv(const Snake& s, long k_max) {
  for (long a : s.runs())
    if (a < 2) fail(Errc::InvalidRuns, "order polytope equivalence needs all runs >= 2");
  Lpm m = snake_to_lpm(s);
  Poset z = zigzag(s.runs());
  for (long k = 0; k <= k_max; ++k)
    if (count_Q_points(m, k) != order_polytope_count(z, k)) return false;
  return true;
}

}  // namespace lpm
