#include "lpm/distributive.hpp"

#include <algorithm>
#include <map>

#include "lpm/error.hpp"

namespace lpm {

static void require_connected(const Lpm& m) {
  if (!m.connected()) fail(Errc::Disconnected, "operation needs a connected LPM");
}

QSystem q_system(const Lpm& m) {
  require_connected(m);
  QSystem q;
  for (int i = 1; i <= m.size() - 2; ++i)
    q.flipped.push_back(m.lower()[i] == 1);  // entry L_{i+1}, 0-based index i
  for (int i = 1; i <= m.size() - 1; ++i)
    q.ub.push_back(m.uheight(i) - m.lheight(i));
  return q;
}

bool q_contains(const QSystem& q, const std::vector<long>& point, long k) {
  if (point.size() != q.ub.size())
    fail(Errc::DimensionMismatch, "Q point has wrong dimension");
  for (size_t i = 0; i < point.size(); ++i)
    if (point[i] < 0 || point[i] > k * q.ub[i]) return false;
  for (size_t i = 0; i + 1 < point.size(); ++i) {
    long d = point[i + 1] - point[i];
    if (q.flipped[i]) d = -d;
    if (d < 0 || d > k) return false;
  }
  return true;
}

bool q_contains(const QSystem& q, const RatPoint& point) {
  if (point.size() != q.ub.size())
    fail(Errc::DimensionMismatch, "Q point has wrong dimension");
  for (size_t i = 0; i < point.size(); ++i)
    if (point[i] < 0 || point[i] > q.ub[i]) return false;
  for (size_t i = 0; i + 1 < point.size(); ++i) {
    Rat d = point[i + 1] - point[i];
    if (q.flipped[i]) d = -d;
    if (d < 0 || d > 1) return false;
  }
  return true;
}

RatPoint pi_map(const Lpm& m, const RatPoint& p) {
  require_connected(m);
  if (!contains(m, p)) fail(Errc::NotInPolytope, "point is not in P_M");
  RatPoint q;
  q.reserve(static_cast<size_t>(m.size()) - 1);
  Rat acc = 0;
  for (int i = 1; i <= m.size() - 1; ++i) {
    acc += p[static_cast<size_t>(i - 1)] - m.lower()[i - 1];
    q.push_back(acc);
  }
  return q;
}

RatPoint pi_inverse(const Lpm& m, const RatPoint& q) {
  require_connected(m);
  if (!q_contains(q_system(m), q)) fail(Errc::NotInQ, "point is not in Q_M");
  RatPoint p;
  p.reserve(static_cast<size_t>(m.size()));
  Rat prev = 0, sum = 0;
  for (int i = 1; i <= m.size() - 1; ++i) {
    Rat pi = q[static_cast<size_t>(i - 1)] - prev + m.lower()[i - 1];
    prev = q[static_cast<size_t>(i - 1)];
    p.push_back(pi);
    sum += pi;
  }
  p.push_back(Rat(m.rank()) - sum);
  return p;
}

RatPoint psi_map(const Lpm& m, const RatPoint& p) {
  if (!contains(m, p)) fail(Errc::NotInPolytope, "point is not in P_M");
  RatPoint out;
  Rat acc = 0;
  for (int i = 1; i <= m.size(); ++i) {
    acc += p[static_cast<size_t>(i - 1)] - m.lower()[i - 1];
    if (m.uheight(i) > m.lheight(i)) out.push_back(acc);
  }
  return out;
}

Int count_Q_points(const Lpm& m, long k) {
  require_connected(m);
  if (k < 0) fail(Errc::InvalidValue, "k must be nonnegative");
  if (m.size() <= 1) return 1;  // Q_M is a point
  if (k == 0) return 1;
  QSystem q = q_system(m);
  size_t dim = q.ub.size();
  std::vector<Int> cur(static_cast<size_t>(k * q.ub[0] + 1), 1);
  for (size_t i = 1; i < dim; ++i) {
    std::vector<Int> next(static_cast<size_t>(k * q.ub[i] + 1), 0);
    for (long v = 0; v <= k * q.ub[i - 1]; ++v) {
      if (cur[static_cast<size_t>(v)] == 0) continue;
      long lo = q.flipped[i - 1] ? v - k : v;
      long hi = q.flipped[i - 1] ? v : v + k;
      lo = std::max(lo, 0L);
      hi = std::min(hi, k * q.ub[i]);
      for (long w = lo; w <= hi; ++w)
        next[static_cast<size_t>(w)] += cur[static_cast<size_t>(v)];
    }
    cur = std::move(next);
  }
  Int total = 0;
  for (const Int& v : cur) total += v;
  return total;
}

static void enum_q_rec(const QSystem& q, long k, size_t i, std::vector<long>& acc,
                       std::vector<std::vector<long>>& out) {
  if (i == q.ub.size()) {
    out.push_back(acc);
    return;
  }
  long lo = 0, hi = k * q.ub[i];
  if (i > 0) {
    long prev = acc.back();
    if (q.flipped[i - 1]) { lo = std::max(lo, prev - k); hi = std::min(hi, prev); }
    else { lo = std::max(lo, prev); hi = std::min(hi, prev + k); }
  }
  for (long v = lo; v <= hi; ++v) {
    acc.push_back(v);
    enum_q_rec(q, k, i + 1, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<long>> enumerate_Q_points(const Lpm& m, long k) {
  require_connected(m);
  if (m.size() <= 1) return {{}};
  QSystem q = q_system(m);
  if (k == 0) return {std::vector<long>(q.ub.size(), 0)};
  std::vector<std::vector<long>> out;
  std::vector<long> acc;
  enum_q_rec(q, k, 0, acc, out);
  return out;
}

bool lattice_leq(const Lpm& m, const RatPoint& p, const RatPoint& q) {
  require_connected(m);
  if (!contains(m, p) || !contains(m, q))
    fail(Errc::NotInPolytope, "lattice order is defined on points of P_M");
  Rat sp = 0, sq = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    sp += p[i];
    sq += q[i];
    if (sp > sq) return false;
  }
  return true;
}

static RatPoint lattice_combine(const Lpm& m, const RatPoint& p, const RatPoint& q,
                                bool take_max) {
  RatPoint a = pi_map(m, p), b = pi_map(m, q);
  RatPoint c;
  c.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    c.push_back(take_max ? std::max(a[i], b[i]) : std::min(a[i], b[i]));
  return pi_inverse(m, c);
}

RatPoint lattice_join(const Lpm& m, const RatPoint& p, const RatPoint& q) {
  return lattice_combine(m, p, q, true);
}

RatPoint lattice_meet(const Lpm& m, const RatPoint& p, const RatPoint& q) {
  return lattice_combine(m, p, q, false);
}

ChainPoset build_chain_poset(const Lpm& m, long k) {
  require_connected(m);
  if (k < 1) fail(Errc::InvalidValue, "chain poset needs k >= 1");
  ChainPoset p;
  p.k = k;
  std::map<std::pair<int, long>, int> id;  // (line, k-scaled height) -> element
  for (int i = 1; i <= m.size() - 1; ++i) {
    if (m.uheight(i) == m.lheight(i))
      fail(Errc::Disconnected, "empty chain at interior line " + std::to_string(i));
    std::vector<int> chain;
    for (long h = k * m.lheight(i) + 1; h <= k * m.uheight(i); ++h) {
      int e = p.size();
      p.elems.push_back({i, h});
      id[{i, h}] = e;
      if (!chain.empty()) p.covers.emplace_back(chain.back(), e);  // chain order
      chain.push_back(e);
    }
    p.chains.push_back(std::move(chain));
  }
  // Unit-difference covers between consecutive lines: stepping east keeps
  // the height and goes down in the rotated drawing; stepping north
  // raises the height by one and goes up.
  for (int e = 0; e < p.size(); ++e) {
    int i = p.elems[static_cast<size_t>(e)].line;
    long h = p.elems[static_cast<size_t>(e)].height;
    if (auto it = id.find({i + 1, h}); it != id.end())
      p.covers.emplace_back(it->second, e);  // (x+1, y): lower neighbor
    if (auto it = id.find({i + 1, h + k}); it != id.end())
      p.covers.emplace_back(e, it->second);  // (x, y+1): upper neighbor
  }
  return p;
}

namespace {

// allowed(c, c') tables for consecutive chains, derived from the covers.
struct PairConstraints {
  // For a cover (lower u, upper v): v in I forces u in I.  With prefix
  // sizes c, the constraint between chains ci < cj reads: cj >= pos(v)
  // implies ci >= pos(u) (or symmetrically).
  struct Rule {
    bool upper_in_second;  // true: upper element lives in the later chain
    long pos_first;        // 1-based position within its chain
    long pos_second;
  };
  std::vector<Rule> rules;

  bool allowed(long c_first, long c_second) const {
    for (const Rule& r : rules) {
      if (r.upper_in_second) {
        if (c_second >= r.pos_second && c_first < r.pos_first) return false;
      } else {
        if (c_first >= r.pos_first && c_second < r.pos_second) return false;
      }
    }
    return true;
  }
};

struct ChainIndex {
  std::vector<int> chain_of;
  std::vector<long> pos_of;  // 1-based position within the chain

  explicit ChainIndex(const ChainPoset& p)
      : chain_of(static_cast<size_t>(p.size()), -1),
        pos_of(static_cast<size_t>(p.size()), 0) {
    for (size_t c = 0; c < p.chains.size(); ++c)
      for (size_t t = 0; t < p.chains[c].size(); ++t) {
        chain_of[static_cast<size_t>(p.chains[c][t])] = static_cast<int>(c);
        pos_of[static_cast<size_t>(p.chains[c][t])] = static_cast<long>(t) + 1;
      }
  }
};

std::vector<PairConstraints> adjacent_constraints(const ChainPoset& p,
                                                 const ChainIndex& idx) {
  size_t nc = p.chains.size();
  std::vector<PairConstraints> pairs(nc > 0 ? nc - 1 : 0);
  for (auto [lo, hi] : p.covers) {
    int cl = idx.chain_of[static_cast<size_t>(lo)];
    int ch = idx.chain_of[static_cast<size_t>(hi)];
    if (cl == ch) continue;  // prefix representation handles chain order
    if (std::abs(cl - ch) != 1)
      fail(Errc::InvalidValue, "cover spans non-adjacent chains");
    int first = std::min(cl, ch);
    PairConstraints::Rule r;
    r.upper_in_second = (ch > cl);
    if (r.upper_in_second) {
      r.pos_first = idx.pos_of[static_cast<size_t>(lo)];
      r.pos_second = idx.pos_of[static_cast<size_t>(hi)];
    } else {
      r.pos_first = idx.pos_of[static_cast<size_t>(hi)];
      r.pos_second = idx.pos_of[static_cast<size_t>(lo)];
    }
    pairs[static_cast<size_t>(first)].rules.push_back(r);
  }
  return pairs;
}

}  // namespace

Int ideal_count(const ChainPoset& p) {
  if (p.chains.empty()) return 1;
  ChainIndex idx(p);
  auto pairs = adjacent_constraints(p, idx);
  size_t len0 = p.chains[0].size();
  std::vector<Int> cur(len0 + 1, 1);
  for (size_t c = 1; c < p.chains.size(); ++c) {
    std::vector<Int> next(p.chains[c].size() + 1, 0);
    for (size_t a = 0; a < cur.size(); ++a) {
      if (cur[a] == 0) continue;
      for (size_t b = 0; b < next.size(); ++b)
        if (pairs[c - 1].allowed(static_cast<long>(a), static_cast<long>(b)))
          next[b] += cur[a];
    }
    cur = std::move(next);
  }
  Int total = 0;
  for (const Int& v : cur) total += v;
  return total;
}

static void enum_ideal_rec(const ChainPoset& p,
                           const std::vector<PairConstraints>& pairs, size_t c,
                           std::vector<long>& acc,
                           std::vector<std::vector<long>>& out) {
  if (c == p.chains.size()) {
    out.push_back(acc);
    return;
  }
  for (long v = 0; v <= static_cast<long>(p.chains[c].size()); ++v) {
    if (c > 0 && !pairs[c - 1].allowed(acc.back(), v)) continue;
    acc.push_back(v);
    enum_ideal_rec(p, pairs, c + 1, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<long>> enumerate_ideal_vectors(const ChainPoset& p) {
  if (p.chains.empty()) return {{}};
  ChainIndex idx(p);
  auto pairs = adjacent_constraints(p, idx);
  std::vector<std::vector<long>> out;
  std::vector<long> acc;
  enum_ideal_rec(p, pairs, 0, acc, out);
  return out;
}

std::vector<long> ideal_embed(const ChainPoset& p, const std::vector<int>& ideal_elems) {
  std::vector<bool> in(static_cast<size_t>(p.size()), false);
  for (int e : ideal_elems) {
    if (e < 0 || e >= p.size())
      fail(Errc::IndexOutOfRange, "ideal element out of range");
    in[static_cast<size_t>(e)] = true;
  }
  for (auto [lo, hi] : p.covers)
    if (in[static_cast<size_t>(hi)] && !in[static_cast<size_t>(lo)])
      fail(Errc::InvalidValue, "element set is not downward closed");
  std::vector<long> phi;
  phi.reserve(p.chains.size());
  for (const auto& chain : p.chains) {
    long c = 0;
    for (int e : chain)
      if (in[static_cast<size_t>(e)]) ++c;
    phi.push_back(c);
  }
  return phi;
}

}  // namespace lpm
