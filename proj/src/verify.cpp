#include "lpm/verify.hpp"

#include <algorithm>
#include <set>

#include "lpm/distributive.hpp"
#include "lpm/ehrhart.hpp"
#include "lpm/error.hpp"
#include "lpm/io.hpp"
#include "lpm/poset.hpp"

namespace lpm {

std::vector<Snake> all_snakes(int max_cells, bool require_a1_ge2) {
  std::vector<Snake> out;
  // cells = a_1 + sum_{i>=2} (a_i - 1); enumerate recursively.
  std::vector<long> runs;
  auto rec = [&](auto&& self, long cells_left) -> void {
    if (!runs.empty()) out.emplace_back(runs);
    long lo = runs.empty() ? (require_a1_ge2 ? 2 : 1) : 2;
    for (long a = lo; (runs.empty() ? a : a - 1) <= cells_left; ++a) {
      runs.push_back(a);
      self(self, cells_left - (runs.size() == 1 ? a : a - 1));
      runs.pop_back();
    }
  };
  rec(rec, max_cells);
  std::sort(out.begin(), out.end(), [](const Snake& a, const Snake& b) {
    return a.cells() != b.cells() ? a.cells() < b.cells() : a.runs() < b.runs();
  });
  return out;
}

namespace {

void step_vectors_rec(int n, int r, std::vector<int>& acc,
                      std::vector<StepVector>& out) {
  if (static_cast<int>(acc.size()) == n) {
    out.emplace_back(acc);
    return;
  }
  int placed = 0;
  for (int v : acc) placed += v;
  int rest = n - static_cast<int>(acc.size());
  for (int s = 0; s <= 1; ++s) {
    if (placed + s > r || placed + s + rest - 1 < r) continue;
    acc.push_back(s);
    step_vectors_rec(n, r, acc, out);
    acc.pop_back();
  }
}

std::vector<StepVector> all_step_vectors(int n, int r) {
  std::vector<StepVector> out;
  std::vector<int> acc;
  step_vectors_rec(n, r, acc, out);
  return out;
}

}  // namespace

std::vector<Lpm> all_connected_lpms(int max_n) {
  std::vector<Lpm> out;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 0; r <= n; ++r) {
      auto vecs = all_step_vectors(n, r);
      for (const auto& u : vecs)
        for (const auto& l : vecs) {
          bool ok = true;
          for (int i = 1; i <= n && ok; ++i) {
            int d = u.height(i) - l.height(i);
            if (d < 0 || (i < n && d == 0)) ok = false;
          }
          if (ok) out.emplace_back(u, l);
        }
    }
  return out;
}

RatPoint random_point(const Lpm& m, std::mt19937_64& rng) {
  auto bases = enumerate_bases(m);
  std::uniform_int_distribution<size_t> pick(0, bases.size() - 1);
  std::uniform_int_distribution<int> wdist(1, 9);
  RatPoint p(static_cast<size_t>(m.size()), 0);
  Rat total = 0;
  for (int t = 0; t < 3; ++t) {
    const StepVector& b = bases[pick(rng)];
    Rat w = wdist(rng);
    total += w;
    for (int i = 0; i < m.size(); ++i) p[static_cast<size_t>(i)] += w * b[i];
  }
  for (auto& c : p) c /= total;
  return p;
}

std::vector<std::string> suite_names() {
  return {"count", "ehrhart", "dpoly", "poset", "orderpoly", "duality", "direct-sum"};
}

namespace {

SuiteResult suite_count(const SuiteOptions& opt) {
  SuiteResult r{"count", true, 0, ""};
  for (const Snake& s : all_snakes(opt.max_cells, false)) {
    Lpm m = snake_to_lpm(s);
    for (long k = 0; k <= opt.max_k; ++k) {
      Int dp = count_lattice_points(m, k);
      Int mat = snake_count(s, k);
      Int brute = brute_force_count(m, k);
      ++r.instances;
      if (dp != mat || dp != brute) {
        r.pass = false;
        r.detail = s.str() + " k=" + std::to_string(k) + ": dp=" + to_string(dp) +
                   " matrix=" + to_string(mat) + " brute=" + to_string(brute);
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_ehrhart(const SuiteOptions& opt) {
  SuiteResult r{"ehrhart", true, 0, ""};
  (void)opt;
  for (long a = 2; a <= 4; ++a)
    for (long b = 2; b <= 4; ++b) {
      ++r.instances;
      RatPolynomial closed = closed_form_ab(a, b);
      RatPolynomial interp = ehrhart_polynomial(snake_to_lpm(Snake({a, b})));
      if (closed != interp) {
        r.pass = false;
        r.detail = "S(" + std::to_string(a) + "," + std::to_string(b) +
                   "): closed form " + closed.str() + " != interpolated " + interp.str();
        return r;
      }
    }
  return r;
}

SuiteResult suite_dpoly(const SuiteOptions& opt) {
  SuiteResult r{"dpoly", true, 0, ""};
  std::mt19937_64 rng(opt.seed);
  for (const Lpm& m : all_connected_lpms(opt.max_n)) {
    for (long k = 0; k <= opt.max_k; ++k) {
      ++r.instances;
      if (count_Q_points(m, k) != count_lattice_points(m, k)) {
        r.pass = false;
        r.detail = format_lpm(m) + " k=" + std::to_string(k) + ": Q count " +
                   to_string(count_Q_points(m, k)) + " != P count " +
                   to_string(count_lattice_points(m, k));
        return r;
      }
    }
    if (m.size() >= 2) {
      for (int t = 0; t < 5; ++t) {
        RatPoint p = random_point(m, rng);
        if (pi_inverse(m, pi_map(m, p)) != p) {
          r.pass = false;
          r.detail = format_lpm(m) + ": pi round trip failed at " + format_rat_point(p);
          return r;
        }
      }
    }
  }
  return r;
}

SuiteResult suite_poset(const SuiteOptions& opt) {
  SuiteResult r{"poset", true, 0, ""};
  for (const Lpm& m : all_connected_lpms(opt.max_n)) {
    for (long k = 1; k <= opt.max_k; ++k) {
      ++r.instances;
      ChainPoset cp = build_chain_poset(m, k);
      if (ideal_count(cp) != count_Q_points(m, k)) {
        r.pass = false;
        r.detail = format_lpm(m) + " k=" + std::to_string(k) + ": ideal count " +
                   to_string(ideal_count(cp)) + " != Q count " +
                   to_string(count_Q_points(m, k));
        return r;
      }
      auto phi = enumerate_ideal_vectors(cp);
      auto pts = enumerate_Q_points(m, k);
      // phi images are k-scaled Q points
      std::set<std::vector<long>> sp(phi.begin(), phi.end());
      std::set<std::vector<long>> sq(pts.begin(), pts.end());
      if (sp != sq) {
        r.pass = false;
        r.detail = format_lpm(m) + " k=" + std::to_string(k) +
                   ": phi image set differs from kQ lattice points";
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_orderpoly(const SuiteOptions& opt) {
  SuiteResult r{"orderpoly", true, 0, ""};
  for (const Snake& s : all_snakes(opt.max_cells, true)) {
    Lpm m = snake_to_lpm(s);
    Poset z = zigzag(s.runs());
    for (long k = 0; k <= opt.max_k; ++k) {
      ++r.instances;
      Int a = order_polytope_count(z, k);
      Int b = order_polynomial(z, k + 1);
      Int c = count_Q_points(m, k);
      if (a != b || a != c) {
        r.pass = false;
        r.detail = s.str() + " k=" + std::to_string(k) + ": O(Z)=" + to_string(a) +
                   " Omega(k+1)=" + to_string(b) + " Q=" + to_string(c);
        return r;
      }
    }
    // omega vector vs h* vector of the snake polytope
    HStarVector h = hstar(ehrhart_polynomial(m), m.size() - 1);
    ExtensionStats st = linear_extensions(z);
    ++r.instances;
    bool same = true;
    for (size_t j = 0; j < h.size(); ++j) {
      Int o = j < st.omega.size() ? st.omega[j] : Int(0);
      if (h[j] != o) same = false;
    }
    if (!same) {
      r.pass = false;
      r.detail = s.str() + ": omega vector differs from h*";
      return r;
    }
  }
  return r;
}

SuiteResult suite_duality(const SuiteOptions& opt) {
  SuiteResult r{"duality", true, 0, ""};
  for (const Snake& s : all_snakes(opt.max_cells, false)) {
    Lpm m = snake_to_lpm(s);
    Lpm d = m.dual();
    ++r.instances;
    if (count_bases(m) != count_bases(d) ||
        ehrhart_polynomial(m) != ehrhart_polynomial(d)) {
      r.pass = false;
      r.detail = s.str() + ": dual count or polynomial differs";
      return r;
    }
    for (long k = 0; k <= opt.max_k; ++k) {
      ++r.instances;
      if (count_lattice_points(m, k) != count_lattice_points(d, k)) {
        r.pass = false;
        r.detail = s.str() + " k=" + std::to_string(k) + ": dual count differs";
        return r;
      }
    }
  }
  return r;
}

SuiteResult suite_direct_sum(const SuiteOptions& opt) {
  SuiteResult r{"direct-sum", true, 0, ""};
  auto snakes = all_snakes(std::min(opt.max_cells, 4), false);
  for (const Snake& s1 : snakes)
    for (const Snake& s2 : snakes) {
      Lpm a = snake_to_lpm(s1), b = snake_to_lpm(s2);
      Lpm sum = direct_sum(a, b);
      ++r.instances;
      if (count_bases(sum) != count_bases(a) * count_bases(b) ||
          ehrhart_polynomial(sum) != ehrhart_polynomial(a) * ehrhart_polynomial(b)) {
        r.pass = false;
        r.detail = s1.str() + " + " + s2.str() + ": product rule fails";
        return r;
      }
    }
  return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "count") return suite_count(opt);
  if (name == "ehrhart") return suite_ehrhart(opt);
  if (name == "dpoly") return suite_dpoly(opt);
  if (name == "poset") return suite_poset(opt);
  if (name == "orderpoly") return suite_orderpoly(opt);
  if (name == "duality") return suite_duality(opt);
  if (name == "direct-sum") return suite_direct_sum(opt);
  fail(Errc::UnknownSuite, "unknown suite '" + name + "'");
}

}  // namespace lpm
