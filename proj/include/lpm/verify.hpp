#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpm/lpm.hpp"
#include "lpm/polytope.hpp"

namespace lpm {

struct SuiteOptions {
  int max_cells = 6;
  int max_k = 3;
  int max_n = 7;
  uint64_t seed = 12345;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  long long instances = 0;
  std::string detail;  // first failing instance, or empty
};

std::vector<std::string> suite_names();

/// Runs one of the theorem cross-check suites: count, ehrhart, dpoly,
/// poset, orderpoly, duality, direct-sum.  UnknownSuite otherwise.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// All run lists with at most max_cells cells; a_1 >= 1 unless
/// require_a1_ge2, later runs >= 2.
std::vector<Snake> all_snakes(int max_cells, bool require_a1_ge2);

/// All connected LPMs with 1 <= n <= max_n, exhaustive over (U, L) pairs.
std::vector<Lpm> all_connected_lpms(int max_n);

/// Random rational point of P_M: convex combination of a few bases with
/// random small rational weights.
RatPoint random_point(const Lpm& m, std::mt19937_64& rng);

}  // namespace lpm
