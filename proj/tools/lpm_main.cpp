#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpm/distributive.hpp"
#include "lpm/ehrhart.hpp"
#include "lpm/error.hpp"
#include "lpm/io.hpp"
#include "lpm/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

long long enum_cap() {
  if (const char* env = std::getenv("LPM_ENUM_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    lpm::fail(lpm::Errc::InvalidValue, "LPM_ENUM_CAP must be a positive integer");
  }
  return 100000000;
}

json coeffs_json(const lpm::RatPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(lpm::to_string(c));
  return a;
}

int run_info(const std::string& spec, bool as_json) {
  lpm::Lpm m = lpm::parse_matroid_spec(spec);
  auto snake = lpm::is_snake(m);
  json doc{
      {"spec", lpm::format_lpm(m)},
      {"n", m.size()},
      {"r", m.rank()},
      {"m", m.width()},
      {"bases", lpm::to_string(lpm::count_bases(m))},
      {"connected", m.connected()},
      {"components", m.component_count()},
      {"snake", snake ? json(snake->str()) : json(nullptr)},
      {"dual", lpm::format_lpm(m.dual())},
  };
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "spec: " << lpm::format_lpm(m) << "\n"
              << "n=" << m.size() << " r=" << m.rank() << " m=" << m.width() << "\n"
              << "bases: " << lpm::to_string(lpm::count_bases(m)) << "\n"
              << "connected: " << (m.connected() ? "yes" : "no")
              << " (components: " << m.component_count() << ")\n"
              << "snake: " << (snake ? snake->str() : std::string("no")) << "\n"
              << "dual: " << lpm::format_lpm(m.dual()) << "\n";
  }
  return kExitOk;
}

int run_count(const std::string& spec, long k, const std::string& method,
              bool all_methods, bool as_json) {
  lpm::Lpm m = lpm::parse_matroid_spec(spec);
  auto snake = lpm::is_snake(m);

  auto one = [&](const std::string& name) -> lpm::Int {
    if (name == "dp") return lpm::count_lattice_points(m, k);
    if (name == "brute") return lpm::brute_force_count(m, k, enum_cap());
    if (name == "matrix") {
      if (!snake)
        lpm::fail(lpm::Errc::MethodInapplicable,
                  "the matrix method needs a snake; \"" + spec + "\" is not one");
      return lpm::snake_count(*snake, k);
    }
    lpm::fail(lpm::Errc::InvalidValue, "unknown method '" + name + "'");
  };

  if (!all_methods) {
    lpm::Int v = one(method);
    if (as_json)
      std::cout << json{{"spec", spec}, {"k", k}, {"method", method},
                        {"count", lpm::to_string(v)}}.dump(2) << "\n";
    else
      std::cout << lpm::to_string(v) << "\n";
    return kExitOk;
  }

  std::vector<std::string> methods{"dp"};
  if (snake) methods.push_back("matrix");
  methods.push_back("brute");
  json per = json::object();
  std::string human;
  bool agree = true;
  lpm::Int first;
  for (size_t i = 0; i < methods.size(); ++i) {
    lpm::Int v = one(methods[i]);
    per[methods[i]] = lpm::to_string(v);
    if (i) human += " ";
    human += methods[i] + "=" + lpm::to_string(v);
    if (i == 0) first = v;
    else if (v != first) agree = false;
  }
  if (as_json)
    std::cout << json{{"spec", spec}, {"k", k}, {"counts", per},
                      {"agree", agree}}.dump(2) << "\n";
  else
    std::cout << human << (agree ? "" : "  MISMATCH") << "\n";
  if (!agree) {
    std::cerr << "error: counting methods disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run_ehrhart(const std::string& spec, bool with_hstar, bool with_closed,
                bool as_json) {
  lpm::Lpm m = lpm::parse_matroid_spec(spec);
  lpm::RatPolynomial p = lpm::ehrhart_polynomial(m);
  int d = m.size() - m.component_count();
  json doc{{"spec", spec}, {"degree", d}, {"coeffs", coeffs_json(p)}};
  std::string human = "L(t) = " + p.str() + "\n";

  if (with_hstar) {
    lpm::HStarVector h = lpm::hstar(p, d);
    json hj = json::array();
    std::string hs;
    for (size_t j = 0; j < h.size(); ++j) {
      hj.push_back(lpm::to_string(h[j]));
      if (j) hs += ",";
      hs += lpm::to_string(h[j]);
    }
    bool uni = lpm::is_unimodal(h);
    doc["hstar"] = hj;
    doc["unimodal"] = uni;
    human += "h* = (" + hs + "), " + (uni ? "unimodal" : "not unimodal") + "\n";
  }

  bool closed_ok = true;
  if (with_closed) {
    auto snake = lpm::is_snake(m);
    if (!snake || snake->runs().size() != 2 || snake->runs()[0] < 2)
      lpm::fail(lpm::Errc::MethodInapplicable,
                "--closed-form needs a snake S(a,b) with a, b >= 2");
    lpm::RatPolynomial cf =
        lpm::closed_form_ab(snake->runs()[0], snake->runs()[1]);
    closed_ok = cf == p;
    doc["closed_form"] = coeffs_json(cf);
    doc["closed_form_matches"] = closed_ok;
    human += std::string("closed form equals interpolation: ") +
             (closed_ok ? "OK" : "MISMATCH") + "\n";
  }

  if (as_json) std::cout << doc.dump(2) << "\n";
  else std::cout << human;
  if (!closed_ok) {
    std::cerr << "error: closed form disagrees with interpolation\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run_verify(const std::string& suite, const lpm::SuiteOptions& opt, bool as_json) {
  lpm::SuiteResult r = lpm::run_suite(suite, opt);
  if (as_json) {
    std::cout << json{{"suite", r.name}, {"pass", r.pass},
                      {"instances", r.instances}, {"detail", r.detail}}.dump(2)
              << "\n";
  } else {
    std::cout << "suite " << r.name << ": " << (r.pass ? "pass" : "FAIL") << " ("
              << r.instances << " instances)\n";
    if (!r.pass) std::cout << "first failure: " << r.detail << "\n";
  }
  return r.pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting for lattice path matroid polytopes"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document on stdout");

  std::string spec;
  auto* info = app.add_subcommand("info", "matroid summary");
  info->add_option("spec", spec, "matroid spec")->required();

  long k = 1;
  std::string method = "dp";
  bool all_methods = false;
  auto* count = app.add_subcommand("count", "lattice points of the k-th dilate");
  count->add_option("spec", spec, "matroid spec")->required();
  count->add_option("--k", k, "dilation factor")->required();
  count->add_option("--method", method, "dp|matrix|brute")
      ->check(CLI::IsMember({"dp", "matrix", "brute"}));
  count->add_flag("--all-methods", all_methods, "run every applicable method");

  bool with_hstar = false, with_closed = false;
  auto* ehr = app.add_subcommand("ehrhart", "exact Ehrhart polynomial");
  ehr->add_option("spec", spec, "matroid spec")->required();
  ehr->add_flag("--hstar", with_hstar, "also print the h*-vector");
  ehr->add_flag("--closed-form", with_closed, "cross-check the S(a,b) closed form");

  std::string suite;
  lpm::SuiteOptions opt;
  auto* verify = app.add_subcommand("verify", "theorem cross-check suites");
  verify->add_option("--suite", suite, "count|ehrhart|dpoly|poset|orderpoly|duality|direct-sum")
      ->required();
  verify->add_option("--max-cells", opt.max_cells, "snake size bound");
  verify->add_option("--max-k", opt.max_k, "dilation bound");
  verify->add_option("--max-n", opt.max_n, "ground-set size bound");
  verify->add_option("--seed", opt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return run_info(spec, as_json);
    if (*count) return run_count(spec, k, method, all_methods, as_json);
    if (*ehr) return run_ehrhart(spec, with_hstar, with_closed, as_json);
    if (*verify) return run_verify(suite, opt, as_json);
  } catch (const lpm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (as_json)
      std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
    return e.code() == lpm::Errc::VerificationFailed ? kExitMismatch : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
