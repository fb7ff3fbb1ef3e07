#include "lpm/io.hpp"

#include <algorithm>
#include <cctype>

#include "lpm/error.hpp"

namespace lpm {

namespace {

[[noreturn]] void parse_fail(std::string_view spec, size_t pos, const std::string& what) {
  fail(Errc::ParseError, "parse error at position " + std::to_string(pos + 1) +
                             " in \"" + std::string(spec) + "\": " + what);
}

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Lpm parse_term(std::string_view term, std::string_view full, size_t offset) {
  term = trim(term);
  if (term.empty()) parse_fail(full, offset, "empty term");
  if (term[0] == 'S') {
    return snake_to_lpm(parse_snake(term));
  }
  if (term.substr(0, 2) == "U=") {
    auto comma = term.find(",L=");
    if (comma == std::string_view::npos)
      parse_fail(full, offset, "expected \"U=<bits>,L=<bits>\"");
    StepVector u = StepVector::parse(term.substr(2, comma - 2));
    StepVector l = StepVector::parse(term.substr(comma + 3));
    return Lpm(std::move(u), std::move(l));
  }
  parse_fail(full, offset, "expected \"S(...)\" or \"U=...,L=...\"");
}

}  // namespace

std::vector<long> parse_runs(std::string_view spec, char tag) {
  std::string_view s = trim(spec);
  if (s.size() < 3 || s[0] != tag || s[1] != '(' || s.back() != ')')
    fail(Errc::ParseError, std::string("expected \"") + tag + "(a1,a2,...)\", got \"" +
                               std::string(spec) + "\"");
  std::string_view body = s.substr(2, s.size() - 3);
  std::vector<long> runs;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string_view tok = trim(body.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos));
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      fail(Errc::ParseError, "bad run length at position " + std::to_string(pos + 3) +
                                 " in \"" + std::string(spec) + "\"");
    runs.push_back(std::stol(std::string(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return runs;
}

Snake parse_snake(std::string_view spec) {
  return Snake(parse_runs(spec, 'S'));  // Snake ctor rejects invalid runs
}

Lpm parse_matroid_spec(std::string_view spec) {
  std::string_view s = trim(spec);
  if (s.empty()) fail(Errc::ParseError, "empty matroid spec");
  Lpm result;
  size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    size_t plus = s.find(" + ", pos);
    std::string_view term = s.substr(pos, plus == std::string_view::npos
                                              ? std::string_view::npos
                                              : plus - pos);
    Lpm t = parse_term(term, s, pos);
    result = first ? t : direct_sum(result, t);
    first = false;
    if (plus == std::string_view::npos) break;
    pos = plus + 3;
  }
  return result;
}

RatPoint parse_rat_point(std::string_view s) {
  RatPoint p;
  size_t pos = 0;
  std::string_view body = trim(s);
  if (body.empty()) return p;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string_view tok = trim(body.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos));
    p.push_back(parse_rational(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return p;
}

std::string format_rat_point(const RatPoint& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s;
}

std::string format_lpm(const Lpm& m) {
  return "U=" + m.upper().str() + ",L=" + m.lower().str();
}

}  // namespace lpm
