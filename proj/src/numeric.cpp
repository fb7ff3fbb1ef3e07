#include "lpm/numeric.hpp"

#include "lpm/error.hpp"

namespace lpm {

Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0) return 0;
  if (n < k) return 0;
  Int num = 1;
  Int den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rat parse_rational(std::string_view token) {
  auto slash = token.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(Int(std::string(token)));
    }
    Int num(std::string(token.substr(0, slash)));
    Int den(std::string(token.substr(slash + 1)));
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(token) + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational token '" + std::string(token) + "'");
  }
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace lpm
