#include "lpm/ehrhart.hpp"

#include <algorithm>

#include "lpm/error.hpp"
#include "lpm/polytope.hpp"

namespace lpm {

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial RatPolynomial::constant(const Rat& c) {
  return RatPolynomial(std::vector<Rat>{c});
}

const Rat& RatPolynomial::coeff(int i) const {
  static const Rat kZero = 0;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

Rat RatPolynomial::leading() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat RatPolynomial::eval(const Rat& t) const {
  Rat r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
  return r;
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return zero();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const Rat& s) const {
  std::vector<Rat> c = coeffs_;
  for (auto& v : c) v *= s;
  return RatPolynomial(std::move(c));
}

std::string RatPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += " + ";
    s += "(" + to_string(coeffs_[i]) + ")";
    if (i == 1) s += "*t";
    else if (i > 1) s += "*t^" + std::to_string(i);
  }
  return s;
}

RatPolynomial interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size())
    fail(Errc::LengthMismatch, "interpolation needs matching node/value lists");
  RatPolynomial result;
  for (size_t i = 0; i < xs.size(); ++i) {
    RatPolynomial basis = RatPolynomial::constant(1);
    Rat denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPolynomial({-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    result = result + basis * (ys[i] / denom);
  }
  return result;
}

RatPolynomial binomial_basis(int d, int j) {
  // C(t + d - j, d) = prod_{l=0}^{d-1} (t + d - j - l) / d!
  RatPolynomial p = RatPolynomial::constant(1);
  for (int l = 0; l < d; ++l) p = p * RatPolynomial({Rat(d - j - l), 1});
  return p * (Rat(1) / Rat(factorial(static_cast<unsigned>(d))));
}

RatPolynomial ehrhart_polynomial(const Lpm& m) {
  int d = m.size() - m.component_count();
  std::vector<Rat> xs, ys;
  for (int kk = 0; kk <= d; ++kk) {
    xs.emplace_back(kk);
    ys.emplace_back(count_lattice_points(m, kk));
  }
  RatPolynomial p = interpolate(xs, ys);
  for (int kk = d + 1; kk <= d + 3; ++kk) {
    if (p.eval(Rat(kk)) != Rat(count_lattice_points(m, kk)))
      fail(Errc::VerificationFailed,
           "interpolated Ehrhart polynomial fails the overdetermination check at k=" +
               std::to_string(kk));
  }
  return p;
}

HStarVector hstar(const RatPolynomial& ehr, int d) {
  HStarVector h;
  h.reserve(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    Rat v = 0;
    for (int i = 0; i <= j; ++i) {
      Rat term = Rat(binomial(Int(d + 1), i)) * ehr.eval(Rat(j - i));
      if (i % 2) v -= term; else v += term;
    }
    if (boost::multiprecision::denominator(v) != 1)
      fail(Errc::NonIntegral, "h*_" + std::to_string(j) + " = " + to_string(v) +
                                  " is not an integer");
    h.push_back(boost::multiprecision::numerator(v));
  }
  return h;
}

RatPolynomial hstar_reconstruct(const HStarVector& h, int d) {
  RatPolynomial p;
  for (size_t j = 0; j < h.size(); ++j)
    p = p + binomial_basis(d, static_cast<int>(j)) * Rat(h[j]);
  return p;
}

bool is_unimodal(const HStarVector& v) {
  size_t i = 1;
  while (i < v.size() && v[i - 1] <= v[i]) ++i;
  while (i < v.size() && v[i - 1] >= v[i]) ++i;
  return i >= v.size();
}

CountMatrix count_matrix(long k, long a) {
  if (a < 1) fail(Errc::InvalidValue, "count matrix needs a >= 1");
  if (k < 0) fail(Errc::InvalidValue, "count matrix needs k >= 0");
  CountMatrix mat(static_cast<size_t>(k + 1),
                  std::vector<Int>(static_cast<size_t>(k + 1), 0));
  for (long i = 0; i <= k; ++i)
    for (long j = 0; j <= k; ++j)
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          binomial(Int(a - 2 + j - i), j - i);
  return mat;
}

static std::vector<Int> mat_vec(const CountMatrix& a, const std::vector<Int>& v) {
  std::vector<Int> out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

Int snake_count(const Snake& s, long k) {
  if (k < 0) fail(Errc::InvalidValue, "k must be nonnegative");
  std::vector<Int> v(static_cast<size_t>(k + 1), 1);
  for (size_t i = 0; i < s.runs().size(); ++i) {
    if (i > 0) std::reverse(v.begin(), v.end());
    v = mat_vec(count_matrix(k, s.runs()[i]), v);
  }
  Int total = 0;
  for (const Int& x : v) total += x;
  return total;
}

Rat bernoulli(unsigned m) {
  std::vector<Rat> b(static_cast<size_t>(m) + 1);
  b[0] = 1;
  for (unsigned j = 1; j <= m; ++j) {
    Rat acc = 0;
    for (unsigned i = 0; i < j; ++i)
      acc += Rat(binomial(Int(j + 1), static_cast<long>(i))) * b[i];
    b[j] = -acc / Rat(j + 1);
  }
  return b[m];
}

Int elementary_symmetric(const std::vector<long>& values, size_t l) {
  if (l > values.size())
    fail(Errc::IndexOutOfRange, "elementary symmetric index exceeds multiset size");
  // Coefficients of prod (t + c).
  std::vector<Int> e(values.size() + 1, 0);
  e[0] = 1;
  size_t used = 0;
  for (long c : values) {
    ++used;
    for (size_t j = used; j >= 1; --j) e[j] += Int(c) * e[j - 1];
  }
  return e[l];
}

RatPolynomial closed_form_ab(long a, long b) {
  if (a < 2 || b < 2) fail(Errc::InvalidRuns, "closed form needs a, b >= 2");
  std::vector<long> multiset;
  for (long c = 1; c < a; ++c) multiset.push_back(c);
  for (long c = 1; c < b; ++c) multiset.push_back(c);
  Rat norm = Rat(1) / Rat(factorial(static_cast<unsigned>(a - 1)) *
                          factorial(static_cast<unsigned>(b - 1)));
  std::vector<Rat> coeffs(static_cast<size_t>(a + b), 0);
  coeffs[0] = 1;
  for (long i = 1; i <= a + b - 1; ++i) {
    Rat acc = 0;
    for (long j = i - 1; j <= a + b - 2; ++j) {
      Rat term = bernoulli(static_cast<unsigned>(j - i + 1)) *
                 Rat(elementary_symmetric(multiset, static_cast<size_t>(a + b - 2 - j))) /
                 Rat(j + 1) * Rat(binomial(Int(j + 1), i));
      if ((j - i + 1) % 2) acc -= term; else acc += term;
    }
    coeffs[static_cast<size_t>(i)] = norm * acc;
  }
  return RatPolynomial(std::move(coeffs));
}

}  // namespace lpm
