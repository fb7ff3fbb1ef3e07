#pragma once

#include <string>
#include <vector>

#include "lpm/lpm.hpp"
#include "lpm/numeric.hpp"

namespace lpm {

/// Univariate polynomial with exact rational coefficients, ascending
/// degree.  The zero polynomial has degree -1.
class RatPolynomial {
public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rat> coeffs);

  static RatPolynomial zero() { return RatPolynomial(); }
  static RatPolynomial constant(const Rat& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int i) const;
  Rat leading() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& t) const;

  RatPolynomial operator+(const RatPolynomial& o) const;
  RatPolynomial operator-(const RatPolynomial& o) const;
  RatPolynomial operator*(const RatPolynomial& o) const;
  RatPolynomial operator*(const Rat& s) const;

  bool operator==(const RatPolynomial&) const = default;

  std::string str() const;

private:
  std::vector<Rat> coeffs_;  // no trailing zeros
};

/// Exact Lagrange interpolation through distinct nodes.
RatPolynomial interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// C(t + d - j, d) as a polynomial in t.
RatPolynomial binomial_basis(int d, int j);

/// Interpolates count_lattice_points at k = 0..d (d = n - c) and verifies
/// the result against the counts at k = d+1..d+3.
RatPolynomial ehrhart_polynomial(const Lpm& m);

using HStarVector = std::vector<Int>;

/// h*_j = sum_{i=0}^{j} (-1)^i C(d+1, i) L(j-i), j = 0..d.
/// NonIntegral if some entry is not an integer.
HStarVector hstar(const RatPolynomial& ehr, int d);

/// sum_j h*_j C(t + d - j, d); inverse of hstar.
RatPolynomial hstar_reconstruct(const HStarVector& h, int d);

bool is_unimodal(const HStarVector& v);

using CountMatrix = std::vector<std::vector<Int>>;

/// (k+1)x(k+1) matrix with A_ij = C(a-2+j-i, j-i), 0-based indices.
CountMatrix count_matrix(long k, long a);

/// u^T A(k,a_n) R A(k,a_{n-1}) R ... R A(k,a_1) u where R reverses
/// coordinates and u is all ones; equals the lattice point count of the
/// k-th dilate of the snake polytope.
Int snake_count(const Snake& s, long k);

/// Closed-form Ehrhart polynomial of P_{S(a,b)} for a, b >= 2, built from
/// Bernoulli numbers and elementary symmetric functions on the multiset
/// {1..a-1} u {1..b-1}.
RatPolynomial closed_form_ab(long a, long b);

/// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ... via the standard recurrence
/// sum_{i=0}^{m} C(m+1, i) B_i = 0.
Rat bernoulli(unsigned m);

/// e_l of a multiset of integers, with multiplicity; e_0 = 1.
Int elementary_symmetric(const std::vector<long>& values, size_t l);

}  // namespace lpm
