#include <doctest.h>

#include "lpm/ehrhart.hpp"
#include "lpm/error.hpp"
#include "lpm/polytope.hpp"

using namespace lpm;

TEST_CASE("polynomial arithmetic and evaluation") {
  RatPolynomial p({1, 2});           // 1 + 2t
  RatPolynomial q({0, 0, Rat(1, 2)});  // t^2/2
  CHECK((p + q).degree() == 2);
  CHECK((p * q).coeff(3) == 1);
  CHECK(p.eval(3) == 7);
  CHECK((p - p) == RatPolynomial::zero());
  CHECK(RatPolynomial({1, 0, 0}).degree() == 0);  // trailing zeros stripped
}

TEST_CASE("exact interpolation") {
  // t^3 - t through 4 nodes
  RatPolynomial p = interpolate({0, 1, 2, 3}, {0, 0, 6, 24});
  CHECK(p == RatPolynomial({0, -1, 0, 1}));
  CHECK_THROWS_AS(interpolate({0, 1}, {1}), Error);
}

TEST_CASE("ehrhart polynomial of small snakes") {
  CHECK(ehrhart_polynomial(snake_to_lpm(Snake({1}))) == RatPolynomial({1, 1}));
  RatPolynomial s22 = ehrhart_polynomial(snake_to_lpm(Snake({2, 2})));
  CHECK(s22 == RatPolynomial({1, Rat(13, 6), Rat(3, 2), Rat(1, 3)}));
}

TEST_CASE("ehrhart polynomial multiplies over direct sums") {
  Lpm a = snake_to_lpm(Snake({2, 2})), b = snake_to_lpm(Snake({1, 2}));
  CHECK(ehrhart_polynomial(direct_sum(a, b)) ==
        ehrhart_polynomial(a) * ehrhart_polynomial(b));
}

TEST_CASE("hstar inversion and reconstruction") {
  Lpm m = snake_to_lpm(Snake({2, 2}));
  RatPolynomial ehr = ehrhart_polynomial(m);
  int d = m.size() - 1;
  HStarVector h = hstar(ehr, d);
  CHECK(h == HStarVector{1, 1, 0, 0});
  CHECK(hstar_reconstruct(h, d) == ehr);

  Int total = 0;
  for (const Int& v : h) total += v;
  CHECK(Rat(total) == ehr.leading() * Rat(factorial(static_cast<unsigned>(d))));
  CHECK(total == 2);  // normalized volume of the pyramid
}

TEST_CASE("unimodality scan") {
  CHECK(is_unimodal({1, 1, 0, 0}));
  CHECK(is_unimodal({1, 3, 3, 1}));
  CHECK(is_unimodal({1}));
  CHECK(is_unimodal({}));
  CHECK_FALSE(is_unimodal({1, 0, 1}));
  CHECK_FALSE(is_unimodal({2, 1, 2, 1}));
}

TEST_CASE("transfer matrix counts") {
  // A(k, a) is the (a-1)-th power of the all-ones upper triangular band
  CountMatrix j1 = count_matrix(2, 2);
  CHECK(j1[0][0] == 1);
  CHECK(j1[0][2] == 1);
  CHECK(j1[2][0] == 0);
  CHECK(count_matrix(2, 3)[0][2] == 3);  // C(3, 2)

  for (long k = 0; k <= 4; ++k) {
    CHECK(snake_count(Snake({2, 2}), k) ==
          count_lattice_points(snake_to_lpm(Snake({2, 2})), k));
    CHECK(snake_count(Snake({1, 2, 2}), k) ==
          count_lattice_points(snake_to_lpm(Snake({1, 2, 2})), k));
    CHECK(snake_count(Snake({3, 2, 4}), k) ==
          count_lattice_points(snake_to_lpm(Snake({3, 2, 4})), k));
  }
  CHECK(snake_count(Snake({2, 2}), 1) == 5);
  CHECK(snake_count(Snake({2, 2, 2}), 1) == 8);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rat(-1, 30));
  CHECK(bernoulli(12) == Rat(-691, 2730));
}

TEST_CASE("elementary symmetric functions") {
  std::vector<long> vals{1, 1, 2};  // multiset {1} u {1,2}
  CHECK(elementary_symmetric(vals, 0) == 1);
  CHECK(elementary_symmetric(vals, 1) == 4);
  CHECK(elementary_symmetric(vals, 2) == 5);
  CHECK(elementary_symmetric(vals, 3) == 2);
  CHECK_THROWS_AS(elementary_symmetric(vals, 4), Error);
}

TEST_CASE("closed form matches interpolation") {
  CHECK(closed_form_ab(2, 2) ==
        RatPolynomial({1, Rat(13, 6), Rat(3, 2), Rat(1, 3)}));
  for (long a = 2; a <= 4; ++a)
    for (long b = 2; b <= 4; ++b)
      CHECK(closed_form_ab(a, b) ==
            ehrhart_polynomial(snake_to_lpm(Snake({a, b}))));
  CHECK_THROWS_AS(closed_form_ab(1, 2), Error);
}
