#include <doctest.h>

#include "lpm/error.hpp"
#include "lpm/io.hpp"
#include "lpm/polytope.hpp"

using namespace lpm;

namespace {
const Lpm kS12 = snake_to_lpm(Snake({1, 2}));
const Lpm kS22 = snake_to_lpm(Snake({2, 2}));
}  // namespace

TEST_CASE("membership of generalized path step vectors") {
  // three generalized paths in S(1,2) with known step vectors
  RatPoint a = parse_rat_point("3/4,3/4,1/2");
  RatPoint b = parse_rat_point("1,0,1");
  RatPoint c = parse_rat_point("1/4,1,3/4");
  CHECK(contains(kS12, a));
  CHECK(contains(kS12, b));
  CHECK(contains(kS12, c));
  CHECK_FALSE(contains(kS12, parse_rat_point("1,1,1")));
  CHECK_FALSE(contains(kS12, parse_rat_point("0,0,2")));
  CHECK_THROWS_AS(contains(kS12, parse_rat_point("1,0")), Error);
}

TEST_CASE("vertices lie in the polytope, centroid is interior") {
  for (const StepVector& base : enumerate_bases(kS22)) {
    RatPoint p = step_point(base);
    CHECK(contains(kS22, p));
    CHECK_FALSE(is_interior(kS22, p));  // vertices sit on the boundary
  }
  RatPoint centroid(4, 0);
  for (const StepVector& base : enumerate_bases(kS22))
    for (int i = 0; i < 4; ++i)
      centroid[static_cast<size_t>(i)] += Rat(base[i], 5);
  CHECK(is_interior(kS22, centroid));
}

TEST_CASE("interiority needs the band inequalities strict") {
  // prefix sum hits uheight(2) = 1, so the point is on a facet
  RatPoint p = parse_rat_point("1/2,1/2,1/2,1/2");
  CHECK(contains(kS22, p));
  CHECK_FALSE(is_interior(kS22, p));
  CHECK(is_interior(kS22, parse_rat_point("1/2,1/4,3/4,1/2")));
  CHECK_THROWS_AS(
      is_interior(Lpm(StepVector::parse("1010"), StepVector::parse("0101")),
                  parse_rat_point("1/2,1/2,1/2,1/2")),
      Error);
}

TEST_CASE("generalized path round trip") {
  RatPoint a = parse_rat_point("3/4,3/4,1/2");
  GeneralizedPath path = path_from_point(kS12, a);
  REQUIRE(path.size() == 4);
  CHECK(path[0] == Bend{0, 0});
  CHECK(path[1] == Bend{Rat(1, 4), Rat(3, 4)});
  CHECK(path[2] == Bend{Rat(1, 2), Rat(3, 2)});
  CHECK(path[3] == Bend{1, 2});
  CHECK(point_from_path(kS12, path) == a);
  CHECK_THROWS_AS(path_from_point(kS12, parse_rat_point("1,1,1")), Error);
}

TEST_CASE("dilate counts for the pyramid") {
  CHECK(count_lattice_points(kS22, 0) == 1);
  CHECK(count_lattice_points(kS22, 1) == 5);
  CHECK(count_lattice_points(kS22, 2) == 14);
  CHECK(count_lattice_points(kS22, 3) == 30);
  for (long k = 0; k <= 4; ++k)
    CHECK(count_lattice_points(kS22, k) == brute_force_count(kS22, k));
}

TEST_CASE("k=1 counts bases") {
  for (auto runs : std::vector<std::vector<long>>{{1, 2}, {2, 2}, {2, 3}, {3, 2, 2}}) {
    Lpm m = snake_to_lpm(Snake(runs));
    CHECK(count_lattice_points(m, 1) == count_bases(m));
  }
}

TEST_CASE("disconnected counts multiply") {
  Lpm sum = direct_sum(kS22, kS12);
  for (long k = 0; k <= 3; ++k)
    CHECK(count_lattice_points(sum, k) ==
          count_lattice_points(kS22, k) * count_lattice_points(kS12, k));
}

TEST_CASE("brute force enumeration cap") {
  CHECK_THROWS_AS(brute_force_count(kS22, 3, 10), Error);
}
