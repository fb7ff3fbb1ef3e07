#include <doctest.h>

#include "lpm/error.hpp"
#include "lpm/lpm.hpp"
#include "lpm/numeric.hpp"

using namespace lpm;

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-3, 0) == 1);
  CHECK(binomial(-3, 1) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-1/2") == Rat(-1, 2));
  CHECK(parse_rational("7") == Rat(7));
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("step vector heights and complement") {
  StepVector v = StepVector::parse("1010");
  CHECK(v.size() == 4);
  CHECK(v.height(0) == 0);
  CHECK(v.height(2) == 1);
  CHECK(v.sum() == 2);
  CHECK(v.complement() == StepVector::parse("0101"));
  CHECK(v.str() == "1010");
  CHECK_THROWS_AS(StepVector::parse("10x"), Error);
}

TEST_CASE("lpm validation") {
  CHECK_NOTHROW(Lpm(StepVector::parse("110"), StepVector::parse("011")));
  CHECK_THROWS_AS(Lpm(StepVector::parse("11"), StepVector::parse("011")), Error);
  CHECK_THROWS_AS(Lpm(StepVector::parse("110"), StepVector::parse("010")), Error);
  // L climbing above U is a crossing
  CHECK_THROWS_AS(Lpm(StepVector::parse("011"), StepVector::parse("110")), Error);
}

TEST_CASE("connectivity and components") {
  Lpm s12(StepVector::parse("110"), StepVector::parse("011"));
  CHECK(s12.connected());
  CHECK(s12.component_count() == 1);

  // Paths meet after step 2: two blocks of sizes 2 and 2.
  Lpm sum(StepVector::parse("1010"), StepVector::parse("0101"));
  CHECK_FALSE(sum.connected());
  CHECK(sum.component_count() == 2);
  auto comps = sum.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == Lpm(StepVector::parse("10"), StepVector::parse("01")));
  CHECK(comps[1] == Lpm(StepVector::parse("10"), StepVector::parse("01")));
  CHECK(direct_sum(comps[0], comps[1]) == sum);

  CHECK(Lpm(StepVector::parse("1"), StepVector::parse("1")).connected());
  CHECK_FALSE(Lpm().connected());
  CHECK(Lpm().component_count() == 0);
}

TEST_CASE("duality") {
  Lpm m(StepVector::parse("110"), StepVector::parse("011"));
  Lpm d = m.dual();
  CHECK(d.rank() == m.size() - m.rank());
  CHECK(d.dual() == m);
  CHECK(count_bases(d) == count_bases(m));
}

TEST_CASE("snake run lists") {
  CHECK_THROWS_AS(Snake({0, 2}), Error);
  CHECK_THROWS_AS(Snake({2, 1}), Error);
  CHECK_THROWS_AS(Snake({}), Error);
  CHECK(Snake({1}).cells() == 1);
  CHECK(Snake({2, 2}).cells() == 3);
  CHECK(Snake({2, 3, 2}).cells() == 5);
  CHECK(Snake({2, 3, 2}).str() == "S(2,3,2)");
}

TEST_CASE("snake_to_lpm known diagrams") {
  CHECK(snake_to_lpm(Snake({1, 2})) ==
        Lpm(StepVector::parse("110"), StepVector::parse("011")));
  CHECK(snake_to_lpm(Snake({2, 2})) ==
        Lpm(StepVector::parse("1010"), StepVector::parse("0011")));
  CHECK(snake_to_lpm(Snake({1})) ==
        Lpm(StepVector::parse("10"), StepVector::parse("01")));
}

TEST_CASE("snake recognition inverts construction") {
  for (auto runs : std::vector<std::vector<long>>{
           {1}, {2}, {4}, {1, 2}, {2, 2}, {1, 2, 2}, {3, 2, 4}, {2, 2, 2, 2}}) {
    Snake s(runs);
    auto back = is_snake(snake_to_lpm(s));
    REQUIRE(back.has_value());
    CHECK(*back == s);
  }
  // uniform matroid U_{2,4} has gap 2 in the middle: not a snake
  CHECK_FALSE(is_snake(Lpm(StepVector::parse("1100"), StepVector::parse("0011"))));
  // disconnected
  CHECK_FALSE(is_snake(Lpm(StepVector::parse("1010"), StepVector::parse("0101"))));
  // single element
  CHECK_FALSE(is_snake(Lpm(StepVector::parse("1"), StepVector::parse("1"))));
}

TEST_CASE("base counting and enumeration") {
  Lpm s22 = snake_to_lpm(Snake({2, 2}));
  CHECK(count_bases(s22) == 5);
  auto bases = enumerate_bases(s22);
  CHECK(bases.size() == 5);

  Lpm s12 = snake_to_lpm(Snake({1, 2}));
  auto b = enumerate_bases(s12);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == StepVector::parse("011"));
  CHECK(b[1] == StepVector::parse("101"));
  CHECK(b[2] == StepVector::parse("110"));

  CHECK(count_bases(direct_sum(s22, s12)) == 15);
  CHECK_THROWS_AS(enumerate_bases(s22, 3), Error);
}
