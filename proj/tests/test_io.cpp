#include <doctest.h>

#include "lpm/error.hpp"
#include "lpm/io.hpp"

using namespace lpm;

TEST_CASE("snake and path pair specs") {
  CHECK(parse_matroid_spec("S(2,2)") == snake_to_lpm(Snake({2, 2})));
  CHECK(parse_matroid_spec("U=110,L=011") == snake_to_lpm(Snake({1, 2})));
  CHECK(parse_matroid_spec(" S(1,2) ") == snake_to_lpm(Snake({1, 2})));
}

TEST_CASE("direct sums in specs") {
  Lpm sum = parse_matroid_spec("S(2,2) + U=10,L=01");
  CHECK(sum == direct_sum(snake_to_lpm(Snake({2, 2})), snake_to_lpm(Snake({1}))));
  CHECK(parse_matroid_spec("S(1) + S(1) + S(1)").size() == 6);
}

TEST_CASE("spec errors carry positions") {
  CHECK_THROWS_AS(parse_matroid_spec(""), Error);
  CHECK_THROWS_AS(parse_matroid_spec("S(0,2)"), Error);
  CHECK_THROWS_AS(parse_matroid_spec("S(2,a)"), Error);
  CHECK_THROWS_AS(parse_matroid_spec("U=110"), Error);
  CHECK_THROWS_AS(parse_matroid_spec("U=110,L=01"), Error);
  CHECK_THROWS_AS(parse_matroid_spec("T(2)"), Error);
  try {
    parse_matroid_spec("X");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("run list parsing") {
  CHECK(parse_runs("Z(2,3,2)", 'Z') == std::vector<long>{2, 3, 2});
  CHECK(parse_snake("S(4)") == Snake({4}));
  CHECK_THROWS_AS(parse_runs("Z()", 'Z'), Error);
  CHECK_THROWS_AS(parse_runs("S(2)", 'Z'), Error);
}

TEST_CASE("rational point round trip") {
  RatPoint p = parse_rat_point("3/4, -1/2, 2");
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Rat(3, 4));
  CHECK(p[1] == Rat(-1, 2));
  CHECK(p[2] == 2);
  CHECK(parse_rat_point(format_rat_point(p)) == p);
  CHECK(format_rat_point({Rat(1, 3), Rat(2)}) == "1/3,2");
}

TEST_CASE("lpm formatting round trips through the parser") {
  Lpm m = snake_to_lpm(Snake({2, 3, 2}));
  CHECK(parse_matroid_spec(format_lpm(m)) == m);
}
