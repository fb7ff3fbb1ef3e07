#include <doctest.h>

#include "lpm/distributive.hpp"
#include "lpm/error.hpp"
#include "lpm/poset.hpp"

using namespace lpm;

TEST_CASE("poset relations close transitively") {
  Poset p(4);
  p.add_relation(0, 1);
  p.add_relation(1, 2);
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK_THROWS_AS(p.add_relation(2, 0), Error);
  CHECK_THROWS_AS(p.add_relation(1, 1), Error);
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("ideal lattices of chains and antichains") {
  CHECK(Poset::chain(4).ideals().size() == 5);
  CHECK(Poset::antichain(4).ideals().size() == 16);
  CHECK(Poset(0).ideals().size() == 1);
}

TEST_CASE("zig-zag posets") {
  // Z(2,2) is the 3-element fence a < b > c
  Poset v = zigzag({2, 2});
  CHECK(v.size() == 3);
  CHECK(v.naturally_labeled());
  CHECK(v.covers().size() == 2);
  CHECK(v.ideals().size() == 5);

  Poset z = zigzag({3, 2, 2});
  CHECK(z.size() == 5);
  CHECK(z.naturally_labeled());

  CHECK(zigzag({4}).covers() == Poset::chain(4).covers());
  CHECK_THROWS_AS(zigzag({1, 2}), Error);
  CHECK_THROWS_AS(zigzag({}), Error);
}

TEST_CASE("order polynomial basics") {
  // chains count multisets, antichains count all maps
  for (long k = 1; k <= 4; ++k) {
    CHECK(order_polynomial(Poset::chain(3), k) == binomial(Int(k + 2), 3));
    CHECK(order_polynomial(Poset::antichain(3), k) == Int(k) * k * k);
  }
  CHECK(order_polynomial(Poset::chain(3), 0) == 0);
  CHECK(order_polynomial(Poset(0), 0) == 1);
}

TEST_CASE("linear extensions and descents") {
  ExtensionStats fence = linear_extensions(zigzag({2, 2}));
  CHECK(fence.count == 2);
  CHECK(fence.omega[0] == 1);
  CHECK(fence.omega[1] == 1);

  CHECK(linear_extensions(Poset::chain(4)).count == 1);
  CHECK(linear_extensions(Poset::antichain(3)).count == 6);

  for (auto runs : std::vector<std::vector<long>>{{2, 2}, {3, 2}, {2, 2, 2}, {3, 2, 4}})
    CHECK(linear_extensions(zigzag(runs)).count ==
          count_linear_extensions(zigzag(runs)));

  Poset bad(2);
  bad.add_relation(1, 0);
  CHECK_THROWS_AS(linear_extensions(bad), Error);
}

TEST_CASE("order polytope counting routes agree") {
  for (auto runs : std::vector<std::vector<long>>{{2, 2}, {3, 2}, {2, 2, 2}}) {
    Poset z = zigzag(runs);
    for (long k = 0; k <= 3; ++k)
      CHECK(order_polytope_count(z, k) == order_polynomial(z, k + 1));
  }
  CHECK(order_polytope_count(Poset::chain(3), 2) == binomial(Int(5), 3));
}

TEST_CASE("order polytope geometry checks") {
  for (auto runs : std::vector<std::vector<long>>{{2, 2}, {3, 2}, {2, 3, 2}}) {
    CHECK(vertex_check(zigzag(runs)));
    CHECK(volume_check(zigzag(runs)));
  }
  CHECK(vertex_check(Poset::antichain(3)));
  CHECK(volume_check(Poset::chain(5)));
}

TEST_CASE("snake dilates equal zig-zag order polytope dilates") {
  for (auto runs : std::vector<std::vector<long>>{{2, 2}, {3, 2}, {2, 2, 2}, {4, 3}})
    CHECK(verify_orderpoly_equiv(Snake(runs), 3));
  CHECK_THROWS_AS(verify_orderpoly_equiv(Snake({1, 2}), 3), Error);
}

TEST_CASE("omega vector equals the hstar vector") {
  for (auto runs : std::vector<std::vector<long>>{{2, 2}, {3, 2}, {2, 2, 2}}) {
    Lpm m = snake_to_lpm(Snake(runs));
    HStarVector h = hstar(ehrhart_polynomial(m), m.size() - 1);
    ExtensionStats st = linear_extensions(zigzag(runs));
    for (size_t j = 0; j < h.size(); ++j)
      CHECK(h[j] == (j < st.omega.size() ? st.omega[j] : Int(0)));
  }
}
