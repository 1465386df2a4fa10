#include <set>

#include "doctest.h"
#include "richseed/exact.hpp"
#include "richseed/wiring.hpp"

using namespace richseed;

namespace {
Perm perm(std::initializer_list<int> xs) { return Perm(std::vector<int>(xs)); }
}

TEST_CASE("single crossing diagram for (e, s1)") {
  WiringDiagram d = build_diagram(Perm(2), {2, {1}});
  CHECK(d.len == 1);
  CHECK(d.solid(1));
  CHECK(d.right_w[1] == IndexSet{2});
  CHECK(d.left_w[1] == IndexSet{1});
  CHECK(d.right_v[1] == IndexSet{1});
  CHECK(d.left_v[1] == IndexSet{1});
  CHECK(d.frozen[1]);
  CHECK(d.adj_right[1] == kOpen);
  CHECK(d.adj_up[1] == kOpen);
  CHECK(d.adj_down[1] == kOpen);
  auto [vl, wl] = chamber_labels(d, 1, Side::Right);
  CHECK(vl == IndexSet{1});
  CHECK(wl == IndexSet{2});
  CHECK_THROWS_AS(chamber_labels(d, 2, Side::Left), std::invalid_argument);
}

TEST_CASE("v = w makes every crossing hollow") {
  ReducedWord word{4, {1, 2, 1, 3}};
  WiringDiagram d = build_diagram(product(word), word);
  CHECK(d.solid_crossings().empty());
  for (int c = 1; c <= d.len; ++c) {
    CHECK(d.hollow(c));
    CHECK(d.right_v[c] == d.right_w[c]);
  }
}

TEST_CASE("running example: hollow {5,8}, solid elsewhere") {
  WiringDiagram d = build_diagram(perm({1, 2, 5, 3, 4}), {5, {4, 3, 2, 1, 4, 3, 2, 3, 4}});
  CHECK(d.hollow_crossings() == std::vector<int>{5, 8});
  CHECK(d.solid_crossings() == std::vector<int>{1, 2, 3, 4, 6, 7, 9});
  for (int c = 1; c <= d.len; ++c) {
    CHECK(static_cast<int>(d.left_w[c].size()) == d.height(c));
    CHECK(d.w.apply(d.right_w[c]) == d.left_w[c]);
    CHECK(d.v.apply(d.right_v[c]) == d.left_v[c]);
  }
  // Heights 4,3,2,1,4,3,2,3,4: chambers at the same height chain left/right.
  CHECK(d.adj_right[1] == 5);
  CHECK(d.adj_right[2] == 6);
  CHECK(d.adj_up[2] == 5);
  CHECK(d.adj_down[1] == 2);
  CHECK(d.adj_left_cross[5] == 1);
  CHECK(d.frozen[1]);
  CHECK(d.frozen[2]);
  CHECK_FALSE(d.frozen[5]);
}

TEST_CASE("strands never cross twice") {
  WiringDiagram d = build_diagram(perm({1, 2, 5, 3, 4}), {5, {4, 3, 2, 1, 4, 3, 2, 3, 4}});
  std::set<std::pair<int, int>> crossed;
  for (int c = 1; c <= d.len; ++c) {
    int rise = d.rising_strand(c), fall = d.falling_strand(c);
    auto pair = std::minmax(rise, fall);
    CHECK(crossed.insert({pair.first, pair.second}).second);
  }
}

TEST_CASE("hollow crossing minors satisfy the binomial relation on N") {
  // Around each hollow crossing, evaluate the four right chamber minors on a
  // random unitriangular matrix; the product above-below equals the product
  // left-right, and the mixed pair is not Gale-comparable.
  ReducedWord word{4, {1, 2, 1, 3, 2, 1}};
  WiringDiagram d = build_diagram(perm({3, 2, 1, 4}), word);
  REQUIRE(d.hollow_crossings() == std::vector<int>{3, 5, 6});
  for (int c : d.hollow_crossings()) {
    int h = d.height(c);
    const Perm& after = d.v_up[c + 1];
    const Perm& after_w = d.w_up[c + 1];
    Perm at = d.v_up[c], at_w = d.w_up[c];
    MinorIndex up{at.prefix_image(h + 1), at_w.prefix_image(h + 1)};
    MinorIndex down{at.prefix_image(h - 1), at_w.prefix_image(h - 1)};
    MinorIndex left{at.prefix_image(h), at_w.prefix_image(h)};
    MinorIndex right{after.prefix_image(h), after_w.prefix_image(h)};
    CHECK_FALSE(gale_leq(at.prefix_image(h), after_w.prefix_image(h)));
    for (int t = 0; t < 10; ++t) {
      ExactMatrix x = random_unitriangular(4, 555 + t);
      CHECK(eval_minor(x, up) * eval_minor(x, down) ==
            eval_minor(x, left) * eval_minor(x, right));
    }
  }
}

TEST_CASE("spread boundary classification") {
  WiringDiagram d = build_diagram(perm({1, 2, 5, 3, 4}), {5, {4, 3, 2, 1, 4, 3, 2, 3, 4}});
  SUBCASE("single chamber has one left end and one right end") {
    SpreadBoundary b = spread_boundary(d, {5});
    CHECK(b.left_ends == std::vector<int>{1});
    CHECK(b.right_ends == std::vector<int>{5});
  }
  SUBCASE("all chambers leave only diagram boundary effects") {
    std::set<int> all;
    for (int c = 1; c <= d.len; ++c) all.insert(c);
    SpreadBoundary b = spread_boundary(d, all);
    CHECK(b.left_ends.empty());
  }
  SUBCASE("unknown chamber is rejected") {
    CHECK_THROWS_AS(spread_boundary(d, {42}), std::invalid_argument);
  }
}
