#include <algorithm>

#include "doctest.h"
#include "richseed/exact.hpp"
#include "richseed/shapes.hpp"

using namespace richseed;

TEST_CASE("skew shape of ({1,3,4},{2,3,7}) in the 7x7 grid") {
  SkewShape s = skew_shape({1, 3, 4}, {2, 3, 7}, 7);
  CHECK(s.box_count() == 4);
  CHECK(s.content_set() == std::vector<int>{1, 4, 5, 6});
  CHECK(s.contains({1, 7}));
  CHECK(s.contains({3, 4}));
  CHECK(s.contains({3, 5}));
  CHECK(s.contains({3, 6}));

  auto comps = s.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].content_set() == std::vector<int>{1});
  CHECK(comps[1].content_set() == std::vector<int>{4, 5, 6});

  CHECK(s.canonical_key() == MinorIndex{{1, 4}, {2, 7}});
  CHECK(comps[0].canonical_key() == MinorIndex{{1}, {2}});
  CHECK(comps[1].canonical_key() == MinorIndex{{4}, {7}});
}

TEST_CASE("degenerate shapes") {
  SkewShape empty = skew_shape({1, 3}, {1, 3}, 5);
  CHECK(empty.empty());
  CHECK(empty.components().empty());
  CHECK(empty.canonical_key() == MinorIndex{{}, {}});

  SkewShape box = skew_shape({1}, {2}, 4);
  CHECK(box.box_count() == 1);
  CHECK(box.content_set() == std::vector<int>{1});
  CHECK(box.components().size() == 1);
  CHECK(box.components()[0] == box);

  CHECK_THROWS_AS(skew_shape({2}, {1}, 4), std::invalid_argument);
}

TEST_CASE("components partition the boxes (exhaustive n <= 6, sizes <= 3)") {
  const int n = 6;
  for (int h = 1; h <= 3; ++h) {
    std::vector<IndexSet> subsets;
    IndexSet cur(h);
    auto rec = [&](auto&& self, int pos, int low) -> void {
      if (pos == h) {
        subsets.push_back(cur);
        return;
      }
      for (int x = low; x <= n; ++x) {
        cur[pos] = x;
        self(self, pos + 1, x + 1);
      }
    };
    rec(rec, 0, 1);
    for (const IndexSet& I : subsets)
      for (const IndexSet& J : subsets) {
        if (!gale_leq(I, J)) continue;
        SkewShape s = skew_shape(I, J, n);
        std::vector<Box> collected;
        for (const SkewShape& comp : s.components())
          for (const Box& b : comp.boxes()) collected.push_back(b);
        std::sort(collected.begin(), collected.end());
        CHECK(collected == s.boxes());

        // Contents match the symmetric difference encoded by the reduced pair.
        MinorIndex key = s.canonical_key();
        SkewShape again = skew_shape(key.rows, key.cols, n);
        CHECK(again.content_set() == s.content_set());
        CHECK(again.canonical_key() == key);
      }
  }
}

TEST_CASE("canonical key is invariant under antidiagonal translation") {
  SkewShape s = skew_shape({1, 3, 4}, {2, 3, 7}, 7);
  MinorIndex key = s.canonical_key();
  MinorIndex shifted = realize_key(key, 0);
  SkewShape t = skew_shape(shifted.rows, shifted.cols, 7);
  CHECK(t.canonical_key() == key);

  // A genuine translate built by prepending a common step.
  SkewShape one = skew_shape({2}, {3}, 4);
  SkewShape other = skew_shape({1, 2}, {1, 3}, 4);
  CHECK(one.boxes() != other.boxes());
  CHECK(one.canonical_key() == other.canonical_key());
}

TEST_CASE("canonical keys separate shapes exactly when minors agree") {
  // Across all single-component pairs in a small grid, equal keys must give
  // equal minors on random unitriangular matrices and distinct keys must be
  // told apart by some evaluation.
  const int n = 4;
  std::vector<std::pair<IndexSet, IndexSet>> pairs;
  std::vector<IndexSet> subsets;
  for (int bits = 1; bits < 16; ++bits) {
    IndexSet s;
    for (int x = 1; x <= 4; ++x)
      if (bits & (1 << (x - 1))) s.push_back(x);
    subsets.push_back(s);
  }
  for (const IndexSet& I : subsets)
    for (const IndexSet& J : subsets)
      if (I.size() == J.size() && I != J && gale_leq(I, J)) pairs.emplace_back(I, J);

  std::vector<ExactMatrix> samples;
  for (int t = 0; t < 6; ++t) samples.push_back(random_unitriangular(n, 900 + t));

  for (const auto& [i1, j1] : pairs)
    for (const auto& [i2, j2] : pairs) {
      bool same_key = skew_shape(i1, j1, n).canonical_key() ==
                      skew_shape(i2, j2, n).canonical_key();
      bool same_values = true;
      for (const ExactMatrix& x : samples)
        same_values = same_values && eval_minor(x, {i1, j1}) == eval_minor(x, {i2, j2});
      CHECK(same_key == same_values);
    }
}

TEST_CASE("gale order coincides with Young diagram containment") {
  // lambda_J inside lambda_I, read off from the widths of the skew shape
  // being nonnegative, is exactly the elementwise criterion.
  const int n = 5;
  std::vector<IndexSet> subsets;
  for (int bits = 1; bits < 32; ++bits) {
    IndexSet s;
    for (int x = 1; x <= n; ++x)
      if (bits & (1 << (x - 1))) s.push_back(x);
    subsets.push_back(s);
  }
  auto row_lengths = [&](const IndexSet& I) {
    std::vector<int> rows;
    for (size_t a = 0; a < I.size(); ++a) rows.push_back(n - I[a] + static_cast<int>(a) + 1);
    return rows;
  };
  for (const IndexSet& I : subsets)
    for (const IndexSet& J : subsets) {
      if (I.size() != J.size()) continue;
      auto li = row_lengths(I), lj = row_lengths(J);
      bool contained = true;
      for (size_t a = 0; a < li.size(); ++a) contained = contained && lj[a] <= li[a];
      CHECK(contained == gale_leq(I, J));
    }
}
