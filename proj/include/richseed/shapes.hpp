#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "richseed/perm.hpp"
#include "richseed/util.hpp"

namespace richseed {

// A box of the n x n grid, indexed like a matrix entry.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

// A Gale-comparable pair naming a minor: rows and columns, equal sizes.
struct MinorIndex {
  IndexSet rows;
  IndexSet cols;
  auto operator<=>(const MinorIndex&) const = default;

  std::string to_string() const {
    return "({" + join(rows) + "},{" + join(cols) + "})";
  }
};

// A skew shape in the n x n grid, stored as an explicit box set. The content
// of a box is row - col + n, so the upper-right corner of the grid has
// content 1 and content grows down and to the left.
class SkewShape {
 public:
  SkewShape() = default;

  static SkewShape from_boxes(int n, std::vector<Box> boxes) {
    SkewShape s;
    s.n_ = n;
    std::sort(boxes.begin(), boxes.end());
    s.boxes_ = std::move(boxes);
    s.validate();
    return s;
  }

  // The region between the lattice path of I (below) and of J (above).
  static SkewShape between(const IndexSet& lower, const IndexSet& upper, int n) {
    require(is_index_set(lower, n) && is_index_set(upper, n),
            "skew shape: bad index sets");
    require(gale_leq(lower, upper), "skew shape: lower is not Gale-below upper");
    std::vector<Box> boxes;
    for (int k = 1; k < n; ++k) {
      int lo = count_leq(upper, k);
      int hi = count_leq(lower, k);
      for (int r = lo + 1; r <= hi; ++r) boxes.push_back({r, r - k + n});
    }
    SkewShape s;
    s.n_ = n;
    std::sort(boxes.begin(), boxes.end());
    s.boxes_ = std::move(boxes);
    s.validate();
    return s;
  }

  int grid_size() const { return n_; }
  bool empty() const { return boxes_.empty(); }
  int box_count() const { return static_cast<int>(boxes_.size()); }
  const std::vector<Box>& boxes() const { return boxes_; }
  int content(const Box& b) const { return b.row - b.col + n_; }

  bool contains(const Box& b) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
  }

  // Number of boxes on each content diagonal, indexed 0..n.
  std::vector<int> content_widths() const {
    std::vector<int> w(n_ + 1, 0);
    for (const Box& b : boxes_) ++w[content(b)];
    return w;
  }

  std::vector<int> content_set() const {
    std::vector<int> out;
    auto w = content_widths();
    for (int k = 0; k <= n_; ++k)
      if (w[k] > 0) out.push_back(k);
    return out;
  }

  // Maximal content intervals, northeast (lowest content) first.
  std::vector<std::pair<int, int>> content_runs() const {
    std::vector<std::pair<int, int>> runs;
    auto w = content_widths();
    int k = 1;
    while (k <= n_) {
      if (w[k] == 0) {
        ++k;
        continue;
      }
      int a = k;
      while (k <= n_ && w[k] > 0) ++k;
      runs.emplace_back(a, k - 1);
    }
    return runs;
  }

  // Maximal sub-skew-shapes with interval content; together they partition
  // the box set. Ordered northeast to southwest.
  std::vector<SkewShape> components() const {
    std::vector<SkewShape> out;
    for (auto [a, b] : content_runs()) {
      std::vector<Box> part;
      for (const Box& box : boxes_)
        if (content(box) >= a && content(box) <= b) part.push_back(box);
      out.push_back(from_boxes(n_, std::move(part)));
    }
    return out;
  }

  // The reduced index pair obtained by dropping the common steps of the two
  // bounding lattice paths. Two shapes get equal keys exactly when they are
  // translates along the antidiagonal direction, which is when their minors
  // agree on the unipotent group.
  MinorIndex canonical_key() const {
    MinorIndex key;
    for (auto [a, b] : content_runs()) {
      key.rows.push_back(a);
      for (int t = a + 1; t <= b; ++t) {
        if (max_row(t) > max_row(t - 1)) key.rows.push_back(t);
        if (min_row(t) > min_row(t - 1)) key.cols.push_back(t);
      }
      key.cols.push_back(b + 1);
    }
    return key;
  }

  int min_row(int k) const {
    int r = 0;
    for (const Box& b : boxes_)
      if (content(b) == k && (r == 0 || b.row < r)) r = b.row;
    check(r != 0, "min_row: empty content diagonal");
    return r;
  }
  int max_row(int k) const {
    int r = 0;
    for (const Box& b : boxes_)
      if (content(b) == k) r = std::max(r, b.row);
    check(r != 0, "max_row: empty content diagonal");
    return r;
  }

  bool operator==(const SkewShape&) const = default;

  std::string to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < boxes_.size(); ++i) {
      if (i) s += " ";
      s += "(" + std::to_string(boxes_[i].row) + "," + std::to_string(boxes_[i].col) + ")";
    }
    return s + "}";
  }

 private:
  static int count_leq(const IndexSet& s, int k) {
    return static_cast<int>(std::upper_bound(s.begin(), s.end(), k) - s.begin());
  }

  void validate() const {
    for (const Box& b : boxes_) {
      require(b.row >= 1 && b.row <= n_ && b.col >= 1 && b.col <= n_,
              "skew shape: box outside the grid");
    }
    for (size_t i = 1; i < boxes_.size(); ++i)
      require(boxes_[i] != boxes_[i - 1], "skew shape: duplicate box");
    // Each content diagonal is a contiguous row interval, and the intervals
    // of adjacent diagonals inside a run shift by at most one.
    auto w = content_widths();
    for (int k = 1; k <= n_; ++k) {
      if (w[k] == 0) continue;
      require(max_row(k) - min_row(k) + 1 == w[k],
              "skew shape: content diagonal not contiguous");
      if (k > 1 && w[k - 1] > 0) {
        int dmin = min_row(k) - min_row(k - 1);
        int dmax = max_row(k) - max_row(k - 1);
        require(dmin == 0 || dmin == 1, "skew shape: upper boundary jump");
        require(dmax == 0 || dmax == 1, "skew shape: lower boundary jump");
      }
    }
  }

  int n_ = 0;
  std::vector<Box> boxes_;
};

inline SkewShape skew_shape(const IndexSet& lower, const IndexSet& upper, int n) {
  return SkewShape::between(lower, upper, n);
}

inline MinorIndex canonical_key(const SkewShape& s) { return s.canonical_key(); }

// Realize a reduced key at a given antidiagonal offset by prepending common
// steps; offset 0 reproduces the key itself as an index pair.
inline MinorIndex realize_key(const MinorIndex& key, int offset) {
  MinorIndex out = key;
  if (key.rows.empty()) return out;
  int first = key.rows.front();
  require(offset >= 0 && offset < first, "realize_key: offset does not fit");
  for (int t = 1; t <= offset; ++t) {
    out.rows.push_back(t);
    out.cols.push_back(t);
  }
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

}  // namespace richseed
