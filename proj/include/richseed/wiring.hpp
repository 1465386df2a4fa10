#pragma once

#include <set>
#include <vector>

#include "richseed/perm.hpp"
#include "richseed/util.hpp"

namespace richseed {

// Sentinel for a chamber that is open on the right; such regions carry unit
// minors and are not indexed by a crossing.
inline constexpr int kOpen = 0;

enum class Side { Left, Right };

// The stacked wiring diagram of a pair (v, word). Crossings are indexed
// 1..len from left to right; crossing c lies at height h_c between wire
// slots h_c and h_c+1. The chamber named c is the one immediately to the
// left of crossing c; it sits at level h_c, with h_c strands passing below.
//
// Strands are named by their right endpoints. At the gap after crossing t
// (gap 0 is the far left, gap len the far right), slot k carries the
// w-strand w_up(t+1)(k), where w_up(c) is the product of the letters from
// position len down to position c. The v-strands use the masked letters.
struct WiringDiagram {
  int n = 0;
  ReducedWord word;
  Perm v, w;
  SubexpressionMask mask;
  int len = 0;

  // Products indexed 1..len+1: lo(c) multiplies letters 1..c-1 in order,
  // up(c) multiplies letters len..c in reverse order, so up(c) = w^-1 lo(c).
  std::vector<Perm> w_lo, w_up, v_lo, v_up;
  std::vector<Perm> w_up_inv, v_up_inv;

  // Chamber data, indexed by crossing 1..len (entry 0 unused).
  std::vector<IndexSet> left_w, right_w, left_v, right_v;
  std::vector<bool> frozen;

  // Nearest-crossing adjacency per crossing: the chamber to the right, above
  // and below crossing c is the chamber of the next crossing at heights h_c,
  // h_c+1, h_c-1 respectively, or kOpen. left_cross(c) bounds chamber c on
  // the left.
  std::vector<int> adj_right, adj_up, adj_down, adj_left_cross;

  int height(int c) const { return word.letter(c); }
  bool hollow(int c) const { return mask.supported(c); }
  bool solid(int c) const { return !mask.supported(c); }

  std::vector<int> solid_crossings() const { return mask.complement(); }
  std::vector<int> hollow_crossings() const { return mask.support(); }

  // Right endpoint of the w-strand in slot k at gap t.
  int w_strand_at(int gap, int slot) const { return w_up[gap + 1](slot); }
  int v_strand_at(int gap, int slot) const { return v_up[gap + 1](slot); }
  // Slot of the w-strand with right endpoint r at gap t.
  int w_slot_of(int gap, int strand) const { return w_up_inv[gap + 1](strand); }
  int v_slot_of(int gap, int strand) const { return v_up_inv[gap + 1](strand); }

  int rising_strand(int c) const { return w_strand_at(c, height(c) + 1); }
  int falling_strand(int c) const { return w_strand_at(c, height(c)); }
};

inline WiringDiagram build_diagram(const Perm& v, const ReducedWord& word) {
  require(v.size() == word.n, "build_diagram: ambient mismatch");
  WiringDiagram d;
  d.n = word.n;
  d.word = word;
  d.v = v;
  d.w = product(word);
  d.mask = pds(v, word);
  d.len = word.length();

  const int L = d.len;
  d.w_lo.assign(L + 2, Perm(d.n));
  d.v_lo.assign(L + 2, Perm(d.n));
  d.w_up.assign(L + 2, Perm(d.n));
  d.v_up.assign(L + 2, Perm(d.n));
  for (int c = 1; c <= L; ++c) {
    d.w_lo[c + 1] = d.w_lo[c].right_mul_s(word.letter(c));
    d.v_lo[c + 1] = d.mask.supported(c) ? d.v_lo[c].right_mul_s(word.letter(c)) : d.v_lo[c];
  }
  for (int c = L; c >= 1; --c) {
    d.w_up[c] = d.w_up[c + 1] * simple_transposition(d.n, word.letter(c));
    d.v_up[c] = d.mask.supported(c)
                    ? d.v_up[c + 1] * simple_transposition(d.n, word.letter(c))
                    : d.v_up[c + 1];
  }
  d.w_up_inv.resize(L + 2);
  d.v_up_inv.resize(L + 2);
  for (int c = 1; c <= L + 1; ++c) {
    d.w_up_inv[c] = d.w_up[c].inverse();
    d.v_up_inv[c] = d.v_up[c].inverse();
  }
  check(d.w_lo[L + 1] == d.w, "build_diagram: prefix product mismatch");
  check(d.v_lo[L + 1] == v, "build_diagram: subexpression product mismatch");

  d.left_w.resize(L + 1);
  d.right_w.resize(L + 1);
  d.left_v.resize(L + 1);
  d.right_v.resize(L + 1);
  d.frozen.assign(L + 1, false);
  d.adj_right.assign(L + 1, kOpen);
  d.adj_up.assign(L + 1, kOpen);
  d.adj_down.assign(L + 1, kOpen);
  d.adj_left_cross.assign(L + 1, kOpen);

  for (int c = 1; c <= L; ++c) {
    int h = d.height(c);
    d.left_w[c] = d.w_lo[c].prefix_image(h);
    d.right_w[c] = d.w_up[c].prefix_image(h);
    d.left_v[c] = d.v_lo[c].prefix_image(h);
    d.right_v[c] = d.v_up[c].prefix_image(h);
    check(d.w.apply(d.right_w[c]) == d.left_w[c],
          "label relation: left must be w of right");
    check(d.v.apply(d.right_v[c]) == d.left_v[c],
          "label relation: left must be v of right");
    for (int e = c + 1; e <= L && (d.adj_right[c] == kOpen || d.adj_up[c] == kOpen ||
                                   d.adj_down[c] == kOpen);
         ++e) {
      if (d.adj_right[c] == kOpen && d.height(e) == h) d.adj_right[c] = e;
      if (d.adj_up[c] == kOpen && d.height(e) == h + 1) d.adj_up[c] = e;
      if (d.adj_down[c] == kOpen && d.height(e) == h - 1) d.adj_down[c] = e;
    }
    for (int e = c - 1; e >= 1; --e) {
      if (d.height(e) == h) {
        d.adj_left_cross[c] = e;
        break;
      }
    }
    d.frozen[c] = (d.adj_left_cross[c] == kOpen);
  }
  return d;
}

// The (v-label, w-label) pair of the chamber left of crossing c, on the
// requested side; these index the chamber minor.
inline std::pair<IndexSet, IndexSet> chamber_labels(const WiringDiagram& d, int c,
                                                    Side side) {
  require(c >= 1 && c <= d.len, "chamber_labels: crossing out of range");
  if (side == Side::Left) return {d.left_v[c], d.left_w[c]};
  return {d.right_v[c], d.right_w[c]};
}

struct SpreadBoundary {
  std::vector<int> left_ends;
  std::vector<int> right_ends;
  std::vector<int> cusps;
};

// Classify the crossings bounding a union of chambers. Open regions count
// as outside.
inline SpreadBoundary spread_boundary(const WiringDiagram& d,
                                      const std::set<int>& region) {
  for (int c : region)
    require(c >= 1 && c <= d.len, "spread_boundary: unknown chamber");
  SpreadBoundary out;
  auto inside = [&](int chamber) {
    return chamber != kOpen && region.count(chamber) > 0;
  };
  for (int c = 1; c <= d.len; ++c) {
    bool l = inside(c);
    bool r = inside(d.adj_right[c]);
    bool u = inside(d.adj_up[c]);
    bool dn = inside(d.adj_down[c]);
    if (!l && r) out.left_ends.push_back(c);
    if (l && !r) out.right_ends.push_back(c);
    int in_count = int(l) + int(r) + int(u) + int(dn);
    bool boundary = in_count > 0 && in_count < 4;
    if (boundary && in_count % 2 == 1) out.cusps.push_back(c);
  }
  return out;
}

}  // namespace richseed
