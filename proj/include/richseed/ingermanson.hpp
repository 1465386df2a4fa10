#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "richseed/quiver.hpp"
#include "richseed/shapes.hpp"
#include "richseed/util.hpp"
#include "richseed/wiring.hpp"

namespace richseed {

// Gale-minimum of { u(I) : I <= J }, by brute force over the Gale downset.
// The downset is a matroid, so the minimum exists and is unique; membership
// of the pointwise minimum is asserted.
inline IndexSet piv(const IndexSet& J, const Perm& u) {
  require(is_index_set(J, u.size()), "piv: bad index set");
  std::vector<IndexSet> images;
  IndexSet current(J.size());
  auto rec = [&](auto&& self, size_t pos, int low) -> void {
    if (pos == J.size()) {
      images.push_back(u.apply(current));
      return;
    }
    for (int x = low; x <= J[pos]; ++x) {
      current[pos] = x;
      self(self, pos + 1, x + 1);
    }
  };
  rec(rec, 0, 1);
  check(!images.empty(), "piv: empty downset");
  IndexSet best = images[0];
  for (const IndexSet& img : images)
    for (size_t i = 0; i < best.size(); ++i) best[i] = std::min(best[i], img[i]);
  bool member = false;
  for (const IndexSet& img : images) member = member || img == best;
  check(member, "piv: pointwise minimum is not attained, matroid property broken");
  return best;
}

// The 0/1 appearance matrix: rows over all crossings, columns over solid
// crossings; entry (c, d) says whether cluster variable d appears in
// chamber c, decided by the pivot jump at crossing d seen from height data
// propagated back to chamber c.
struct AppearanceMatrix {
  int len = 0;
  std::vector<int> solid;       // column labels, increasing
  Mat<int> entries;             // len x len; column d meaningful for solid d

  int at(int c, int d) const { return entries.at(c - 1, d - 1); }
};

// Heights of the w-strands below chamber c transported to just before
// crossing d: the product s_{h_{d-1}} ... s_{h_c} applied to [h_c], with
// the letter at c acting first.
inline IndexSet transported_heights(const WiringDiagram& d, int c, int target) {
  Perm t(d.n);
  for (int e = c; e < target; ++e) t = t.left_mul_s(d.height(e));
  return t.prefix_image(d.height(c));
}

inline AppearanceMatrix appearance_matrix(const WiringDiagram& wd) {
  AppearanceMatrix m;
  m.len = wd.len;
  m.solid = wd.solid_crossings();
  m.entries = Mat<int>(wd.len, wd.len);
  for (int d : m.solid) {
    const Perm& before = wd.v_lo[d];
    Perm after = before.right_mul_s(wd.height(d));
    for (int c = 1; c <= d; ++c) {
      IndexSet L = transported_heights(wd, c, d);
      IndexSet lo = piv(L, before);
      IndexSet hi = piv(L, after);
      check(gale_leq(lo, hi), "appearance matrix: pivot sets out of order");
      m.entries.at(c - 1, d - 1) = (lo == hi) ? 0 : 1;
    }
  }
  return m;
}

// Exact integer inverse of the solid-row submatrix, which must be upper
// unitriangular with 0/1 entries.
inline Mat<int> monomial_matrix_P(const AppearanceMatrix& m) {
  const int s = static_cast<int>(m.solid.size());
  Mat<int> a(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      int e = m.at(m.solid[i], m.solid[j]);
      require(e == 0 || e == 1, "monomial_matrix_P: entries must be 0/1");
      if (i == j) require(e == 1, "monomial_matrix_P: diagonal must be 1");
      if (i > j) require(e == 0, "monomial_matrix_P: lower part must vanish");
      a.at(i, j) = e;
    }
  Mat<int> p = Mat<int>::identity(s);
  // Back substitution over the integers.
  for (int j = s - 1; j >= 0; --j)
    for (int i = j - 1; i >= 0; --i) {
      if (a.at(i, j) == 0) continue;
      int f = a.at(i, j);
      for (int c = 0; c < s; ++c) {
        a.at(i, c) -= f * a.at(j, c);
        p.at(i, c) -= f * p.at(j, c);
      }
    }
  check(a == Mat<int>::identity(s), "monomial_matrix_P: inversion failed");
  return p;
}

// A Laurent monomial in chamber minors: exponent per chamber index.
struct LaurentMonomial {
  std::map<int, int> exp;

  void add(int chamber, int e) {
    if (chamber == kOpen || e == 0) return;
    exp[chamber] += e;
    if (exp[chamber] == 0) exp.erase(chamber);
  }
  bool operator==(const LaurentMonomial&) const = default;

  std::string to_string() const {
    if (exp.empty()) return "1";
    std::string s;
    for (auto [c, e] : exp) {
      if (!s.empty()) s += "*";
      s += "D" + std::to_string(c);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }
};

// Rewrite hollow chamber exponents through the hollow binomial relation,
// pushing weight strictly to the right; the result is supported on solid
// chambers and is a normal form modulo the hollow relations.
inline LaurentMonomial reduce_to_solid(const WiringDiagram& d, LaurentMonomial mono) {
  for (int c = 1; c <= d.len; ++c) {
    if (!d.hollow(c)) continue;
    auto it = mono.exp.find(c);
    if (it == mono.exp.end()) continue;
    int e = it->second;
    mono.exp.erase(it);
    mono.add(d.adj_up[c], e);
    mono.add(d.adj_down[c], e);
    mono.add(d.adj_right[c], -e);
  }
  for (auto [c, e] : mono.exp)
    check(d.solid(c), "reduce_to_solid: hollow exponent survived");
  return mono;
}

// Exponents of the crossing monomial t_c: chambers above and below over
// chambers left and right.
inline LaurentMonomial crossing_monomial(const WiringDiagram& d, int c) {
  LaurentMonomial t;
  t.add(d.adj_up[c], 1);
  t.add(d.adj_down[c], 1);
  t.add(c, -1);
  t.add(d.adj_right[c], -1);
  return t;
}

// Orientation of the arrow configuration placed around each crossing of the
// w-diagram: a full horizontal arrow and four half arrows.
struct HalfArrowVariant {
  bool horizontal_right_to_left = true;  // full arrow right chamber -> left
  bool verticals_into_right = true;      // up -> right and down -> right
  bool left_into_verticals = true;       // left -> up and left -> down
  auto operator<=>(const HalfArrowVariant&) const = default;
};

// The calibrated orientation: fixed once against the endomorphism-quiver
// oracle over all rank 3 cases, and consistent with the crossing-monomial
// form of the exchange ratios.
inline constexpr HalfArrowVariant kCalibratedHalfArrows{true, true, true};

inline std::vector<HalfArrowVariant> all_half_arrow_variants() {
  std::vector<HalfArrowVariant> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) out.push_back({a == 0, b == 0, c == 0});
  return out;
}

// Signed adjacency of the wiring diagram quiver on chambers. Entries are in
// whole arrows after halving; contributions between two frozen chambers are
// dropped, everything else must come out integral.
inline Mat<int> wiring_quiver_matrix(const WiringDiagram& d,
                                     const HalfArrowVariant& variant = kCalibratedHalfArrows) {
  Mat<int> twice(d.len + 1, d.len + 1);
  auto add = [&](int from, int to, int halves) {
    if (from == kOpen || to == kOpen) return;
    twice.at(from, to) += halves;
  };
  for (int c = 1; c <= d.len; ++c) {
    int L = c, R = d.adj_right[c], U = d.adj_up[c], D = d.adj_down[c];
    if (variant.horizontal_right_to_left)
      add(R, L, 2);
    else
      add(L, R, 2);
    if (variant.verticals_into_right) {
      add(U, R, 1);
      add(D, R, 1);
    } else {
      add(R, U, 1);
      add(R, D, 1);
    }
    if (variant.left_into_verticals) {
      add(L, U, 1);
      add(L, D, 1);
    } else {
      add(U, L, 1);
      add(D, L, 1);
    }
  }
  Mat<int> b(d.len, d.len);
  for (int x = 1; x <= d.len; ++x)
    for (int y = 1; y <= d.len; ++y) {
      if (d.frozen[x] && d.frozen[y]) continue;
      int net = twice.at(x, y) - twice.at(y, x);
      check(net % 2 == 0, "wiring quiver: odd half-arrow count between non-frozen pair");
      b.at(x - 1, y - 1) = net / 2;
    }
  return b;
}

// Arrow counts between cluster variables: (M^t B M) restricted to solid
// indices, with negative entries read as reversed arrows and frozen-frozen
// arrows deleted.
inline Mat<int> ing_quiver_exponents(const AppearanceMatrix& m, const Mat<int>& b) {
  const int s = static_cast<int>(m.solid.size());
  Mat<int> q(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      int acc = 0;
      for (int a = 1; a <= m.len; ++a) {
        int ma = m.at(a, m.solid[i]);
        if (!ma) continue;
        for (int bidx = 1; bidx <= m.len; ++bidx)
          acc += ma * b.at(a - 1, bidx - 1) * m.at(bidx, m.solid[j]);
      }
      q.at(i, j) = acc;
    }
  return q;
}

struct IngVariable {
  int label = 0;
  bool frozen = false;
  LaurentMonomial monomial;       // in left chamber minors of solid chambers
  MinorIndex minor;               // single-minor form
  std::vector<int> spread;        // chambers where the variable appears
};

struct IngSeed {
  std::vector<IngVariable> variables;
  Quiver quiver;
};

struct WiringPath {
  struct Segment {
    int strand = 0;   // right endpoint of the carrying w-strand
    int slot = 0;
    int gap_from = 0;
    int gap_to = 0;
  };
  std::vector<Segment> segments;
  int height = 0;     // slot at the right edge
};

namespace detail {

// Gap range of the segment of strand r that starts right after gap `from`,
// i.e. ends just before the next crossing involving r.
inline int segment_end(const WiringDiagram& d, int strand, int from) {
  int slot = d.w_slot_of(from, strand);
  for (int c = from + 1; c <= d.len; ++c) {
    if (d.height(c) == slot || d.height(c) == slot - 1) return c - 1;
  }
  return d.len;
}

// Whether the segment of `strand` over gaps [from, to] runs on top of one
// of the v-strands listed in `below`.
inline bool segment_touches(const WiringDiagram& d, int strand, int from, int to,
                            const IndexSet& below) {
  for (int t = from; t <= to; ++t) {
    int slot = d.w_slot_of(t, strand);
    for (int g : below)
      if (d.v_slot_of(t, g) == slot) return true;
  }
  return false;
}

}  // namespace detail

// The path from a solid crossing to the right edge: it starts on the rising
// strand and keeps to the rising strand at every surviving crossing, where
// segments running on top of a v-strand below the crossing's chamber have
// been deleted.
inline WiringPath path_pi(const WiringDiagram& d, int crossing) {
  require(crossing >= 1 && crossing <= d.len, "path_pi: crossing out of range");
  require(d.solid(crossing), "path_pi: crossing must be solid");
  const IndexSet below = d.right_v[crossing];

  WiringPath path;
  int strand = d.rising_strand(crossing);
  int gap = crossing;
  {
    int end = detail::segment_end(d, strand, gap);
    check(!detail::segment_touches(d, strand, gap, end, below),
          "path_pi: first rising segment is deleted");
    path.segments.push_back({strand, d.w_slot_of(gap, strand), gap, end});
  }
  while (true) {
    const auto& seg = path.segments.back();
    if (seg.gap_to == d.len) {
      path.height = d.w_slot_of(d.len, seg.strand);
      return path;
    }
    int c = seg.gap_to + 1;  // next crossing on the current strand
    int rising = d.rising_strand(c);
    int rise_end = detail::segment_end(d, rising, c);
    bool rising_ok = !detail::segment_touches(d, rising, c, rise_end, below);
    bool arrived_rising = (seg.strand == rising);
    if (arrived_rising)
      check(rising_ok, "path_pi: rising continuation deleted");
    int next = rising_ok ? rising : seg.strand;
    int end = rising_ok ? rise_end : detail::segment_end(d, seg.strand, c);
    if (!rising_ok)
      check(!detail::segment_touches(d, next, c, end, below),
            "path_pi: both continuations deleted");
    path.segments.push_back({next, d.w_slot_of(c, next), c, end});
  }
}

// Smallest truncation bound of the chamber module of the crossing's chamber:
// one past the top content of its northeast component.
inline int truncation_bound(const WiringDiagram& d, int crossing) {
  SkewShape shape = skew_shape(d.right_v[crossing], d.right_w[crossing], d.n);
  check(!shape.empty(), "truncation_bound: empty chamber shape at a solid crossing");
  return shape.content_runs().front().second + 1;
}

inline std::vector<IngVariable> ing_variables(const WiringDiagram& wd,
                                              const AppearanceMatrix& m,
                                              const Mat<int>& p) {
  std::vector<IngVariable> out;
  const int s = static_cast<int>(m.solid.size());
  for (int i = 0; i < s; ++i) {
    IngVariable var;
    var.label = m.solid[i];
    for (int j = 0; j < s; ++j) var.monomial.add(m.solid[j], p.at(i, j));
    for (int c = 1; c <= wd.len; ++c)
      if (m.at(c, var.label)) {
        var.spread.push_back(c);
        if (wd.frozen[c]) var.frozen = true;
      }
    WiringPath path = path_pi(wd, var.label);
    int h = path.height;
    IndexSet vh = wd.v.prefix_image(h);
    IndexSet wh = wd.w.prefix_image(h);
    auto intersect = [](const IndexSet& a, const IndexSet& b) {
      IndexSet r;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
      return r;
    };
    var.minor = {intersect(wd.left_v[var.label], vh), intersect(wd.left_w[var.label], wh)};
    check(var.minor.rows.size() == var.minor.cols.size(),
          "ing_variables: single-minor form is not square");
    out.push_back(std::move(var));
  }
  return out;
}

inline Quiver ing_quiver(const WiringDiagram& wd, const AppearanceMatrix& m,
                         const Mat<int>& b,
                         const std::vector<IngVariable>& vars) {
  Mat<int> q = ing_quiver_exponents(m, b);
  Quiver quiver;
  for (const IngVariable& v : vars) quiver.vertices.push_back({v.label, v.frozen});
  std::sort(quiver.vertices.begin(), quiver.vertices.end());
  const int s = static_cast<int>(m.solid.size());
  for (int i = 0; i < s; ++i) {
    check(q.at(i, i) == 0, "ing_quiver: nonzero diagonal");
    for (int j = 0; j < s; ++j) {
      check(q.at(i, j) == -q.at(j, i), "ing_quiver: matrix not antisymmetric");
      if (q.at(i, j) > 0) quiver.add_arrow(m.solid[i], m.solid[j], q.at(i, j));
    }
  }
  quiver.delete_frozen_frozen();
  return quiver;
}

inline IngSeed ingermanson_seed(const WiringDiagram& wd) {
  AppearanceMatrix m = appearance_matrix(wd);
  Mat<int> p = monomial_matrix_P(m);
  Mat<int> b = wiring_quiver_matrix(wd);
  IngSeed seed;
  seed.variables = ing_variables(wd, m, p);
  seed.quiver = ing_quiver(wd, m, b, seed.variables);
  return seed;
}

// The exchange ratio of a mutable variable, computed three ways and checked
// for agreement after reduction to solid chambers: from the quiver arrow
// counts, as the product of wiring-quiver ratios over the chambers of the
// spread, and as the crossing-monomial product over left ends of the spread.
inline LaurentMonomial exchange_ratio(const WiringDiagram& wd, const AppearanceMatrix& m,
                                      const Mat<int>& p, const Mat<int>& b, int c) {
  const int s = static_cast<int>(m.solid.size());
  int ci = -1;
  for (int i = 0; i < s; ++i)
    if (m.solid[i] == c) ci = i;
  require(ci >= 0, "exchange_ratio: not a solid crossing");

  Mat<int> q = ing_quiver_exponents(m, b);
  LaurentMonomial from_quiver;
  for (int j = 0; j < s; ++j) {
    int count = q.at(j, ci);  // arrows from variable j into variable c
    if (!count) continue;
    for (int e = 0; e < s; ++e) from_quiver.add(m.solid[e], count * p.at(j, e));
  }

  LaurentMonomial from_chambers;
  for (int a = 1; a <= wd.len; ++a) {
    if (!m.at(a, c)) continue;
    check(!wd.frozen[a], "exchange_ratio: mutable variable meets a frozen chamber");
    int left = wd.adj_left_cross[a];
    check(left != kOpen, "exchange_ratio: spread chamber open on the left");
    for (auto [ch, e] : crossing_monomial(wd, left).exp) from_chambers.add(ch, e);
    for (auto [ch, e] : crossing_monomial(wd, a).exp) from_chambers.add(ch, -e);
  }
  from_chambers = reduce_to_solid(wd, std::move(from_chambers));

  LaurentMonomial from_ends;
  std::set<int> region;
  for (int a = 1; a <= wd.len; ++a)
    if (m.at(a, c)) region.insert(a);
  SpreadBoundary boundary = spread_boundary(wd, region);
  for (int e : boundary.left_ends)
    for (auto [ch, ex] : crossing_monomial(wd, e).exp) from_ends.add(ch, ex);
  for (auto [ch, ex] : crossing_monomial(wd, c).exp) from_ends.add(ch, -ex);
  from_ends = reduce_to_solid(wd, std::move(from_ends));

  check(from_quiver == from_chambers,
        "exchange_ratio: quiver route disagrees with chamber route");
  check(from_quiver == from_ends,
        "exchange_ratio: quiver route disagrees with left-end route");
  return from_quiver;
}

}  // namespace richseed
