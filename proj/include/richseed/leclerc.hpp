#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "richseed/ingermanson.hpp"
#include "richseed/modules.hpp"
#include "richseed/quiver.hpp"
#include "richseed/shapes.hpp"
#include "richseed/wiring.hpp"

namespace richseed {

// Per chamber: the skew shape of its right labels, its components and their
// keys. Right-open regions have empty shapes and never enter the table.
struct ChamberModuleTable {
  int len = 0;
  std::vector<SkewShape> shape;                  // indexed by crossing, entry 0 unused
  std::vector<std::vector<SkewShape>> comps;
  std::vector<std::vector<MinorIndex>> keys;

  bool chamber_has_key(int c, const MinorIndex& key) const {
    for (const MinorIndex& k : keys[c])
      if (k == key) return true;
    return false;
  }
};

inline ChamberModuleTable chamber_modules(const WiringDiagram& d) {
  ChamberModuleTable t;
  t.len = d.len;
  t.shape.resize(d.len + 1);
  t.comps.resize(d.len + 1);
  t.keys.resize(d.len + 1);
  for (int c = 1; c <= d.len; ++c) {
    check(gale_leq(d.right_v[c], d.right_w[c]),
          "chamber_modules: labels are not Gale-comparable");
    t.shape[c] = skew_shape(d.right_v[c], d.right_w[c], d.n);
    t.comps[c] = t.shape[c].components();
    for (const SkewShape& comp : t.comps[c]) t.keys[c].push_back(comp.canonical_key());
  }
  return t;
}

struct LecVariable {
  int label = 0;
  bool frozen = false;
  MinorIndex minor;        // truncation form of the variable's minor
  MinorIndex key;          // canonical key of the module's shape
  SkewShape module_shape;  // northeast component of the chamber shape
};

// The variable attached to a solid crossing is the minor of the northeast
// component of its chamber shape; the truncation form cuts both labels at
// the last vertical step on that component's northwest boundary. The two
// descriptions must name the same function.
inline std::vector<LecVariable> lec_variables(const WiringDiagram& d,
                                              const ChamberModuleTable& t) {
  std::vector<LecVariable> out;
  for (int label : d.solid_crossings()) {
    LecVariable var;
    var.label = label;
    check(!t.shape[label].empty(), "lec_variables: solid chamber with empty shape");
    var.module_shape = t.comps[label].front();
    var.key = t.keys[label].front();

    auto [a, b] = var.module_shape.content_runs().front();
    const IndexSet& I = d.right_v[label];
    const IndexSet& J = d.right_w[label];
    int k = 0;
    for (int x : J)
      if (x >= a && x <= b + 1) k = std::max(k, x);
    check(k > 0, "lec_variables: no vertical step on the northwest boundary");
    IndexSet rows, cols;
    for (int x : I)
      if (x <= k) rows.push_back(x);
    for (int x : J)
      if (x <= k) cols.push_back(x);
    var.minor = {rows, cols};
    check(var.minor.rows.size() == var.minor.cols.size(),
          "lec_variables: truncation form is not square");
    check(skew_shape(rows, cols, d.n).canonical_key() == var.key,
          "lec_variables: truncation form disagrees with the component minor");
    out.push_back(std::move(var));
  }

  // A variable is frozen when its factor occurs in a chamber open on the left.
  for (LecVariable& var : out)
    for (int c = 1; c <= d.len; ++c)
      if (d.frozen[c] && t.chamber_has_key(c, var.key)) var.frozen = true;
  return out;
}

// 0/1 factor-appearance matrix: rows over chambers, columns over solid
// crossings; entry set when the variable's key occurs among the component
// keys of the chamber.
inline Mat<int> lec_appearance_matrix(const WiringDiagram& d, const ChamberModuleTable& t,
                                      const std::vector<LecVariable>& vars) {
  Mat<int> m(d.len, d.len);
  std::map<MinorIndex, int> by_key;
  for (const LecVariable& var : vars) {
    check(!by_key.count(var.key), "lec_appearance_matrix: duplicate variable key");
    by_key[var.key] = var.label;
  }
  for (int c = 1; c <= d.len; ++c) {
    for (const MinorIndex& key : t.keys[c])
      check(by_key.count(key) > 0,
            "lec_appearance_matrix: chamber factor matches no cluster variable");
    for (const LecVariable& var : vars)
      if (t.chamber_has_key(c, var.key)) m.at(c - 1, var.label - 1) = 1;
  }
  return m;
}

// The seed quiver as the Gabriel quiver of the endomorphism algebra of the
// direct sum of the variables' modules, frozen-frozen arrows deleted.
inline Quiver lec_quiver(const WiringDiagram& d, const std::vector<LecVariable>& vars) {
  std::vector<GabrielSummand> summands;
  for (const LecVariable& var : vars) {
    check(var.module_shape.content_runs().size() == 1,
          "lec_quiver: summand is not connected");
    summands.push_back({var.label, var.frozen, module_from_shape(var.module_shape, d.n)});
  }
  Quiver q = gabriel_quiver(summands);
  check(!q.loop_at_mutable(), "lec_quiver: loop at a mutable vertex");
  q.delete_frozen_frozen();
  check(!q.has_two_cycles_among_mutable(), "lec_quiver: two-cycle among mutable vertices");
  return q;
}

struct LecSeed {
  std::vector<LecVariable> variables;
  Mat<int> appearance;   // len x len on solid columns
  Quiver quiver;
};

inline LecSeed leclerc_seed(const WiringDiagram& d) {
  ChamberModuleTable t = chamber_modules(d);
  LecSeed seed;
  seed.variables = lec_variables(d, t);
  seed.appearance = lec_appearance_matrix(d, t, seed.variables);
  seed.quiver = lec_quiver(d, seed.variables);
  return seed;
}

}  // namespace richseed
