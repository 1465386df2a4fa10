#pragma once

#include <map>
#include <string>
#include <vector>

#include "richseed/util.hpp"

namespace richseed {

// An ice quiver: labeled vertices with frozen flags and multiplicity arrows.
struct Quiver {
  struct Vertex {
    int label = 0;
    bool frozen = false;
    auto operator<=>(const Vertex&) const = default;
  };

  std::vector<Vertex> vertices;                 // sorted by label
  std::map<std::pair<int, int>, int> arrows;    // (from, to) -> count > 0

  bool operator==(const Quiver&) const = default;

  bool is_frozen(int label) const {
    for (const Vertex& v : vertices)
      if (v.label == label) return v.frozen;
    check(false, "Quiver: unknown label");
    return false;
  }

  void add_arrow(int from, int to, int count) {
    if (count == 0) return;
    check(count > 0, "Quiver: arrow counts must be positive");
    arrows[{from, to}] += count;
  }

  void delete_frozen_frozen() {
    for (auto it = arrows.begin(); it != arrows.end();) {
      if (is_frozen(it->first.first) && is_frozen(it->first.second))
        it = arrows.erase(it);
      else
        ++it;
    }
  }

  bool has_loops() const {
    for (const auto& [e, cnt] : arrows)
      if (e.first == e.second && cnt > 0) return true;
    return false;
  }

  // Mutable-mutable pairs with arrows in both directions.
  bool has_two_cycles_among_mutable() const {
    for (const auto& [e, cnt] : arrows) {
      if (cnt <= 0 || e.first >= e.second) continue;
      if (is_frozen(e.first) || is_frozen(e.second)) continue;
      auto rev = arrows.find({e.second, e.first});
      if (rev != arrows.end() && rev->second > 0) return true;
    }
    return false;
  }

  bool loop_at_mutable() const {
    for (const auto& [e, cnt] : arrows)
      if (e.first == e.second && cnt > 0 && !is_frozen(e.first)) return true;
    return false;
  }

  std::string to_string() const {
    std::string s = "vertices:";
    for (const Vertex& v : vertices)
      s += " " + std::to_string(v.label) + (v.frozen ? "*" : "");
    s += " arrows:";
    for (const auto& [e, cnt] : arrows)
      s += " " + std::to_string(e.first) + "->" + std::to_string(e.second) + "x" +
           std::to_string(cnt);
    return s;
  }
};

}  // namespace richseed
