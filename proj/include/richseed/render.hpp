#pragma once

#include <sstream>
#include <string>

#include "richseed/ingermanson.hpp"
#include "richseed/leclerc.hpp"
#include "richseed/wiring.hpp"

namespace richseed {

enum class Annotations { Labels, Monomials, Shapes };

namespace detail {

inline std::string set_str(const IndexSet& s) { return "{" + join(s) + "}"; }

inline std::string chamber_annotations(const WiringDiagram& d, Annotations mode) {
  std::ostringstream os;
  AppearanceMatrix m;
  ChamberModuleTable table;
  if (mode == Annotations::Monomials) m = appearance_matrix(d);
  if (mode == Annotations::Shapes) table = chamber_modules(d);
  for (int c = 1; c <= d.len; ++c) {
    os << "chamber " << c << (d.frozen[c] ? " (frozen)" : "") << ": ";
    switch (mode) {
      case Annotations::Labels:
        os << "left v=" << set_str(d.left_v[c]) << " w=" << set_str(d.left_w[c])
           << "  right v=" << set_str(d.right_v[c]) << " w=" << set_str(d.right_w[c]);
        break;
      case Annotations::Monomials: {
        std::string mono;
        for (int dd : m.solid)
          if (m.at(c, dd)) {
            if (!mono.empty()) mono += "*";
            mono += "A" + std::to_string(dd);
          }
        os << (mono.empty() ? "1" : mono);
        break;
      }
      case Annotations::Shapes: {
        if (table.shape[c].empty()) {
          os << "empty";
          break;
        }
        bool first = true;
        for (size_t i = 0; i < table.comps[c].size(); ++i) {
          if (!first) os << ", ";
          first = false;
          auto run = table.comps[c][i].content_runs().front();
          os << "[" << run.first << ".." << run.second << "]"
             << table.keys[c][i].to_string();
        }
        break;
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace detail

// Fixed-width text rendering: one row per wire slot, top slot first; solid
// crossings print as X, hollow ones as o, on both rows they join.
inline std::string render_ascii(const WiringDiagram& d, Annotations mode) {
  std::ostringstream os;
  os << "stacked wiring diagram: v=" << d.v.to_string() << " w=" << d.w.to_string()
     << " word=[" << join(d.word.letters) << "]\n";
  for (int slot = d.n; slot >= 1; --slot) {
    os << slot << " ";
    for (int c = 1; c <= d.len; ++c) {
      char mark = d.hollow(c) ? 'o' : 'X';
      if (d.height(c) == slot || d.height(c) + 1 == slot)
        os << "-" << mark << "-";
      else
        os << "---";
    }
    os << "\n";
  }
  os << "  ";
  for (int c = 1; c <= d.len; ++c) os << " " << c % 10 << " ";
  os << "\n";
  os << detail::chamber_annotations(d, mode);
  return os.str();
}

// Deterministic SVG: strand polylines with circles at the crossings, filled
// for solid and hollow for hollow ones.
inline std::string render_svg(const WiringDiagram& d, Annotations mode) {
  const int dx = 40, dy = 30, x0 = 30, y0 = 20;
  auto xpos = [&](int gap) { return x0 + gap * dx; };
  auto ypos = [&](int slot) { return y0 + (d.n - slot) * dy; };
  std::ostringstream os;
  int width = xpos(d.len) + x0, height = ypos(0) + y0;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\">\n";
  for (int strand = 1; strand <= d.n; ++strand) {
    os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (int gap = 0; gap <= d.len; ++gap) {
      if (gap) os << " ";
      os << xpos(gap) << "," << ypos(d.w_slot_of(gap, strand));
    }
    os << "\"/>\n";
  }
  for (int strand = 1; strand <= d.n; ++strand) {
    os << "<polyline fill=\"none\" stroke=\"green\" stroke-dasharray=\"4 3\" points=\"";
    for (int gap = 0; gap <= d.len; ++gap) {
      if (gap) os << " ";
      os << xpos(gap) << "," << ypos(d.v_slot_of(gap, strand)) + 3;
    }
    os << "\"/>\n";
  }
  for (int c = 1; c <= d.len; ++c) {
    int cx = (xpos(c - 1) + xpos(c)) / 2;
    int cy = (ypos(d.height(c)) + ypos(d.height(c) + 1)) / 2;
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\" stroke=\"black\" fill=\""
       << (d.hollow(c) ? "white" : "black") << "\"/>\n";
  }
  os << "<!--\n" << detail::chamber_annotations(d, mode) << "-->\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace richseed
