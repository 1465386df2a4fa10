#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "richseed/checks.hpp"
#include "richseed/ingermanson.hpp"
#include "richseed/leclerc.hpp"

namespace richseed {

using Json = nlohmann::ordered_json;

// Construction-neutral seed snapshot used by the JSON and DOT writers.
struct SeedExport {
  int schema = 1;
  std::string construction;
  int n = 0;
  std::string v;
  std::vector<int> word;
  std::vector<int> mask;
  struct Variable {
    int label = 0;
    bool frozen = false;
    IndexSet rows, cols;
    std::map<int, int> monomial;
    auto operator<=>(const Variable&) const = default;
  };
  std::vector<Variable> variables;
  Quiver quiver;

  bool operator==(const SeedExport&) const = default;
};

inline SeedExport build_seed_export(const WiringDiagram& d, const std::string& construction) {
  require(construction == "ingermanson" || construction == "leclerc",
          "unknown construction: " + construction);
  SeedExport out;
  out.construction = construction;
  out.n = d.n;
  out.v = d.v.to_string();
  out.word = d.word.letters;
  for (int i = 1; i <= d.len; ++i) out.mask.push_back(d.mask.supported(i) ? 1 : 0);

  AppearanceMatrix m = appearance_matrix(d);
  Mat<int> p = monomial_matrix_P(m);
  auto monomial_row = [&](int i) {
    std::map<int, int> mono;
    for (size_t j = 0; j < m.solid.size(); ++j)
      if (p.at(i, static_cast<int>(j))) mono[m.solid[j]] = p.at(i, static_cast<int>(j));
    return mono;
  };

  if (construction == "ingermanson") {
    IngSeed seed = ingermanson_seed(d);
    for (size_t i = 0; i < seed.variables.size(); ++i) {
      const IngVariable& var = seed.variables[i];
      std::map<int, int> mono(var.monomial.exp.begin(), var.monomial.exp.end());
      out.variables.push_back({var.label, var.frozen, var.minor.rows, var.minor.cols, mono});
    }
    out.quiver = seed.quiver;
  } else {
    LecSeed seed = leclerc_seed(d);
    for (size_t i = 0; i < seed.variables.size(); ++i) {
      const LecVariable& var = seed.variables[i];
      out.variables.push_back({var.label, var.frozen, var.minor.rows, var.minor.cols,
                               monomial_row(static_cast<int>(i))});
    }
    out.quiver = seed.quiver;
  }
  return out;
}

inline Json seed_to_json(const SeedExport& seed) {
  Json j;
  j["schema"] = seed.schema;
  j["construction"] = seed.construction;
  j["n"] = seed.n;
  j["v"] = seed.v;
  j["word"] = seed.word;
  j["mask"] = seed.mask;
  j["variables"] = Json::array();
  for (const auto& var : seed.variables) {
    Json jv;
    jv["label"] = var.label;
    jv["frozen"] = var.frozen;
    jv["rows"] = var.rows;
    jv["cols"] = var.cols;
    Json mono = Json::object();
    for (auto [c, e] : var.monomial) mono[std::to_string(c)] = e;
    jv["monomial"] = mono;
    j["variables"].push_back(jv);
  }
  Json q;
  q["vertices"] = Json::array();
  for (const auto& v : seed.quiver.vertices)
    q["vertices"].push_back(Json{{"label", v.label}, {"frozen", v.frozen}});
  q["arrows"] = Json::array();
  for (const auto& [e, cnt] : seed.quiver.arrows)
    q["arrows"].push_back(Json::array({e.first, e.second, cnt}));
  j["quiver"] = q;
  return j;
}

inline SeedExport parse_seed_json(const Json& j) {
  SeedExport seed;
  seed.schema = j.at("schema").get<int>();
  require(seed.schema == 1, "unsupported seed schema");
  seed.construction = j.at("construction").get<std::string>();
  seed.n = j.at("n").get<int>();
  seed.v = j.at("v").get<std::string>();
  seed.word = j.at("word").get<std::vector<int>>();
  seed.mask = j.at("mask").get<std::vector<int>>();
  for (const Json& jv : j.at("variables")) {
    SeedExport::Variable var;
    var.label = jv.at("label").get<int>();
    var.frozen = jv.at("frozen").get<bool>();
    var.rows = jv.at("rows").get<IndexSet>();
    var.cols = jv.at("cols").get<IndexSet>();
    for (auto it = jv.at("monomial").begin(); it != jv.at("monomial").end(); ++it)
      var.monomial[std::stoi(it.key())] = it.value().get<int>();
    seed.variables.push_back(std::move(var));
  }
  const Json& q = j.at("quiver");
  for (const Json& jv : q.at("vertices"))
    seed.quiver.vertices.push_back({jv.at("label").get<int>(), jv.at("frozen").get<bool>()});
  for (const Json& ja : q.at("arrows"))
    seed.quiver.arrows[{ja.at(0).get<int>(), ja.at(1).get<int>()}] = ja.at(2).get<int>();
  return seed;
}

// DOT rendering of the quiver: frozen vertices boxed, multiplicities as edge
// labels when above one.
inline std::string quiver_to_dot(const Quiver& q, const std::string& prefix) {
  std::string s = "digraph seed {\n  rankdir=LR;\n";
  for (const auto& v : q.vertices)
    s += "  \"" + prefix + std::to_string(v.label) + "\" [shape=" +
         (v.frozen ? "box" : "ellipse") + "];\n";
  for (const auto& [e, cnt] : q.arrows) {
    s += "  \"" + prefix + std::to_string(e.first) + "\" -> \"" + prefix +
         std::to_string(e.second) + "\"";
    if (cnt > 1) s += " [label=\"" + std::to_string(cnt) + "\"]";
    s += ";\n";
  }
  s += "}\n";
  return s;
}

inline Json report_to_json(const VerifyReport& report) {
  Json j;
  j["schema"] = 1;
  j["n"] = report.n;
  j["ok"] = report.ok();
  j["checks"] = Json::array();
  for (const auto& o : report.outcomes) {
    Json jo;
    jo["name"] = o.name;
    jo["cases"] = o.cases;
    jo["failures"] = o.failures;
    jo["first_counterexample"] = o.first_counterexample;
    jo["wall_ms"] = static_cast<long>(o.wall_ms);
    j["checks"].push_back(jo);
  }
  return j;
}

}  // namespace richseed
