#include <fstream>
#include <sstream>

#include "doctest.h"
#include "richseed/checks.hpp"
#include "richseed/enumerate.hpp"
#include "richseed/export_io.hpp"
#include "richseed/render.hpp"

using namespace richseed;

namespace {

Perm perm(std::initializer_list<int> xs) { return Perm(std::vector<int>(xs)); }

std::string golden_path(const std::string& name) {
  return std::string(RICHSEED_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("enumerate_cases") {
  SUBCASE("n=2 has three cases including the empty word") {
    auto cases = enumerate_cases({.n = 2});
    REQUIRE(cases.size() == 3);
    CHECK(cases[0].word.letters.empty());
    CHECK(cases[0].v.is_identity());
  }
  SUBCASE("deterministic order and count at n=3") {
    auto a = enumerate_cases({.n = 3});
    auto b = enumerate_cases({.n = 3});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].v == b[i].v);
      CHECK(a[i].word == b[i].word);
    }
    for (const auto& c : a) CHECK(is_unipeak(c.word));
  }
  SUBCASE("pinned filter selects exactly one case") {
    CaseSpec spec;
    spec.n = 5;
    spec.v_filter = perm({1, 2, 5, 3, 4});
    spec.word_filter = ReducedWord{5, {4, 3, 2, 1, 4, 3, 2, 3, 4}};
    auto cases = enumerate_cases(spec);
    REQUIRE(cases.size() == 1);
  }
  SUBCASE("sampling is deterministic given the seed") {
    CaseSpec spec;
    spec.n = 4;
    spec.exhaustive = false;
    spec.sample_count = 10;
    spec.seed = 5;
    auto a = enumerate_cases(spec);
    auto b = enumerate_cases(spec);
    REQUIRE(a.size() == 10);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].word == b[i].word);
  }
  SUBCASE("guard") {
    CHECK_THROWS_AS(enumerate_cases({.n = 6}), std::invalid_argument);
  }
}

TEST_CASE("verify: all checks pass on n = 2 and a failure-free report round") {
  CaseSpec spec;
  spec.n = 2;
  spec.trials = 20;
  spec.checks = all_check_names();
  VerifyReport report = verify(spec);
  CHECK(report.ok());
  CHECK(report.outcomes.size() == all_check_names().size());
  for (const auto& o : report.outcomes) {
    CHECK(o.failures == 0);
    CHECK(o.first_counterexample.empty());
  }
  Json j = report_to_json(report);
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == report.outcomes.size());
}

TEST_CASE("verify: empty check set yields an empty passing report") {
  CaseSpec spec;
  spec.n = 2;
  VerifyReport report = verify(spec);
  CHECK(report.outcomes.empty());
  CHECK(report.ok());

  spec.checks = {"fixtures"};
  report = verify(spec);
  REQUIRE(report.outcomes.size() == 1);
  CHECK(report.outcomes[0].name == "fixtures");
  CHECK(report.ok());
  CHECK_THROWS_AS(verify(CaseSpec{.n = 2, .checks = {"nope"}}), std::invalid_argument);
}

TEST_CASE("verify: reports are deterministic apart from wall time") {
  CaseSpec spec;
  spec.n = 3;
  spec.trials = 5;
  spec.seed = 11;
  spec.checks = {"appearance", "hollow", "quiver", "fixtures"};
  auto normalized = [](const VerifyReport& r) {
    Json j = report_to_json(r);
    for (auto& c : j["checks"]) c["wall_ms"] = 0;
    return j.dump();
  };
  CHECK(normalized(verify(spec)) == normalized(verify(spec)));
}

TEST_CASE("verify: the quiver check passes on the pinned running example") {
  CaseSpec spec;
  spec.n = 5;
  spec.v_filter = perm({1, 2, 5, 3, 4});
  spec.word_filter = ReducedWord{5, {4, 3, 2, 1, 4, 3, 2, 3, 4}};
  spec.checks = {"quiver", "appearance"};
  VerifyReport report = verify(spec);
  CHECK(report.ok());
  for (const auto& o : report.outcomes) CHECK(o.cases == 1);
}

TEST_CASE("ascii rendering matches the golden file for (e, s1)") {
  WiringDiagram d = build_diagram(Perm(2), {2, {1}});
  std::string got = render_ascii(d, Annotations::Labels);
  CHECK(got == read_file(golden_path("diagram_e_s1.txt")));
}

TEST_CASE("ascii rendering matches the golden file for the running example") {
  WiringDiagram d = build_diagram(perm({1, 2, 5, 3, 4}), {5, {4, 3, 2, 1, 4, 3, 2, 3, 4}});
  CHECK(render_ascii(d, Annotations::Monomials) ==
        read_file(golden_path("diagram_running_monomials.txt")));
}

TEST_CASE("shapes annotation lists component content intervals") {
  WiringDiagram d = build_diagram(perm({1, 2, 5, 3, 4}), {5, {4, 3, 2, 1, 4, 3, 2, 3, 4}});
  std::string text = render_ascii(d, Annotations::Shapes);
  CHECK(text.find("[") != std::string::npos);
  CHECK(text.find("..") != std::string::npos);
  // The final chamber carries the single box with content equal to the last
  // letter of the word.
  CHECK(text.find("chamber 9: [4..4]({4},{5})") != std::string::npos);
}

TEST_CASE("svg rendering is well formed and matches its golden file") {
  WiringDiagram d = build_diagram(perm({1, 2, 5, 3, 4}), {5, {4, 3, 2, 1, 4, 3, 2, 3, 4}});
  std::string svg = render_svg(d, Annotations::Monomials);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg == read_file(golden_path("diagram_running.svg")));
}

TEST_CASE("seed export round-trips and the two constructions align") {
  WiringDiagram d = build_diagram(perm({1, 2, 5, 3, 4}), {5, {4, 3, 2, 1, 4, 3, 2, 3, 4}});
  SeedExport ing = build_seed_export(d, "ingermanson");
  SeedExport lec = build_seed_export(d, "leclerc");

  SUBCASE("round trip") {
    CHECK(parse_seed_json(seed_to_json(ing)) == ing);
    CHECK(parse_seed_json(seed_to_json(lec)) == lec);
  }
  SUBCASE("same labels, frozen flags and quiver; index sets related by v and w") {
    REQUIRE(ing.variables.size() == lec.variables.size());
    CHECK(ing.quiver == lec.quiver);
    for (size_t i = 0; i < ing.variables.size(); ++i) {
      CHECK(ing.variables[i].label == lec.variables[i].label);
      CHECK(ing.variables[i].frozen == lec.variables[i].frozen);
      CHECK(ing.variables[i].rows == d.v.apply(lec.variables[i].rows));
      CHECK(ing.variables[i].cols == d.w.apply(lec.variables[i].cols));
    }
  }
  SUBCASE("empty seed for v = w") {
    ReducedWord word{3, {1, 2}};
    WiringDiagram dd = build_diagram(product(word), word);
    SeedExport empty = build_seed_export(dd, "ingermanson");
    CHECK(empty.variables.empty());
    CHECK(empty.quiver.vertices.empty());
    CHECK(parse_seed_json(seed_to_json(empty)) == empty);
  }
}

TEST_CASE("dot export boxes frozen vertices") {
  WiringDiagram d = build_diagram(Perm(2), {2, {1}});
  SeedExport seed = build_seed_export(d, "ingermanson");
  std::string dot = quiver_to_dot(seed.quiver, "A");
  CHECK(dot.find("\"A1\" [shape=box]") != std::string::npos);
}
