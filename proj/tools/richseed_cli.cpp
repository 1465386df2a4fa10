// Command line access to the seed constructions: inspect a PDS, render a
// stacked wiring diagram, export either seed as JSON or DOT, evaluate exact
// minors, and run the verification suite over enumerated cases.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "richseed/checks.hpp"
#include "richseed/enumerate.hpp"
#include "richseed/exact.hpp"
#include "richseed/export_io.hpp"
#include "richseed/render.hpp"

namespace {

using namespace richseed;

Perm parse_perm(const std::string& text, int n) {
  require(n <= 9, "one-line permutation syntax is limited to n <= 9");
  require(static_cast<int>(text.size()) == n, "permutation has wrong length");
  std::vector<int> line;
  for (char ch : text) {
    require(ch >= '1' && ch <= '9', "permutation must be digits 1..9");
    line.push_back(ch - '0');
  }
  return Perm(line);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

struct DiagramArgs {
  int n = 0;
  std::string v;
  std::string word;

  WiringDiagram build() const {
    ReducedWord rw{n, parse_ints(word)};
    require_reduced(rw);
    return build_diagram(v.empty() ? Perm(n) : parse_perm(v, n), rw);
  }
};

void add_diagram_args(CLI::App* cmd, DiagramArgs& args) {
  cmd->add_option("--n", args.n, "ambient rank")->required();
  cmd->add_option("--v", args.v, "one-line permutation, digits (default identity)");
  cmd->add_option("--word", args.word, "comma separated word letters, may be empty");
}

Annotations parse_annotations(const std::string& s) {
  if (s == "labels") return Annotations::Labels;
  if (s == "monomials") return Annotations::Monomials;
  if (s == "shapes") return Annotations::Shapes;
  throw std::invalid_argument("unknown annotation mode: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster seeds for open Richardson varieties"};
  app.require_subcommand(1);

  DiagramArgs pds_args;
  auto* pds_cmd = app.add_subcommand("pds", "positive distinguished subexpression");
  add_diagram_args(pds_cmd, pds_args);

  DiagramArgs diagram_args;
  std::string diagram_format = "ascii", annotations = "labels";
  auto* diagram_cmd = app.add_subcommand("diagram", "render the stacked wiring diagram");
  add_diagram_args(diagram_cmd, diagram_args);
  diagram_cmd->add_option("--format", diagram_format, "ascii or svg");
  diagram_cmd->add_option("--annotations", annotations, "labels, monomials or shapes");

  DiagramArgs seed_args;
  std::string construction = "ingermanson", seed_format = "json";
  auto* seed_cmd = app.add_subcommand("seed", "export a full seed");
  add_diagram_args(seed_cmd, seed_args);
  seed_cmd->add_option("--construction", construction, "ingermanson or leclerc");
  seed_cmd->add_option("--format", seed_format, "json or dot");

  DiagramArgs quiver_args;
  std::string quiver_construction = "ingermanson", quiver_format = "dot";
  auto* quiver_cmd = app.add_subcommand("quiver", "export the seed quiver");
  add_diagram_args(quiver_cmd, quiver_args);
  quiver_cmd->add_option("--construction", quiver_construction, "ingermanson or leclerc");
  quiver_cmd->add_option("--format", quiver_format, "json or dot");

  int minor_n = 0;
  std::uint64_t minor_seed = 1;
  std::string rows, cols;
  auto* minor_cmd =
      app.add_subcommand("eval-minor", "evaluate a minor on a seeded random unitriangular matrix");
  minor_cmd->add_option("--n", minor_n, "matrix size")->required();
  minor_cmd->add_option("--seed", minor_seed, "matrix seed");
  minor_cmd->add_option("--rows", rows, "comma separated row set")->required();
  minor_cmd->add_option("--cols", cols, "comma separated column set")->required();

  CaseSpec spec;
  std::string checks_arg, verify_v, verify_word;
  bool exhaustive_flag = false;
  auto* verify_cmd = app.add_subcommand("verify", "run registered checks over enumerated cases");
  verify_cmd->add_option("--n", spec.n, "ambient rank")->required();
  verify_cmd->add_flag("--exhaustive", exhaustive_flag, "run all cases (default samples)");
  verify_cmd->add_option("--samples", spec.sample_count, "sample size when not exhaustive");
  verify_cmd->add_option("--seed", spec.seed, "seed for sampling and random matrices");
  verify_cmd->add_option("--trials", spec.trials, "trials per exact identity");
  verify_cmd->add_option("--checks", checks_arg, "comma separated check names (default all)");
  verify_cmd->add_option("--v", verify_v, "pin the subpermutation");
  verify_cmd->add_option("--word", verify_word, "pin the reduced word");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (pds_cmd->parsed()) {
      WiringDiagram d = pds_args.build();
      std::cout << "v = " << d.v.to_string() << ", w = " << d.w.to_string() << "\n";
      std::cout << "mask:    ";
      for (int i = 1; i <= d.len; ++i) std::cout << (d.mask.supported(i) ? 1 : 0);
      std::cout << "\nhollow = {" << join(d.hollow_crossings())
                << "}\nsolid  = {" << join(d.solid_crossings()) << "}\n";
    } else if (diagram_cmd->parsed()) {
      WiringDiagram d = diagram_args.build();
      Annotations mode = parse_annotations(annotations);
      if (diagram_format == "ascii")
        std::cout << render_ascii(d, mode);
      else if (diagram_format == "svg")
        std::cout << render_svg(d, mode);
      else
        throw std::invalid_argument("unknown format: " + diagram_format);
    } else if (seed_cmd->parsed()) {
      WiringDiagram d = seed_args.build();
      SeedExport seed = build_seed_export(d, construction);
      if (seed_format == "json")
        std::cout << seed_to_json(seed).dump(2) << "\n";
      else if (seed_format == "dot")
        std::cout << quiver_to_dot(seed.quiver, construction == "ingermanson" ? "A" : "B");
      else
        throw std::invalid_argument("unknown format: " + seed_format);
    } else if (quiver_cmd->parsed()) {
      WiringDiagram d = quiver_args.build();
      SeedExport seed = build_seed_export(d, quiver_construction);
      if (quiver_format == "dot") {
        std::cout << quiver_to_dot(seed.quiver, quiver_construction == "ingermanson" ? "A" : "B");
      } else if (quiver_format == "json") {
        std::cout << seed_to_json(seed)["quiver"].dump(2) << "\n";
      } else {
        throw std::invalid_argument("unknown format: " + quiver_format);
      }
    } else if (minor_cmd->parsed()) {
      ExactMatrix x = random_unitriangular(minor_n, minor_seed);
      MinorIndex idx{parse_ints(rows), parse_ints(cols)};
      std::cout << eval_minor(x, idx).str() << "\n";
    } else if (verify_cmd->parsed()) {
      spec.exhaustive = exhaustive_flag || spec.sample_count == 0;
      if (verify_cmd->count("--checks")) {
        std::string cur;
        for (char ch : checks_arg + ",") {
          if (ch == ',') {
            if (!cur.empty()) spec.checks.push_back(cur);
            cur.clear();
          } else {
            cur += ch;
          }
        }
      } else {
        spec.checks = all_check_names();
      }
      if (!verify_v.empty()) spec.v_filter = parse_perm(verify_v, spec.n);
      if (!verify_word.empty() || verify_cmd->count("--word"))
        spec.word_filter = ReducedWord{spec.n, parse_ints(verify_word)};
      VerifyReport report = verify(spec);
      std::cout << report_to_json(report).dump(2) << "\n";
      return report.ok() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
