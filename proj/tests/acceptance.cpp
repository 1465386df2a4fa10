// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code 0 when every criterion passes.

#include <cstdio>
#include <string>
#include <vector>

#include "richseed/checks.hpp"

using namespace richseed;

namespace {

constexpr std::uint64_t kSeed = 20250801;
constexpr int kTrials = 100;
constexpr int kSampleCountN5 = 200;

struct Criterion {
  std::string name;
  bool ok = true;
  long cases = 0;
  std::string detail;

  void fold(const VerifyReport& report) {
    for (const auto& o : report.outcomes) {
      cases += o.cases;
      if (o.failures > 0) {
        ok = false;
        if (detail.empty()) detail = o.first_counterexample;
      }
    }
  }
};

CaseSpec exhaustive_spec(int n, std::vector<std::string> checks) {
  CaseSpec spec;
  spec.n = n;
  spec.exhaustive = true;
  spec.seed = kSeed;
  spec.trials = kTrials;
  spec.checks = std::move(checks);
  return spec;
}

CaseSpec sampled_spec_n5(std::vector<std::string> checks) {
  CaseSpec spec;
  spec.n = 5;
  spec.exhaustive = false;
  spec.sample_count = kSampleCountN5;
  spec.seed = kSeed;
  spec.trials = kTrials;
  spec.checks = std::move(checks);
  return spec;
}

// The shared case set: exhaustive for n up to 4, plus a deterministic
// sample of 200 cases at n = 5.
Criterion over_case_set(const std::string& name, const std::vector<std::string>& checks,
                        bool include_n5 = true) {
  Criterion c{name};
  for (int n = 1; n <= 4; ++n) c.fold(verify(exhaustive_spec(n, checks)));
  if (include_n5) c.fold(verify(sampled_spec_n5(checks)));
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back(
      over_case_set("1 appearance agreement (exhaustive n<=4 + 200 cases n=5)",
                    {"appearance"}));
  criteria.push_back(over_case_set(
      "2 variable correspondence: minors related by v,w and path height = truncation bound",
      {"varcorr"}));
  criteria.push_back(over_case_set(
      "3 quiver equality with no loops and no 2-cycles among mutable vertices",
      {"quiver"}));
  criteria.push_back(
      over_case_set("4 base case at a solid final crossing (exhaustive n<=4)",
                    {"base-case"}, false));

  {
    Criterion c{"5 exact identities: factorization, translation, Desnanot-Jacobi, hollow relation"};
    for (int n = 2; n <= 6; ++n) c.fold(verify(exhaustive_spec(n, {"factorization"})));
    for (int n = 1; n <= 4; ++n) c.fold(verify(exhaustive_spec(n, {"hollow"})));
    criteria.push_back(c);
  }

  {
    Criterion c{"6 paper regression fixtures"};
    c.fold(verify(exhaustive_spec(4, {"fixtures"})));
    criteria.push_back(c);
  }

  criteria.push_back(over_case_set(
      "7 structural counts: distinct factor keys and unitriangular appearance matrix",
      {"counts", "matrix"}));
  criteria.push_back(over_case_set("8 stability under one-letter truncations",
                                   {"stability"}));
  criteria.push_back(
      over_case_set("9 exchange ratio agreement (exhaustive n<=4)", {"exchange"}, false));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (c.ok) {
      std::printf("PASS  criterion %s [%ld case checks]\n", c.name.c_str(), c.cases);
    } else {
      ++failures;
      std::printf("FAIL  criterion %s: %s\n", c.name.c_str(), c.detail.c_str());
    }
  }
  std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "SUCCESS" : "FAILURE",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
