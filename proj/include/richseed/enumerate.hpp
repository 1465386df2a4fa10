#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "richseed/perm.hpp"
#include "richseed/util.hpp"

namespace richseed {

struct EnumeratedCase {
  Perm v;
  ReducedWord word;
};

// Which cases to run and how: exhaustive enumeration or deterministic
// sampling, optional pinning of a single case, seeded randomness and trial
// counts for the identity checks.
struct CaseSpec {
  int n = 3;
  bool exhaustive = true;
  int sample_count = 0;
  std::uint64_t seed = 1;
  int trials = 100;
  std::optional<Perm> v_filter;
  std::optional<ReducedWord> word_filter;
  std::vector<std::string> checks;
};

inline std::vector<Perm> symmetric_group(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

// All pairs (v <= w, unipeak reduced word of w), in a deterministic order:
// w in one-line lexicographic order, its words in descent-recursion order,
// v in one-line lexicographic order. The empty word of the identity is a
// valid case.
inline std::vector<EnumeratedCase> enumerate_cases(const CaseSpec& spec) {
  require(spec.n >= 1 && spec.n <= 5, "enumerate_cases: exhaustive guard n <= 5");
  std::vector<EnumeratedCase> all;
  for (const Perm& w : symmetric_group(spec.n)) {
    for (const ReducedWord& word : reduced_words(w)) {
      if (!is_unipeak(word)) continue;
      if (spec.word_filter && !(word == *spec.word_filter)) continue;
      for (const Perm& v : symmetric_group(spec.n)) {
        if (spec.v_filter && !(v == *spec.v_filter)) continue;
        if (!bruhat_leq(v, w)) continue;
        all.push_back({v, word});
      }
    }
  }
  if (spec.exhaustive || static_cast<int>(all.size()) <= spec.sample_count)
    return all;
  std::mt19937_64 gen(spec.seed);
  std::vector<EnumeratedCase> sample;
  std::vector<std::size_t> idx(all.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < spec.sample_count; ++i) {
    std::size_t pick = gen() % idx.size();
    sample.push_back(all[idx[pick]]);
    idx.erase(idx.begin() + static_cast<long>(pick));
  }
  return sample;
}

}  // namespace richseed
