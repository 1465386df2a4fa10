#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "richseed/shapes.hpp"
#include "richseed/util.hpp"

namespace richseed {

using Rat = boost::multiprecision::cpp_rational;
using QMat = Mat<Rat>;

struct ExactMatrix {
  int n = 0;
  std::vector<Rat> a;

  explicit ExactMatrix(int size) : n(size), a(static_cast<size_t>(size) * size) {}
  Rat& at(int r, int c) { return a[static_cast<size_t>(r - 1) * n + (c - 1)]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r - 1) * n + (c - 1)]; }
};

// Determinant by exact rational elimination.
inline Rat det(QMat m) {
  check(m.rows == m.cols, "det: square matrix required");
  Rat result(1);
  for (int col = 0; col < m.cols; ++col) {
    int pivot = -1;
    for (int r = col; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      result = -result;
    }
    result *= m.at(col, col);
    for (int r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return result;
}

inline Rat eval_minor(const ExactMatrix& m, const MinorIndex& idx) {
  require(idx.rows.size() == idx.cols.size(), "eval_minor: size mismatch");
  require(is_index_set(idx.rows, m.n) && is_index_set(idx.cols, m.n),
          "eval_minor: indices out of range");
  int k = static_cast<int>(idx.rows.size());
  QMat sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(idx.rows[i], idx.cols[j]);
  return det(std::move(sub));
}

// Deterministic small-entry generator. mt19937_64 output is pinned by the
// standard, so matrices are reproducible across platforms from the seed.
class SmallEntryRng {
 public:
  explicit SmallEntryRng(std::uint64_t seed) : gen_(seed) {}
  int next() { return static_cast<int>(gen_() % 19) - 9; }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

inline ExactMatrix random_unitriangular(int n, std::uint64_t seed) {
  require(n >= 1, "random_unitriangular: n >= 1");
  SmallEntryRng rng(seed);
  ExactMatrix m(n);
  for (int r = 1; r <= n; ++r) {
    m.at(r, r) = 1;
    for (int c = r + 1; c <= n; ++c) m.at(r, c) = rng.next();
  }
  return m;
}

inline ExactMatrix random_matrix(int n, std::uint64_t seed) {
  SmallEntryRng rng(seed);
  ExactMatrix m(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) m.at(r, c) = rng.next();
  return m;
}

struct IdentityReport {
  bool ok = true;
  std::string counterexample;
};

// On the unipotent group, a minor equals the product of the minors of the
// components of its skew shape. Checked on seeded random matrices.
inline IdentityReport verify_component_factorization(const IndexSet& lower,
                                                     const IndexSet& upper, int n,
                                                     int trials, std::uint64_t seed) {
  require(gale_leq(lower, upper), "factorization: lower not Gale-below upper");
  SkewShape shape = skew_shape(lower, upper, n);
  std::vector<MinorIndex> keys;
  for (const SkewShape& comp : shape.components()) keys.push_back(comp.canonical_key());
  MinorIndex full{lower, upper};
  for (int t = 0; t < trials; ++t) {
    ExactMatrix x = random_unitriangular(n, seed + static_cast<std::uint64_t>(t));
    Rat lhs = eval_minor(x, full);
    Rat rhs(1);
    for (const MinorIndex& key : keys) rhs *= eval_minor(x, key);
    if (lhs != rhs) {
      return {false, "factorization fails for " + full.to_string() + " at trial " +
                         std::to_string(t)};
    }
  }
  return {};
}

// Translation invariance: realizations of the same reduced key at different
// antidiagonal offsets have equal minors on the unipotent group.
inline IdentityReport verify_translation_invariance(const IndexSet& lower,
                                                    const IndexSet& upper, int n,
                                                    int trials, std::uint64_t seed) {
  SkewShape shape = skew_shape(lower, upper, n);
  if (shape.empty()) return {};
  MinorIndex key = shape.canonical_key();
  int room = key.rows.front();
  MinorIndex full{lower, upper};
  for (int t = 0; t < trials; ++t) {
    ExactMatrix x = random_unitriangular(n, seed + static_cast<std::uint64_t>(t));
    Rat base = eval_minor(x, full);
    for (int offset = 0; offset < room; ++offset) {
      MinorIndex shifted = realize_key(key, offset);
      if (eval_minor(x, shifted) != base) {
        return {false, "translation invariance fails for " + full.to_string() +
                           " offset " + std::to_string(offset) + " trial " +
                           std::to_string(t)};
      }
    }
  }
  return {};
}

}  // namespace richseed
