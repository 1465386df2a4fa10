#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "richseed/util.hpp"

namespace richseed {

// Strictly increasing values in [1, n].
using IndexSet = std::vector<int>;

inline bool is_index_set(const IndexSet& s, int n) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

// [1..k] as an index set.
inline IndexSet initial_segment(int k) {
  IndexSet s(k);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

// Gale order on equal-size subsets: elementwise comparison of sorted entries.
inline bool gale_leq(const IndexSet& lhs, const IndexSet& rhs) {
  require(lhs.size() == rhs.size(), "gale_leq: size mismatch");
  for (size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] > rhs[i]) return false;
  return true;
}

// A permutation of [n] in one-line notation. Multiplication composes as
// functions, (u*v)(x) = u(v(x)). Appending a generator on the right swaps
// the one-line entries at positions i, i+1; multiplying by s_i on the left
// swaps the values i, i+1.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }
  explicit Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<int> sorted = img_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size(); ++i)
      require(sorted[i] == i + 1, "Perm: not a permutation of 1..n");
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
    return Perm(std::move(inv));
  }

  friend Perm operator*(const Perm& u, const Perm& v) {
    check(u.size() == v.size(), "Perm product: ambient mismatch");
    std::vector<int> w(u.img_.size());
    for (int i = 1; i <= u.size(); ++i) w[i - 1] = u(v(i));
    return Perm(std::move(w));
  }

  Perm right_mul_s(int i) const {
    require(i >= 1 && i < size(), "right_mul_s: generator out of range");
    std::vector<int> w = img_;
    std::swap(w[i - 1], w[i]);
    return Perm(std::move(w));
  }

  Perm left_mul_s(int i) const {
    require(i >= 1 && i < size(), "left_mul_s: generator out of range");
    std::vector<int> w = img_;
    for (auto& x : w) {
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    }
    return Perm(std::move(w));
  }

  // Inversion count; equals the length of any reduced word.
  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (img_[i] > img_[j]) ++inv;
    return inv;
  }

  bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }

  // Sorted image of [1..k].
  IndexSet prefix_image(int k) const {
    IndexSet s(img_.begin(), img_.begin() + k);
    std::sort(s.begin(), s.end());
    return s;
  }

  IndexSet apply(const IndexSet& in) const {
    IndexSet s;
    s.reserve(in.size());
    for (int x : in) s.push_back((*this)(x));
    std::sort(s.begin(), s.end());
    return s;
  }

  auto operator<=>(const Perm&) const = default;

  std::string to_string() const {
    if (size() <= 9) {
      std::string s;
      for (int x : img_) s += static_cast<char>('0' + x);
      return s;
    }
    return "[" + join(img_) + "]";
  }

  static Perm longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Perm(std::move(w));
  }

 private:
  std::vector<int> img_;
};

inline Perm simple_transposition(int n, int i) { return Perm(n).right_mul_s(i); }

// A word in the generators s_1..s_{n-1}. Not validated for reducedness on
// construction; call is_reduced or require_reduced where it matters.
struct ReducedWord {
  int n = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  int letter(int i) const { return letters[i - 1]; }
  bool operator==(const ReducedWord&) const = default;
};

inline Perm product(const ReducedWord& word) {
  Perm w(word.n);
  for (int h : word.letters) {
    require(h >= 1 && h < word.n, "word letter out of range");
    w = w.right_mul_s(h);
  }
  return w;
}

inline bool is_reduced(const ReducedWord& word) {
  return product(word).length() == word.length();
}

inline void require_reduced(const ReducedWord& word) {
  require(is_reduced(word), "word is not reduced");
}

// Bruhat order via the dominance criterion: v <= w iff for every k the
// sorted image v[1..k] is Gale-below w[1..k].
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  require(v.size() == w.size(), "bruhat_leq: ambient mismatch");
  for (int k = 1; k < v.size(); ++k)
    if (!gale_leq(v.prefix_image(k), w.prefix_image(k))) return false;
  return true;
}

// All reduced words of w, by descent recursion. Exponential in general;
// guarded to small ranks.
inline std::vector<ReducedWord> reduced_words(const Perm& w) {
  require(w.size() <= 7, "reduced_words: guard n <= 7");
  std::map<Perm, std::vector<std::vector<int>>> memo;
  auto rec = [&](auto&& self, const Perm& u) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (u.is_identity()) {
      out.push_back({});
    } else {
      for (int i = 1; i < u.size(); ++i) {
        if (!u.has_right_descent(i)) continue;
        for (const auto& head : self(self, u.right_mul_s(i))) {
          std::vector<int> word = head;
          word.push_back(i);
          out.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(u, std::move(out)).first->second;
  };
  std::vector<ReducedWord> words;
  for (const auto& letters : rec(rec, w)) words.push_back({w.size(), letters});
  return words;
}

// True when no strand of the wiring diagram descends and later ascends.
inline bool is_unipeak(const ReducedWord& word) {
  require_reduced(word);
  const int n = word.n;
  std::vector<int> slot_of(n + 1), strand_at(n + 1);
  std::iota(slot_of.begin(), slot_of.end(), 0);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::vector<bool> descended(n + 1, false);
  for (int h : word.letters) {
    int rising = strand_at[h], falling = strand_at[h + 1];
    if (descended[rising]) return false;
    descended[falling] = true;
    std::swap(strand_at[h], strand_at[h + 1]);
    slot_of[rising] = h + 1;
    slot_of[falling] = h;
  }
  return true;
}

// 0/1 mask over the positions of a word, recording a subexpression.
struct SubexpressionMask {
  std::vector<char> bits;

  int size() const { return static_cast<int>(bits.size()); }
  bool supported(int pos) const { return bits[pos - 1] != 0; }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 1; i <= size(); ++i)
      if (supported(i)) s.push_back(i);
    return s;
  }
  std::vector<int> complement() const {
    std::vector<int> s;
    for (int i = 1; i <= size(); ++i)
      if (!supported(i)) s.push_back(i);
    return s;
  }
  bool operator==(const SubexpressionMask&) const = default;
};

// The positive distinguished subexpression for v inside word: scanning right
// to left, take the letter exactly when it shortens the running product.
// Throws if v is not below the product of the word in Bruhat order.
inline SubexpressionMask pds(const Perm& v, const ReducedWord& word) {
  require(v.size() == word.n, "pds: ambient mismatch");
  SubexpressionMask mask;
  mask.bits.assign(word.letters.size(), 0);
  Perm u = v;
  for (int i = word.length(); i >= 1; --i) {
    int h = word.letter(i);
    if (u.has_right_descent(h)) {
      mask.bits[i - 1] = 1;
      u = u.right_mul_s(h);
    }
  }
  require(u.is_identity(), "pds: v is not Bruhat-below the word's product");
  check(static_cast<int>(mask.support().size()) == v.length(),
        "pds: support size disagrees with length of v");
  return mask;
}

}  // namespace richseed
