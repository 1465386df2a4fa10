#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace richseed {

// Precondition violation: the caller passed bad input.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Internal invariant violation: a bug or a broken theorem.
inline void check(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const Mat&) const = default;

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
};

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  check(x.cols == y.rows, "Mat product shape mismatch");
  Mat<T> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& v = x.at(i, k);
      if (v == T(0)) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

}  // namespace richseed
