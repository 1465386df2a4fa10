#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "richseed/exact.hpp"
#include "richseed/quiver.hpp"
#include "richseed/shapes.hpp"
#include "richseed/util.hpp"

namespace richseed {

// An explicit matrix model of a skew-shape module over the type A
// preprojective algebra on vertices 1..n-1. Each box of content k gives a
// basis vector at vertex k; the arrow toward k+1 moves to the box below,
// the reverse arrow toward k-1 moves to the box on the right.
struct PModule {
  int n = 0;
  std::vector<int> dims;                 // indexed 1..n-1
  std::vector<std::vector<Box>> basis;   // per vertex, boxes sorted
  std::vector<Mat<int>> up;              // up[k]: vertex k -> k+1
  std::vector<Mat<int>> down;            // down[k]: vertex k+1 -> k

  int dim_total() const {
    int t = 0;
    for (int k = 1; k < n; ++k) t += dims[k];
    return t;
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (int k = 1; k < n; ++k)
      if (dims[k] > 0) s.push_back(k);
    return s;
  }
};

inline PModule module_from_shape(const SkewShape& shape, int n) {
  for (const Box& b : shape.boxes()) {
    int k = shape.content(b);
    require(k >= 1 && k <= n - 1, "module_from_shape: content out of range");
  }
  PModule m;
  m.n = n;
  m.dims.assign(n, 0);
  m.basis.assign(n, {});
  for (const Box& b : shape.boxes()) {
    ++m.dims[shape.content(b)];
    m.basis[shape.content(b)].push_back(b);
  }
  for (int k = 1; k < n; ++k) std::sort(m.basis[k].begin(), m.basis[k].end());

  auto index_of = [&](int k, const Box& b) -> int {
    auto it = std::lower_bound(m.basis[k].begin(), m.basis[k].end(), b);
    if (it == m.basis[k].end() || !(*it == b)) return -1;
    return static_cast<int>(it - m.basis[k].begin());
  };

  m.up.assign(n, {});
  m.down.assign(n, {});
  for (int k = 1; k + 1 < n; ++k) {
    m.up[k] = Mat<int>(m.dims[k + 1], m.dims[k]);
    m.down[k] = Mat<int>(m.dims[k], m.dims[k + 1]);
    for (int j = 0; j < m.dims[k]; ++j) {
      Box below{m.basis[k][j].row + 1, m.basis[k][j].col};
      int i = index_of(k + 1, below);
      if (i >= 0) m.up[k].at(i, j) = 1;
    }
    for (int j = 0; j < m.dims[k + 1]; ++j) {
      Box right{m.basis[k + 1][j].row, m.basis[k + 1][j].col + 1};
      int i = index_of(k, right);
      if (i >= 0) m.down[k].at(i, j) = 1;
    }
  }

  // Preprojective relation at every vertex: going down then right agrees
  // with going right then down.
  for (int k = 1; k < n; ++k) {
    Mat<int> lhs(m.dims[k], m.dims[k]);
    Mat<int> rhs(m.dims[k], m.dims[k]);
    if (k + 1 < n) lhs = m.down[k] * m.up[k];
    if (k - 1 >= 1) rhs = m.up[k - 1] * m.down[k - 1];
    check(lhs == rhs, "module_from_shape: preprojective relation violated");
  }
  return m;
}

// Top and socle contents, from northwest and southeast boundary corners.
inline std::pair<std::vector<int>, std::vector<int>> top_socle(const SkewShape& shape) {
  std::vector<int> top, socle;
  for (const Box& b : shape.boxes()) {
    bool above = shape.contains({b.row - 1, b.col});
    bool left = shape.contains({b.row, b.col - 1});
    bool below = shape.contains({b.row + 1, b.col});
    bool right = shape.contains({b.row, b.col + 1});
    if (!above && !left) top.push_back(shape.content(b));
    if (!below && !right) socle.push_back(shape.content(b));
  }
  std::sort(top.begin(), top.end());
  std::sort(socle.begin(), socle.end());
  return {top, socle};
}

// One morphism of modules: a matrix per vertex.
using HomElem = std::vector<QMat>;

inline HomElem compose(const HomElem& g, const HomElem& f) {
  HomElem out(f.size());
  for (size_t k = 1; k < f.size(); ++k) out[k] = g[k] * f[k];
  return out;
}

namespace detail {

// Reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = Rat(1) / m.at(row, col);
    for (int c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(QMat m) { return static_cast<int>(rref(m).size()); }

// Basis of the nullspace of m, as columns of unknowns.
inline std::vector<std::vector<Rat>> nullspace(QMat m) {
  int ncols = m.cols;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> vec(ncols);
    vec[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) vec[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace detail

// Basis of Hom(M, N): all vertex-wise matrix tuples commuting with both
// arrow directions, by exact nullspace of the combined linear system.
inline std::vector<HomElem> hom_space(const PModule& M, const PModule& N) {
  require(M.n == N.n, "hom_space: ambient mismatch");
  const int n = M.n;
  std::vector<int> offset(n, 0);
  int total = 0;
  for (int k = 1; k < n; ++k) {
    offset[k] = total;
    total += N.dims[k] * M.dims[k];
  }
  auto var = [&](int k, int r, int c) { return offset[k] + r * M.dims[k] + c; };

  std::vector<std::vector<Rat>> rows;
  auto emit = [&](std::vector<Rat> row) {
    for (const Rat& x : row)
      if (x != 0) {
        rows.push_back(std::move(row));
        return;
      }
  };
  for (int k = 1; k + 1 < n; ++k) {
    // f_{k+1} up^M_k = up^N_k f_k
    for (int r = 0; r < N.dims[k + 1]; ++r)
      for (int c = 0; c < M.dims[k]; ++c) {
        std::vector<Rat> row(total);
        for (int t = 0; t < M.dims[k + 1]; ++t)
          if (M.up[k].at(t, c)) row[var(k + 1, r, t)] += M.up[k].at(t, c);
        for (int t = 0; t < N.dims[k]; ++t)
          if (N.up[k].at(r, t)) row[var(k, t, c)] -= N.up[k].at(r, t);
        emit(std::move(row));
      }
    // f_k down^M_k = down^N_k f_{k+1}
    for (int r = 0; r < N.dims[k]; ++r)
      for (int c = 0; c < M.dims[k + 1]; ++c) {
        std::vector<Rat> row(total);
        for (int t = 0; t < M.dims[k]; ++t)
          if (M.down[k].at(t, c)) row[var(k, r, t)] += M.down[k].at(t, c);
        for (int t = 0; t < N.dims[k + 1]; ++t)
          if (N.down[k].at(r, t)) row[var(k + 1, t, c)] -= N.down[k].at(r, t);
        emit(std::move(row));
      }
  }

  QMat sys(static_cast<int>(rows.size()), total);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < total; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];

  std::vector<HomElem> out;
  for (const auto& vec : detail::nullspace(std::move(sys))) {
    HomElem f(n);
    for (int k = 1; k < n; ++k) {
      f[k] = QMat(N.dims[k], M.dims[k]);
      for (int r = 0; r < N.dims[k]; ++r)
        for (int c = 0; c < M.dims[k]; ++c) f[k].at(r, c) = vec[var(k, r, c)];
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<Rat> flatten(const HomElem& f) {
  std::vector<Rat> v;
  for (size_t k = 1; k < f.size(); ++k)
    for (const Rat& x : f[k].a) v.push_back(x);
  return v;
}

inline int span_rank(const std::vector<HomElem>& elems) {
  if (elems.empty()) return 0;
  std::vector<Rat> first = flatten(elems[0]);
  QMat m(static_cast<int>(elems.size()), static_cast<int>(first.size()));
  for (size_t r = 0; r < elems.size(); ++r) {
    std::vector<Rat> v = flatten(elems[r]);
    for (size_t c = 0; c < v.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = v[c];
  }
  return detail::rank(std::move(m));
}

inline Rat hom_trace(const HomElem& f) {
  Rat t(0);
  for (size_t k = 1; k < f.size(); ++k)
    for (int i = 0; i < std::min(f[k].rows, f[k].cols); ++i) t += f[k].at(i, i);
  return t;
}

inline bool is_nilpotent(const PModule& M, const HomElem& f) {
  HomElem p = f;
  for (int step = 0; step <= M.dim_total(); ++step) {
    bool zero = true;
    for (size_t k = 1; k < p.size(); ++k)
      for (const Rat& x : p[k].a)
        if (x != 0) zero = false;
    if (zero) return true;
    p = compose(p, f);
  }
  return false;
}

struct GabrielSummand {
  int label = 0;
  bool frozen = false;
  PModule module;
};

// Gabriel quiver of the endomorphism algebra of a list of pairwise
// non-isomorphic indecomposables: arrow counts are dim rad - dim rad^2,
// where rad at a repeated endpoint is the kernel of the normalized trace
// and rad between distinct summands is the whole Hom space. An arrow i -> j
// is drawn for each irreducible morphism from module i to module j.
inline Quiver gabriel_quiver(const std::vector<GabrielSummand>& summands) {
  const int m = static_cast<int>(summands.size());
  std::vector<std::vector<std::vector<HomElem>>> rad(m, std::vector<std::vector<HomElem>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<HomElem> homs = hom_space(summands[i].module, summands[j].module);
      if (i != j) {
        rad[i][j] = std::move(homs);
        continue;
      }
      const PModule& M = summands[i].module;
      int dim = M.dim_total();
      check(dim > 0, "gabriel_quiver: zero summand");
      // Solve trace(f) = 0 inside End(M); the quotient must be one
      // dimensional (scalars), which is the locality assertion.
      std::vector<HomElem> kernel;
      HomElem with_trace;
      bool seen_trace = false;
      for (HomElem& f : homs) {
        Rat t = hom_trace(f);
        if (t == 0) {
          kernel.push_back(std::move(f));
        } else if (!seen_trace) {
          with_trace = std::move(f);
          seen_trace = true;
        } else {
          Rat t0 = hom_trace(with_trace);
          HomElem g = f;
          for (size_t k = 1; k < g.size(); ++k)
            for (size_t a = 0; a < g[k].a.size(); ++a)
              g[k].a[a] = f[k].a[a] - t / t0 * with_trace[k].a[a];
          kernel.push_back(std::move(g));
        }
      }
      check(seen_trace, "gabriel_quiver: End has no invertible element");
      check(static_cast<int>(kernel.size()) + 1 == static_cast<int>(homs.size()),
            "gabriel_quiver: radical is not codimension one");
      for (const HomElem& f : kernel)
        check(is_nilpotent(M, f), "gabriel_quiver: End is not local");
      rad[i][j] = std::move(kernel);
    }

  Quiver q;
  for (const GabrielSummand& s : summands) q.vertices.push_back({s.label, s.frozen});
  std::sort(q.vertices.begin(), q.vertices.end());
  for (size_t i = 1; i < q.vertices.size(); ++i)
    check(q.vertices[i].label != q.vertices[i - 1].label, "gabriel_quiver: duplicate label");

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<HomElem> rad2;
      for (int k = 0; k < m; ++k)
        for (const HomElem& f : rad[i][k])
          for (const HomElem& g : rad[k][j]) rad2.push_back(compose(g, f));
      int arrows = static_cast<int>(rad[i][j].size()) - span_rank(rad2);
      check(arrows >= 0, "gabriel_quiver: rad^2 exceeds rad");
      q.add_arrow(summands[i].label, summands[j].label, arrows);
    }
  return q;
}

}  // namespace richseed
