#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isotype/maps.hpp"
#include "isotype/vec.hpp"

namespace isotype {

// Incremental row space in reduced row-echelon form. Optionally tracks, for
// every echelon row, its expression in the original generators, so spans can
// answer "what combination of generators is v?" (needed wherever operators
// get coordinates in a chosen basis: Instrl, the D-span of an assembled Lie
// algebra, Peirce components).
template <Scalar K> class Echelon {
public:
  struct Reduced {
    SparseVec<K> residual;
    SparseVec<K> combo; // v = residual + sum combo_g * generator_g
  };

  explicit Echelon(std::size_t ambient, bool with_history = false)
      : ambient_(ambient), history_(with_history),
        pivot_row_(ambient, -1) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  Reduced reduce(SparseVec<K> v) const {
    Reduced r;
    r.combo = SparseVec<K>{};
    while (!v.is_zero()) {
      std::uint32_t lead = v.leading();
      int row = pivot_row_[lead];
      if (row < 0)
        break;
      K c = v.leading_coeff(); // pivot coefficient is 1
      v = sv_axpy(v, -c, rows_[row].v);
      if (history_)
        r.combo = sv_axpy(r.combo, c, rows_[row].hist);
    }
    // v now has no leading term at a pivot column; RREF rows guarantee no
    // further interaction below the leading index either
    r.residual = strip_pivots(std::move(v), r.combo);
    return r;
  }

  // Insert generator gen_id; returns true if the rank grew.
  bool add(const SparseVec<K> &v, std::uint32_t gen_id = 0) {
    Reduced r = reduce(v);
    if (r.residual.is_zero())
      return false;
    Row nr;
    nr.v = std::move(r.residual);
    if (history_) {
      nr.hist = SparseVec<K>::unit(gen_id);
      // v = residual + combo·gens  =>  residual = v - combo·gens
      for (auto &[g, c] : r.combo.terms)
        nr.hist = sv_axpy(nr.hist, -c, SparseVec<K>::unit(g));
    }
    K inv = K{1} / nr.v.leading_coeff();
    nr.v = nr.v.scaled(inv);
    if (history_)
      nr.hist = nr.hist.scaled(inv);
    std::uint32_t pivot = nr.v.leading();
    // back-eliminate the new pivot from existing rows to stay in RREF
    for (auto &row : rows_) {
      K c = row.v.coeff(pivot);
      if (!c.is_zero()) {
        row.v = sv_axpy(row.v, -c, nr.v);
        if (history_)
          row.hist = sv_axpy(row.hist, -c, nr.hist);
      }
    }
    pivot_row_[pivot] = (int)rows_.size();
    rows_.push_back(std::move(nr));
    return true;
  }

  // Coordinates of v in the generator list, if v lies in the span.
  std::optional<SparseVec<K>> coords(const SparseVec<K> &v) const {
    Reduced r = reduce(v);
    if (!r.residual.is_zero())
      return std::nullopt;
    return r.combo;
  }

  bool contains(const SparseVec<K> &v) const {
    return reduce(v).residual.is_zero();
  }

  // rows sorted by pivot column (canonical RREF basis)
  std::vector<SparseVec<K>> basis() const {
    std::vector<SparseVec<K>> out;
    out.reserve(rows_.size());
    for (std::size_t col = 0; col < ambient_; ++col)
      if (pivot_row_[col] >= 0)
        out.push_back(rows_[pivot_row_[col]].v);
    return out;
  }

private:
  struct Row {
    SparseVec<K> v;
    SparseVec<K> hist;
  };

  std::size_t ambient_;
  bool history_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;

  // after the leading loop, interior terms at pivot columns may remain when
  // the vector skipped them; clear those too
  SparseVec<K> strip_pivots(SparseVec<K> v, SparseVec<K> &combo) const {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (const auto &[i, c] : v.terms) {
        int row = pivot_row_[i];
        if (row >= 0) {
          v = sv_axpy(v, -c, rows_[row].v);
          if (history_)
            combo = sv_axpy(combo, c, rows_[row].hist);
          dirty = true;
          break;
        }
      }
    }
    return v;
  }
};

// Exact dense Gaussian elimination. Deterministic pivoting: leftmost column
// first, earliest remaining row as tie-break. Output rows are canonical RREF.
template <Scalar K> struct SolveResult {
  bool consistent = true;
  std::size_t rank = 0;
  std::vector<Vec<K>> row_basis;
  std::vector<std::size_t> pivot_cols;
  std::optional<Vec<K>> particular;
  std::vector<Vec<K>> nullspace;
};

template <Scalar K>
SolveResult<K> solve_exact(std::vector<Vec<K>> rows,
                           std::optional<Vec<K>> target = std::nullopt) {
  std::size_t m = rows.size();
  std::size_t n = m ? rows[0].size() : 0;
  for (const auto &r : rows)
    if (r.size() != n)
      throw Error("solve_exact: ragged rows");
  Vec<K> b = target ? *target : Vec<K>{};
  if (target && b.size() != m)
    throw Error("solve_exact: target length mismatch");

  SolveResult<K> out;
  std::size_t pr = 0; // next pivot row position
  for (std::size_t col = 0; col < n && pr < m; ++col) {
    std::size_t sel = m;
    for (std::size_t r = pr; r < m; ++r)
      if (!rows[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == m)
      continue;
    std::swap(rows[pr], rows[sel]);
    if (target)
      std::swap(b[pr], b[sel]);
    K inv = K{1} / rows[pr][col];
    for (auto &x : rows[pr])
      x *= inv;
    if (target)
      b[pr] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr)
        continue;
      K c = rows[r][col];
      if (c.is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        rows[r][j] -= c * rows[pr][j];
      if (target)
        b[r] -= c * b[pr];
    }
    out.pivot_cols.push_back(col);
    ++pr;
  }
  out.rank = pr;
  out.row_basis.assign(rows.begin(), rows.begin() + pr);

  if (target) {
    for (std::size_t r = pr; r < m; ++r)
      if (!b[r].is_zero()) {
        out.consistent = false;
        break;
      }
    if (out.consistent) {
      Vec<K> x(n, K{});
      for (std::size_t r = 0; r < pr; ++r)
        x[out.pivot_cols[r]] = b[r];
      out.particular = std::move(x);
    }
  }

  // kernel basis from free columns (canonical)
  std::vector<bool> is_pivot(n, false);
  for (auto c : out.pivot_cols)
    is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f])
      continue;
    Vec<K> x(n, K{});
    x[f] = K{1};
    for (std::size_t r = 0; r < pr; ++r)
      x[out.pivot_cols[r]] = -rows[r][f];
    out.nullspace.push_back(std::move(x));
  }
  return out;
}

template <Scalar K> std::size_t rank_of(const std::vector<Vec<K>> &rows) {
  return solve_exact<K>(rows).rank;
}

// kernel of a square or rectangular matrix M (solutions of M x = 0)
template <Scalar K> std::vector<Vec<K>> kernel(const Mat<K> &M) {
  std::vector<Vec<K>> rows(M.rows);
  for (std::size_t i = 0; i < M.rows; ++i) {
    rows[i] = Vec<K>(M.cols, K{});
    for (std::size_t j = 0; j < M.cols; ++j)
      rows[i][j] = M.at(i, j);
  }
  auto res = solve_exact<K>(std::move(rows), zero_vec<K>(M.rows));
  return res.nullspace;
}

template <Scalar K>
std::vector<Vec<K>> eigenspace(const Mat<K> &M, const K &lambda) {
  Mat<K> A(M);
  for (std::size_t i = 0; i < A.rows; ++i)
    A.at(i, i) -= lambda;
  return kernel(A);
}

// Express v as a combination of the given (not necessarily independent)
// rows; nullopt when v is outside their span.
template <Scalar K>
std::optional<Vec<K>> coords_in_rows(const std::vector<Vec<K>> &rows,
                                     const Vec<K> &v) {
  if (rows.empty())
    return is_zero_vec(v) ? std::optional<Vec<K>>(Vec<K>{}) : std::nullopt;
  Echelon<K> ech(rows[0].size(), true);
  for (std::size_t g = 0; g < rows.size(); ++g)
    ech.add(SparseVec<K>::from_dense(rows[g]), (std::uint32_t)g);
  auto combo = ech.coords(SparseVec<K>::from_dense(v));
  if (!combo)
    return std::nullopt;
  return combo->to_dense(rows.size());
}

template <Scalar K> Mat<K> inverse(const Mat<K> &M) {
  if (M.rows != M.cols)
    throw Error("inverse: non-square matrix");
  std::size_t n = M.rows;
  std::vector<Vec<K>> rows(n, Vec<K>(2 * n, K{}));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = M.at(i, j);
    rows[i][n + i] = K{1};
  }
  auto res = solve_exact<K>(std::move(rows));
  for (std::size_t i = 0; i < res.pivot_cols.size(); ++i)
    if (res.pivot_cols[i] >= n)
      throw PreconditionError("inverse: singular matrix");
  if (res.rank != n)
    throw PreconditionError("inverse: singular matrix");
  Mat<K> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.at(i, j) = res.row_basis[i][n + j];
  return out;
}

} // namespace isotype
