#pragma once

#include <cstdint>
#include <vector>

#include "isotype/error.hpp"
#include "isotype/space.hpp"
#include "isotype/vec.hpp"

namespace isotype {

// Linear map by columns: cols[i] = image of the i-th domain basis vector.
template <Scalar K> struct LinearMap {
  std::size_t dom = 0, cod = 0;
  std::vector<SparseVec<K>> cols;

  LinearMap() = default;
  LinearMap(std::size_t d, std::size_t c) : dom(d), cod(c), cols(d) {}

  static LinearMap from_mat(const Mat<K> &m) {
    LinearMap f(m.cols, m.rows);
    for (std::size_t j = 0; j < m.cols; ++j)
      f.cols[j] = SparseVec<K>::from_dense(m.column(j));
    return f;
  }

  Mat<K> to_mat() const {
    Mat<K> m(cod, dom);
    for (std::size_t j = 0; j < dom; ++j)
      for (const auto &[i, c] : cols[j].terms)
        m.at(i, j) = c;
    return m;
  }

  Vec<K> apply(const Vec<K> &v) const {
    if (v.size() != dom)
      throw Error("LinearMap: dimension mismatch");
    Vec<K> out(cod, K{});
    for (std::size_t j = 0; j < dom; ++j)
      accumulate(out, v[j], cols[j]);
    return out;
  }
};

// Bilinear map by a sparse structure-constant table: entry (i,j) is the
// image of the (i-th, j-th) basis pair. No explicit zeros are stored.
template <Scalar K> struct BilinearMap {
  std::size_t dom1 = 0, dom2 = 0, cod = 0;
  std::vector<SparseVec<K>> table;

  BilinearMap() = default;
  BilinearMap(std::size_t d1, std::size_t d2, std::size_t c)
      : dom1(d1), dom2(d2), cod(c), table(d1 * d2) {}

  const SparseVec<K> &at(std::size_t i, std::size_t j) const {
    return table[i * dom2 + j];
  }
  SparseVec<K> &at(std::size_t i, std::size_t j) { return table[i * dom2 + j]; }

  void set(std::size_t i, std::size_t j, std::size_t k, const K &c) {
    if (i >= dom1 || j >= dom2 || k >= cod)
      throw Error("BilinearMap: index out of range");
    Vec<K> dense = at(i, j).to_dense(cod);
    dense[k] += c;
    at(i, j) = SparseVec<K>::from_dense(dense);
  }

  Vec<K> apply(const Vec<K> &u, const Vec<K> &v) const {
    if (u.size() != dom1 || v.size() != dom2)
      throw Error("BilinearMap: dimension mismatch");
    Vec<K> out(cod, K{});
    for (std::size_t i = 0; i < dom1; ++i) {
      if (u[i].is_zero())
        continue;
      for (std::size_t j = 0; j < dom2; ++j) {
        if (v[j].is_zero())
          continue;
        accumulate(out, u[i] * v[j], at(i, j));
      }
    }
    return out;
  }

  // image of (basis_i, v): the common mixed case in sweeps
  Vec<K> apply_left_basis(std::size_t i, const Vec<K> &v) const {
    Vec<K> out(cod, K{});
    for (std::size_t j = 0; j < dom2; ++j)
      if (!v[j].is_zero())
        accumulate(out, v[j], at(i, j));
    return out;
  }

  Vec<K> apply_right_basis(const Vec<K> &u, std::size_t j) const {
    Vec<K> out(cod, K{});
    for (std::size_t i = 0; i < dom1; ++i)
      if (!u[i].is_zero())
        accumulate(out, u[i], at(i, j));
    return out;
  }
};

template <Scalar K> struct TrilinearMap {
  std::size_t dom1 = 0, dom2 = 0, dom3 = 0, cod = 0;
  std::vector<SparseVec<K>> table;

  TrilinearMap() = default;
  TrilinearMap(std::size_t d1, std::size_t d2, std::size_t d3, std::size_t c)
      : dom1(d1), dom2(d2), dom3(d3), cod(c), table(d1 * d2 * d3) {}

  const SparseVec<K> &at(std::size_t i, std::size_t j, std::size_t k) const {
    return table[(i * dom2 + j) * dom3 + k];
  }
  SparseVec<K> &at(std::size_t i, std::size_t j, std::size_t k) {
    return table[(i * dom2 + j) * dom3 + k];
  }

  // contractions with one vector slot and two basis slots: the workhorses of
  // the axiom sweeps
  Vec<K> apply_slot1(const Vec<K> &u, std::size_t j, std::size_t k) const {
    Vec<K> out(cod, K{});
    for (std::size_t i = 0; i < dom1; ++i)
      if (!u[i].is_zero())
        accumulate(out, u[i], at(i, j, k));
    return out;
  }
  Vec<K> apply_slot2(std::size_t i, const Vec<K> &v, std::size_t k) const {
    Vec<K> out(cod, K{});
    for (std::size_t j = 0; j < dom2; ++j)
      if (!v[j].is_zero())
        accumulate(out, v[j], at(i, j, k));
    return out;
  }
  Vec<K> apply_slot3(std::size_t i, std::size_t j, const Vec<K> &w) const {
    Vec<K> out(cod, K{});
    for (std::size_t k = 0; k < dom3; ++k)
      if (!w[k].is_zero())
        accumulate(out, w[k], at(i, j, k));
    return out;
  }

  Vec<K> apply(const Vec<K> &u, const Vec<K> &v, const Vec<K> &w) const {
    if (u.size() != dom1 || v.size() != dom2 || w.size() != dom3)
      throw Error("TrilinearMap: dimension mismatch");
    Vec<K> out(cod, K{});
    for (std::size_t i = 0; i < dom1; ++i) {
      if (u[i].is_zero())
        continue;
      for (std::size_t j = 0; j < dom2; ++j) {
        if (v[j].is_zero())
          continue;
        K uij = u[i] * v[j];
        for (std::size_t k = 0; k < dom3; ++k)
          if (!w[k].is_zero())
            accumulate(out, uij * w[k], at(i, j, k));
      }
    }
    return out;
  }
};

} // namespace isotype
