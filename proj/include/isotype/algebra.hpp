#pragma once

#include <optional>
#include <string>

#include "isotype/maps.hpp"
#include "isotype/solve.hpp"
#include "isotype/space.hpp"

namespace isotype {

// Unital algebra by structure constants; associativity is a property, not an
// assumption (octonions and their tensor products live here too).
template <Scalar K> struct Algebra {
  Space space;
  BilinearMap<K> product;
  Vec<K> unit;

  std::size_t dim() const { return space.dim(); }

  Vec<K> mul(const Vec<K> &a, const Vec<K> &b) const {
    return product.apply(a, b);
  }

  Mat<K> left_mult(const Vec<K> &a) const {
    Mat<K> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<K> col = product.apply_right_basis(a, j);
      for (std::size_t i = 0; i < dim(); ++i)
        m.at(i, j) = col[i];
    }
    return m;
  }

  Mat<K> right_mult(const Vec<K> &a) const {
    Mat<K> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<K> col = product.apply_left_basis(j, a);
      for (std::size_t i = 0; i < dim(); ++i)
        m.at(i, j) = col[i];
    }
    return m;
  }

  bool unit_acts_as_identity() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      Vec<K> e = unit_vec<K>(dim(), i);
      if (mul(unit, e) != e || mul(e, unit) != e)
        return false;
    }
    return true;
  }

  // first associator violation on basis triples, if any
  std::optional<std::array<std::size_t, 3>> associativity_defect() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) {
          Vec<K> lhs = mul(mul(unit_vec<K>(dim(), i), unit_vec<K>(dim(), j)),
                           unit_vec<K>(dim(), k));
          Vec<K> rhs = mul(unit_vec<K>(dim(), i),
                           mul(unit_vec<K>(dim(), j), unit_vec<K>(dim(), k)));
          if (lhs != rhs)
            return std::array<std::size_t, 3>{i, j, k};
        }
    return std::nullopt;
  }
};

// n x n matrix algebra with basis E11, E12, ..., Enn (row-major)
template <Scalar K> Algebra<K> matrix_algebra(std::size_t n) {
  Algebra<K> a;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
  a.space = Space(std::move(labels));
  a.product = BilinearMap<K>(n * n, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        a.product.at(i * n + j, j * n + l) = SparseVec<K>::unit((std::uint32_t)(i * n + l));
  a.unit = zero_vec<K>(n * n);
  for (std::size_t i = 0; i < n; ++i)
    a.unit[i * n + i] = K{1};
  return a;
}

template <Scalar K>
Algebra<K> opposite_algebra(const Algebra<K> &a, const std::string &suffix = "'") {
  Algebra<K> op;
  std::vector<std::string> labels;
  for (const auto &l : a.space.labels)
    labels.push_back(l + suffix);
  op.space = Space(std::move(labels));
  op.product = BilinearMap<K>(a.dim(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      op.product.at(i, j) = a.product.at(j, i);
  op.unit = a.unit;
  return op;
}

template <Scalar K>
Algebra<K> algebra_direct_sum(const Algebra<K> &a, const Algebra<K> &b) {
  Algebra<K> s;
  s.space = direct_sum(a.space, b.space);
  std::size_t n = a.dim(), m = b.dim();
  s.product = BilinearMap<K>(n + m, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.product.at(i, j) = a.product.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec<K> shifted;
      for (const auto &[k, c] : b.product.at(i, j).terms)
        shifted.push(k + (std::uint32_t)n, c);
      s.product.at(n + i, n + j) = shifted;
    }
  s.unit = zero_vec<K>(n + m);
  for (std::size_t i = 0; i < n; ++i)
    s.unit[i] = a.unit[i];
  for (std::size_t j = 0; j < m; ++j)
    s.unit[n + j] = b.unit[j];
  return s;
}

// (a ⊗ b)(c ⊗ d) = ac ⊗ bd, basis left-factor-major
template <Scalar K>
Algebra<K> tensor_algebra(const Algebra<K> &a, const Algebra<K> &b) {
  Algebra<K> t;
  t.space = tensor_space(a.space, b.space);
  std::size_t n = a.dim(), m = b.dim(), nm = n * m;
  t.product = BilinearMap<K>(nm, nm, nm);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          SparseVec<K> out;
          for (const auto &[ka, ca] : a.product.at(i1, i2).terms)
            for (const auto &[kb, cb] : b.product.at(j1, j2).terms)
              out.push(ka * (std::uint32_t)m + kb, ca * cb);
          // term order: a-index major, already sorted since kb sorted per ka
          t.product.at(i1 * m + j1, i2 * m + j2) = out;
        }
  t.unit = zero_vec<K>(nm);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      K c = a.unit[i] * b.unit[j];
      t.unit[i * m + j] = c;
    }
  return t;
}

// Algebra with involution. The symmetric/skew parts are computed, not
// assumed, and the involution is validated as an anti-automorphism of
// period 2.
template <Scalar K> struct InvolutiveAlgebra {
  Algebra<K> alg;
  LinearMap<K> invol;

  std::size_t dim() const { return alg.dim(); }

  Vec<K> conj(const Vec<K> &x) const { return invol.apply(x); }

  void validate() const {
    if (!alg.unit_acts_as_identity())
      throw PreconditionError("involutive algebra: unit is not an identity");
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      Vec<K> e = unit_vec<K>(n, i);
      if (invol.apply(invol.apply(e)) != e)
        throw PreconditionError("involution is not of period 2");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec<K> lhs = invol.apply(alg.mul(unit_vec<K>(n, i), unit_vec<K>(n, j)));
        Vec<K> rhs = alg.mul(invol.apply(unit_vec<K>(n, j)),
                             invol.apply(unit_vec<K>(n, i)));
        if (lhs != rhs)
          throw PreconditionError("involution is not an anti-automorphism");
      }
  }

  // eigenspace bases (canonical RREF rows)
  std::vector<Vec<K>> symmetric_part() const {
    return eigenspace(invol.to_mat(), K{1});
  }
  std::vector<Vec<K>> skew_part() const {
    return eigenspace(invol.to_mat(), K{-1});
  }
};

// involution attached to a bilinear form with Gram matrix B: f -> B^-1 f^T B
template <Scalar K>
LinearMap<K> form_involution(std::size_t n, const Mat<K> &gram) {
  Mat<K> gi = inverse(gram);
  LinearMap<K> tau(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat<K> f(n, n);
      f.at(i, j) = K{1};
      Mat<K> ft(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          ft.at(r, c) = f.at(c, r);
      Mat<K> img = gi.compose(ft).compose(gram);
      tau.cols[i * n + j] = SparseVec<K>::from_dense(img.flatten());
    }
  return tau;
}

// exchange involution on A ⊕ A^op (same underlying space twice)
template <Scalar K> LinearMap<K> exchange_involution(std::size_t n) {
  LinearMap<K> ex(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    ex.cols[i] = SparseVec<K>::unit((std::uint32_t)(n + i));
    ex.cols[n + i] = SparseVec<K>::unit((std::uint32_t)i);
  }
  return ex;
}

template <Scalar K>
LinearMap<K> tensor_involution(const LinearMap<K> &f, const LinearMap<K> &g) {
  std::size_t n = f.dom, m = g.dom;
  LinearMap<K> t(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec<K> out;
      for (const auto &[a, ca] : f.cols[i].terms)
        for (const auto &[b, cb] : g.cols[j].terms)
          out.push(a * (std::uint32_t)m + b, ca * cb);
      t.cols[i * m + j] = out;
    }
  return t;
}

} // namespace isotype
