#pragma once

#include <array>

#include "isotype/algebra.hpp"
#include "isotype/report.hpp"
#include "isotype/solve.hpp"

namespace isotype {

template <Scalar K> struct JordanAlgebra {
  Space space;
  BilinearMap<K> product; // symmetric
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
};

// symmetrized product on an associative (or any) algebra: a·b = (ab+ba)/2
template <Scalar K> JordanAlgebra<K> special_jordan(const Algebra<K> &a) {
  JordanAlgebra<K> j;
  j.space = a.space;
  j.unit = a.unit;
  std::size_t n = a.dim();
  j.product = BilinearMap<K>(n, n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      SparseVec<K> s = sv_add(a.product.at(p, q), a.product.at(q, p));
      j.product.at(p, q) = s.scaled(K{1} / K{2});
    }
  return j;
}

// Commutativity on basis pairs, unit action, and the full linearization of
// the Jordan identity (x²·y)·x = x²·(y·x) on basis quadruples:
//   ((a·b)·y)·c + ((b·c)·y)·a + ((c·a)·y)·b
//     = (a·b)·(y·c) + (b·c)·(y·a) + (c·a)·(y·b).
// Over fields of characteristic 0 or p >= 5 this linearization is equivalent
// to the Jordan identity, and a basis sweep decides it exactly.
template <Scalar K> VerificationReport check_jordan(const JordanAlgebra<K> &j) {
  VerificationReport rep;
  rep.task = "jordan";
  std::size_t n = j.dim();
  rep.add_dim("dim", (long long)n);

  SweepAccum comm;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      comm.count();
      if (!(j.product.at(a, b) == j.product.at(b, a)))
        comm.violate("commutativity", {(long long)a, (long long)b});
    }
  rep.add_item(comm.into_item("commutativity"));

  SweepAccum un;
  for (std::size_t a = 0; a < n; ++a) {
    un.count();
    Vec<K> e = unit_vec<K>(n, a);
    if (j.mul(j.unit, e) != e)
      un.violate("unit", {(long long)a});
  }
  rep.add_item(un.into_item("unit"));

  SweepAccum lin;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        // precompute the three pair products once per (a,b,c)
        Vec<K> ab = j.product.at(a, b).to_dense(n);
        Vec<K> bc = j.product.at(b, c).to_dense(n);
        Vec<K> ca = j.product.at(c, a).to_dense(n);
        for (std::size_t y = 0; y < n; ++y) {
          lin.count();
          Vec<K> ye = unit_vec<K>(n, y);
          Vec<K> lhs = j.mul(j.mul(ab, ye), unit_vec<K>(n, c));
          add_scaled(lhs, K{1}, j.mul(j.mul(bc, ye), unit_vec<K>(n, a)));
          add_scaled(lhs, K{1}, j.mul(j.mul(ca, ye), unit_vec<K>(n, b)));
          Vec<K> rhs = j.mul(ab, j.product.apply_right_basis(ye, c));
          add_scaled(rhs, K{1}, j.mul(bc, j.product.apply_right_basis(ye, a)));
          add_scaled(rhs, K{1}, j.mul(ca, j.product.apply_right_basis(ye, b)));
          if (lhs != rhs)
            lin.violate("jordan_linearized",
                        {(long long)a, (long long)b, (long long)c, (long long)y});
        }
      }
  rep.add_item(lin.into_item("jordan_linearized"));
  return rep;
}

template <Scalar K> struct IdempotentInfo {
  bool idempotent = false;
  bool proper = false;
  Vec<K> complement; // 1 - e
};

template <Scalar K>
IdempotentInfo<K> is_idempotent(const JordanAlgebra<K> &j, const Vec<K> &e) {
  IdempotentInfo<K> info;
  info.idempotent = j.mul(e, e) == e;
  info.complement = vec_sub(j.unit, e);
  info.proper =
      info.idempotent && !is_zero_vec(e) && !is_zero_vec(info.complement);
  return info;
}

template <Scalar K> struct PeirceDecomposition {
  Vec<K> e;
  std::vector<Vec<K>> j1, jhalf, j0; // exact eigenspaces of L_e for 1, 1/2, 0
};

template <Scalar K>
PeirceDecomposition<K> peirce_decompose(const JordanAlgebra<K> &j,
                                        const Vec<K> &e) {
  auto info = is_idempotent(j, e);
  if (!info.idempotent)
    throw PreconditionError("peirce_decompose: element is not idempotent");
  Mat<K> le = j.left_mult(e);
  PeirceDecomposition<K> p;
  p.e = e;
  p.j1 = eigenspace(le, K{1});
  p.jhalf = eigenspace(le, K{1} / K{2});
  p.j0 = eigenspace(le, K{0});
  if (p.j1.size() + p.jhalf.size() + p.j0.size() != j.dim())
    throw PreconditionError(
        "peirce_decompose: eigenspaces of L_e do not exhaust J "
        "(input is not a Jordan algebra with idempotent e)");
  return p;
}

// D_{a,b}: c -> a·(b·c) − b·(a·c)
template <Scalar K>
Mat<K> inner_derivation_D(const JordanAlgebra<K> &j, const Vec<K> &a,
                          const Vec<K> &b) {
  std::size_t n = j.dim();
  Mat<K> m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec<K> bc = j.product.apply_right_basis(b, c);
    Vec<K> ac = j.product.apply_right_basis(a, c);
    Vec<K> col = vec_sub(j.mul(a, bc), j.mul(b, ac));
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, c) = col[i];
  }
  return m;
}

} // namespace isotype
