#pragma once

#include <optional>

#include "isotype/algebra.hpp"
#include "isotype/jternary.hpp"

namespace isotype {

// Left module T over an associative involutive algebra A, carrying a
// skew-hermitian form h: T x T -> A with h(ax,y) = a·h(x,y) and
// h(x,y) = −h(y,x)*.
template <Scalar K> struct HermitianModule {
  InvolutiveAlgebra<K> A;
  Space tspace;
  BilinearMap<K> action; // A x T -> T
  BilinearMap<K> h;      // T x T -> A

  std::size_t dim_a() const { return A.dim(); }
  std::size_t dim_t() const { return tspace.dim(); }

  void validate() const {
    A.validate();
    if (A.alg.associativity_defect())
      throw PreconditionError("hermitian module: A is not associative");
    std::size_t na = dim_a(), nt = dim_t();
    // module axioms
    for (std::size_t x = 0; x < nt; ++x) {
      Vec<K> e = unit_vec<K>(nt, x);
      if (action.apply(A.alg.unit, e) != e)
        throw PreconditionError("hermitian module: 1·x != x");
    }
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b)
        for (std::size_t x = 0; x < nt; ++x) {
          Vec<K> ab = A.alg.product.at(a, b).to_dense(na);
          Vec<K> bx = action.at(b, x).to_dense(nt);
          if (action.apply(ab, unit_vec<K>(nt, x)) !=
              action.apply_left_basis(a, bx))
            throw PreconditionError("hermitian module: (ab)x != a(bx)");
        }
    // h is skew-hermitian: h(ax,y) = a h(x,y), h(x,y) = −h(y,x)*
    for (std::size_t x = 0; x < nt; ++x)
      for (std::size_t y = 0; y < nt; ++y) {
        Vec<K> hxy = h.at(x, y).to_dense(na);
        Vec<K> hyx = h.at(y, x).to_dense(na);
        if (hxy != scaled(A.conj(hyx), K{-1}))
          throw PreconditionError("hermitian module: h(x,y) != -h(y,x)*");
        for (std::size_t a = 0; a < na; ++a) {
          Vec<K> ax = action.at(a, x).to_dense(nt);
          Vec<K> lhs = h.apply(ax, unit_vec<K>(nt, y));
          Vec<K> rhs = A.alg.product.apply_left_basis(a, hxy);
          if (lhs != rhs)
            throw PreconditionError("hermitian module: h(ax,y) != a·h(x,y)");
        }
      }
  }
};

// phi_{x,y}: z -> h(z,x)y + h(z,y)x, as an operator on T
template <Scalar K>
Mat<K> phi_map(const HermitianModule<K> &m, const Vec<K> &x, const Vec<K> &y) {
  std::size_t nt = m.dim_t();
  Mat<K> out(nt, nt);
  for (std::size_t z = 0; z < nt; ++z) {
    Vec<K> hzx = m.h.apply_left_basis(z, x); // h(e_z, x)
    Vec<K> hzy = m.h.apply_left_basis(z, y);
    Vec<K> col = m.action.apply(hzx, y);
    add_scaled(col, K{1}, m.action.apply(hzy, x));
    for (std::size_t i = 0; i < nt; ++i)
      out.at(i, z) = col[i];
  }
  return out;
}

// J-ternary pair built from a hermitian module:
//   J = H(A,*), a·b = (ab+ba)/2, a•x = ax,
//   <x|y> = h(x,y) − h(y,x),  <x,y,z> = h(x,y)z + h(z,x)y + h(z,y)x.
template <Scalar K> struct PrototypicalResult {
  JTernaryAlgebra<K> jt;
  std::vector<Vec<K>> hbasis; // basis of H(A,*) inside A
  HermitianModule<K> module;

  // coordinates of an A-element lying in H(A,*)
  Vec<K> to_j(const Vec<K> &a_elt) const {
    auto c = coords_in_rows(hbasis, a_elt);
    if (!c)
      throw PreconditionError("element does not lie in H(A,*)");
    return *c;
  }

  Vec<K> to_a(const Vec<K> &j_elt) const {
    Vec<K> out = zero_vec<K>(module.dim_a());
    for (std::size_t i = 0; i < hbasis.size(); ++i)
      add_scaled(out, j_elt[i], hbasis[i]);
    return out;
  }
};

template <Scalar K>
PrototypicalResult<K> prototypical(const HermitianModule<K> &m,
                                   bool certify = true,
                                   const SweepPlan &plan = SweepPlan::exhaustive(),
                                   unsigned threads = 1) {
  m.validate();
  std::size_t na = m.dim_a(), nt = m.dim_t();

  PrototypicalResult<K> res;
  res.module = m;
  res.hbasis = m.A.symmetric_part();
  std::size_t nj = res.hbasis.size();

  Echelon<K> hspan(na, true);
  for (std::size_t i = 0; i < nj; ++i)
    hspan.add(SparseVec<K>::from_dense(res.hbasis[i]), (std::uint32_t)i);
  auto j_coords = [&](const Vec<K> &a_elt, const char *what) {
    auto c = hspan.coords(SparseVec<K>::from_dense(a_elt));
    if (!c)
      throw PreconditionError(std::string("prototypical: ") + what +
                              " does not lie in H(A,*)");
    return c->to_dense(nj);
  };

  JTernaryAlgebra<K> jt;
  jt.jordan.space = Space::indexed(nj, "a");
  jt.jordan.product = BilinearMap<K>(nj, nj, nj);
  K half = K{1} / K{2};
  for (std::size_t i = 0; i < nj; ++i)
    for (std::size_t j = 0; j < nj; ++j) {
      Vec<K> prod = m.A.alg.mul(res.hbasis[i], res.hbasis[j]);
      add_scaled(prod, K{1}, m.A.alg.mul(res.hbasis[j], res.hbasis[i]));
      jt.jordan.product.at(i, j) =
          SparseVec<K>::from_dense(scaled(j_coords(prod, "a·b"), half));
    }
  jt.jordan.unit = j_coords(m.A.alg.unit, "1");

  jt.tspace = m.tspace;
  jt.bullet = BilinearMap<K>(nj, nt, nt);
  for (std::size_t i = 0; i < nj; ++i)
    for (std::size_t x = 0; x < nt; ++x)
      jt.bullet.at(i, x) = SparseVec<K>::from_dense(
          m.action.apply(res.hbasis[i], unit_vec<K>(nt, x)));

  jt.skew = BilinearMap<K>(nt, nt, nj);
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y) {
      Vec<K> v = vec_sub(m.h.at(x, y).to_dense(na), m.h.at(y, x).to_dense(na));
      jt.skew.at(x, y) = SparseVec<K>::from_dense(j_coords(v, "<x|y>"));
    }

  jt.triple = TrilinearMap<K>(nt, nt, nt, nt);
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y) {
      Vec<K> hxy = m.h.at(x, y).to_dense(na);
      for (std::size_t z = 0; z < nt; ++z) {
        Vec<K> v = m.action.apply(hxy, unit_vec<K>(nt, z));
        add_scaled(v, K{1},
                   m.action.apply(m.h.at(z, x).to_dense(na), unit_vec<K>(nt, y)));
        add_scaled(v, K{1},
                   m.action.apply(m.h.at(z, y).to_dense(na), unit_vec<K>(nt, x)));
        jt.triple.at(x, y, z) = SparseVec<K>::from_dense(v);
      }
    }

  if (certify) {
    auto rep = check_jt_axioms(jt, plan, threads);
    if (!rep.passed())
      throw PreconditionError("prototypical: constructed pair fails axiom '" +
                              (rep.witness ? rep.witness->item : std::string()) +
                              "'");
  }
  res.jt = std::move(jt);
  return res;
}

// The ambient D of the hermitian construction: (id ⊗ Skew(A,*)) acting by
// s: c -> sc−cs on J, x -> sx on T, plus Skew(End_A(T), tau) acting on T
// alone. The inner span of an assembled algebra always lands inside this.
template <Scalar K>
std::vector<EvenOp<K>> hermitian_full_D(const PrototypicalResult<K> &p) {
  const auto &m = p.module;
  std::size_t na = m.dim_a(), nt = m.dim_t(), nj = p.hbasis.size();
  std::vector<EvenOp<K>> out;

  Echelon<K> hspan(na, true);
  for (std::size_t i = 0; i < nj; ++i)
    hspan.add(SparseVec<K>::from_dense(p.hbasis[i]), (std::uint32_t)i);

  for (const auto &s : m.A.skew_part()) {
    EvenOp<K> op((std::size_t)nj, nt);
    for (std::size_t c = 0; c < nj; ++c) {
      Vec<K> sc = m.A.alg.mul(s, p.hbasis[c]);
      add_scaled(sc, K{-1}, m.A.alg.mul(p.hbasis[c], s));
      auto coords = hspan.coords(SparseVec<K>::from_dense(sc));
      if (!coords)
        throw Error("hermitian_full_D: [s,H] escaped H(A,*)");
      Vec<K> col = coords->to_dense(nj);
      for (std::size_t i = 0; i < nj; ++i)
        op.on_j.at(i, c) = col[i];
    }
    for (std::size_t x = 0; x < nt; ++x) {
      Vec<K> col = m.action.apply(s, unit_vec<K>(nt, x));
      for (std::size_t i = 0; i < nt; ++i)
        op.on_t.at(i, x) = col[i];
    }
    out.push_back(std::move(op));
  }

  // Skew(End_A(T), tau): A-linear f with h(fx,y) + h(x,fy) = 0, computed as
  // the exact kernel of the stacked constraint matrix over the nt² entries
  // of f (entry (i,j) = coefficient of e_i in f(e_j)).
  std::vector<Vec<K>> constraints;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < nt; ++x) {
      Vec<K> ax = m.action.at(a, x).to_dense(nt);
      for (std::size_t r = 0; r < nt; ++r) {
        Mat<K> coeff(nt, nt);
        for (std::size_t j = 0; j < nt; ++j)
          if (!ax[j].is_zero())
            coeff.at(r, j) += ax[j]; // f(a·e_x)_r
        for (std::size_t i = 0; i < nt; ++i) {
          Vec<K> ai = m.action.at(a, i).to_dense(nt);
          coeff.at(i, x) -= ai[r]; // −(a·f(e_x))_r
        }
        constraints.push_back(coeff.flatten());
      }
    }
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y)
      for (std::size_t r = 0; r < na; ++r) {
        Mat<K> coeff(nt, nt);
        for (std::size_t i = 0; i < nt; ++i) {
          Vec<K> hiy = m.h.at(i, y).to_dense(na);
          Vec<K> hxi = m.h.at(x, i).to_dense(na);
          coeff.at(i, x) += hiy[r]; // h(f e_x, e_y)_r
          coeff.at(i, y) += hxi[r]; // h(e_x, f e_y)_r
        }
        constraints.push_back(coeff.flatten());
      }
  auto sol = solve_exact<K>(std::move(constraints));
  for (const auto &flat : sol.nullspace) {
    EvenOp<K> op((std::size_t)nj, nt);
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < nt; ++j)
        op.on_t.at(i, j) = flat[i * nt + j];
    out.push_back(std::move(op));
  }
  return out;
}

template <Scalar K> struct HermitianExample {
  std::string name;
  PrototypicalResult<K> proto;
  long long reference_dim = 0;      // dim of the ambient gl/so/sp algebra
  std::optional<Vec<K>> idempotent; // catalog idempotent, in J coordinates
};

namespace detail {

template <Scalar K> Mat<K> identity_gram(std::size_t n) {
  return Mat<K>::identity(n);
}

// block-diagonal [[0,1],[-1,0]] pairs; n must be even
template <Scalar K> Mat<K> symplectic_gram(std::size_t n) {
  Mat<K> g(n, n);
  for (std::size_t m = 0; m + 1 < n; m += 2) {
    g.at(m, m + 1) = K{1};
    g.at(m + 1, m) = K{-1};
  }
  return g;
}

} // namespace detail

// A = End(W) ⊕ End(W)^op with the exchange involution, T = (W⊗Z*) ⊕ (W*⊗Z).
// The ambient algebra is gl((V⊗W) ⊕ Z); the assembled inner algebra is its
// derived algebra sl((V⊗W) ⊕ Z).
template <Scalar K>
HermitianExample<K> gl_example(std::size_t w, std::size_t z, bool certify = true,
                               const SweepPlan &plan = SweepPlan::exhaustive(),
                               unsigned threads = 1) {
  if (w < 1)
    throw PreconditionError("gl_example: need dim W >= 1");
  std::size_t n2 = w * w, na = 2 * n2, nt = 2 * w * z;

  HermitianModule<K> m;
  auto b = matrix_algebra<K>(w);
  m.A.alg = algebra_direct_sum(b, opposite_algebra(b));
  m.A.invol = exchange_involution<K>(n2);

  std::vector<std::string> tlabels;
  for (std::size_t i = 1; i <= w; ++i)
    for (std::size_t j = 1; j <= z; ++j)
      tlabels.push_back("w" + std::to_string(i) + "⊗z*" + std::to_string(j));
  for (std::size_t i = 1; i <= w; ++i)
    for (std::size_t j = 1; j <= z; ++j)
      tlabels.push_back("w*" + std::to_string(i) + "⊗z" + std::to_string(j));
  m.tspace = Space(std::move(tlabels));

  m.action = BilinearMap<K>(na, nt, nt);
  for (std::size_t p = 0; p < w; ++p)
    for (std::size_t q = 0; q < w; ++q) {
      for (std::size_t j = 0; j < z; ++j) {
        // E_pq (B part) on w_q ⊗ z*_j -> w_p ⊗ z*_j
        m.action.at(p * w + q, q * z + j) =
            SparseVec<K>::unit((std::uint32_t)(p * z + j));
        // E_pq^op on w*_p ⊗ z_j -> w*_q ⊗ z_j  (precomposition with E_pq)
        m.action.at(n2 + p * w + q, w * z + p * z + j) =
            SparseVec<K>::unit((std::uint32_t)(w * z + q * z + j));
      }
    }

  m.h = BilinearMap<K>(nt, nt, na);
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < z; ++j)
      for (std::size_t k = 0; k < w; ++k) {
        // h(w_i ⊗ z*_j, w*_k ⊗ z_j) = E_ik in B
        m.h.at(i * z + j, w * z + k * z + j) =
            SparseVec<K>::unit((std::uint32_t)(i * w + k));
        m.h.at(w * z + k * z + j, i * z + j) =
            SparseVec<K>::unit((std::uint32_t)(n2 + i * w + k), K{-1});
      }

  HermitianExample<K> ex;
  ex.name = "gl(" + std::to_string(w) + "," + std::to_string(z) + ")";
  ex.proto = prototypical(m, certify, plan, threads);
  std::size_t n = 2 * w + z;
  ex.reference_dim = (long long)(n * n);
  if (w >= 2) {
    std::size_t k = w / 2;
    Vec<K> p = zero_vec<K>(na);
    for (std::size_t i = 0; i < k; ++i) {
      p[i * w + i] = K{1};
      p[n2 + i * w + i] = K{1};
    }
    ex.idempotent = ex.proto.to_j(p);
  }
  return ex;
}

// W with a nondegenerate bilinear form b_W, Z with the opposite-parity form,
// A = End(W) with the b_W involution, T = W ⊗ Z with
// h(w1⊗z1, w2⊗z2) = b_Z(z1,z2)·w1 b_W(w2,·).
template <Scalar K>
HermitianExample<K>
form_example(const std::string &name, std::size_t w, std::size_t z,
             const Mat<K> &gram_w, const Mat<K> &gram_z, long long ref_dim,
             std::optional<std::size_t> idem_block, bool certify,
             const SweepPlan &plan, unsigned threads) {
  std::size_t na = w * w, nt = w * z;
  HermitianModule<K> m;
  m.A.alg = matrix_algebra<K>(w);
  m.A.invol = form_involution<K>(w, gram_w);

  std::vector<std::string> tlabels;
  for (std::size_t i = 1; i <= w; ++i)
    for (std::size_t j = 1; j <= z; ++j)
      tlabels.push_back("w" + std::to_string(i) + "⊗z" + std::to_string(j));
  m.tspace = Space(std::move(tlabels));

  m.action = BilinearMap<K>(na, nt, nt);
  for (std::size_t p = 0; p < w; ++p)
    for (std::size_t q = 0; q < w; ++q)
      for (std::size_t j = 0; j < z; ++j)
        m.action.at(p * w + q, q * z + j) =
            SparseVec<K>::unit((std::uint32_t)(p * z + j));

  m.h = BilinearMap<K>(nt, nt, na);
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < z; ++j)
      for (std::size_t k = 0; k < w; ++k)
        for (std::size_t l = 0; l < z; ++l) {
          if (gram_z.at(j, l).is_zero())
            continue;
          SparseVec<K> val;
          for (std::size_t c = 0; c < w; ++c) {
            K coeff = gram_z.at(j, l) * gram_w.at(k, c);
            if (!coeff.is_zero())
              val.push((std::uint32_t)(i * w + c), coeff);
          }
          m.h.at(i * z + j, k * z + l) = val;
        }

  HermitianExample<K> ex;
  ex.name = name;
  ex.proto = prototypical(m, certify, plan, threads);
  ex.reference_dim = ref_dim;
  if (idem_block) {
    Vec<K> p = zero_vec<K>(na);
    for (std::size_t i = 0; i < *idem_block; ++i)
      p[i * w + i] = K{1};
    ex.idempotent = ex.proto.to_j(p);
  }
  return ex;
}

// The extension of a hermitian module to W = (V⊗A) ⊕ T with
// h(u⊗a, v⊗b) = 2(u|v)·a b* and V⊗A ⊥ T. The result is again a hermitian
// module, so its skew-hermitian property is re-verified by validate() rather
// than assumed.
template <Scalar K>
HermitianModule<K> extended_module(const HermitianModule<K> &m) {
  std::size_t na = m.dim_a(), nt = m.dim_t();
  HermitianModule<K> w;
  w.A = m.A;

  std::vector<std::string> labels;
  const char *un[2] = {"p", "q"};
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t a = 0; a < na; ++a)
      labels.push_back(std::string(un[u]) + "⊗" + m.A.alg.space.labels[a]);
  for (const auto &l : m.tspace.labels)
    labels.push_back(l);
  w.tspace = Space(std::move(labels));
  std::size_t nw = 2 * na + nt;

  w.action = BilinearMap<K>(na, nw, nw);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t u = 0; u < 2; ++u)
      for (std::size_t b = 0; b < na; ++b) {
        SparseVec<K> out;
        for (const auto &[k, c] : m.A.alg.product.at(a, b).terms)
          out.push((std::uint32_t)(u * na + k), c);
        w.action.at(a, u * na + b) = out;
      }
    for (std::size_t x = 0; x < nt; ++x) {
      SparseVec<K> out;
      for (const auto &[k, c] : m.action.at(a, x).terms)
        out.push((std::uint32_t)(2 * na + k), c);
      w.action.at(a, 2 * na + x) = out;
    }
  }

  w.h = BilinearMap<K>(nw, nw, na);
  auto pairing = [](std::size_t u, std::size_t v) -> int {
    if (u == v)
      return 0;
    return u == 0 ? 1 : -1;
  };
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t v = 0; v < 2; ++v)
        for (std::size_t b = 0; b < na; ++b) {
          int pr = pairing(u, v);
          if (pr == 0)
            continue;
          Vec<K> bbar = m.A.invol.cols[b].to_dense(na);
          Vec<K> val =
              scaled(m.A.alg.product.apply_left_basis(a, bbar), K{2 * pr});
          w.h.at(u * na + a, v * na + b) = SparseVec<K>::from_dense(val);
        }
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y)
      w.h.at(2 * na + x, 2 * na + y) = m.h.at(x, y);
  return w;
}

// so((V⊗W) ⊥ Z): b_W symplectic (w even), b_Z symmetric
template <Scalar K>
HermitianExample<K> so_example(std::size_t w, std::size_t z, bool certify = true,
                               const SweepPlan &plan = SweepPlan::exhaustive(),
                               unsigned threads = 1) {
  if (w < 2 || w % 2 != 0)
    throw PreconditionError("so_example: need even dim W >= 2 (symplectic b_W)");
  std::size_t n = 2 * w + z;
  // proper idempotents need a nondegenerate proper subspace: w >= 4
  std::optional<std::size_t> idem =
      w >= 4 ? std::optional<std::size_t>(2) : std::nullopt;
  return form_example<K>(
      "so(" + std::to_string(w) + "," + std::to_string(z) + ")", w, z,
      detail::symplectic_gram<K>(w), detail::identity_gram<K>(z),
      (long long)(n * (n - 1) / 2), idem, certify, plan, threads);
}

// sp((V⊗W) ⊥ Z): b_W symmetric, b_Z symplectic (z even)
template <Scalar K>
HermitianExample<K> sp_example(std::size_t w, std::size_t z, bool certify = true,
                               const SweepPlan &plan = SweepPlan::exhaustive(),
                               unsigned threads = 1) {
  if (w < 1)
    throw PreconditionError("sp_example: need dim W >= 1");
  if (z % 2 != 0)
    throw PreconditionError("sp_example: need even dim Z (symplectic b_Z)");
  std::size_t n = 2 * w + z;
  std::optional<std::size_t> idem =
      w >= 2 ? std::optional<std::size_t>(std::max<std::size_t>(1, w / 2))
             : std::nullopt;
  return form_example<K>(
      "sp(" + std::to_string(w) + "," + std::to_string(z) + ")", w, z,
      detail::identity_gram<K>(w), detail::symplectic_gram<K>(z),
      (long long)(n * (n + 1) / 2), idem, certify, plan, threads);
}

} // namespace isotype
