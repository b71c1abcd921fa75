#pragma once

#include "isotype/jternary.hpp"
#include <functional>

#include "isotype/lie.hpp"

namespace isotype {

// L(J,T) = (sl(V)⊗J) ⊕ (V⊗T) ⊕ D with D = span{D_{a,b}, d_{x,y}}.
// Basis layout: [E⊗a_*, H⊗a_*, F⊗a_*] [p⊗x_*, q⊗x_*] [D-basis].
// The sl2 kernel is fixed once and for all by the symplectic basis {p,q},
// (p|q) = 1: E = (0 1;0 0), H = (1 0;0 -1), F = (0 0;1 0).
template <Scalar K> struct AssembledLie {
  LieAlgebra<K> lie;
  JTernaryAlgebra<K> jt;
  Sl2Triple<K> triple; // E⊗1, H⊗1, F⊗1
  std::vector<EvenOp<K>> d_basis;
  VerificationReport build_report;

  std::size_t nj = 0, nt = 0, nd = 0;

  std::size_t sl2_index(std::size_t f, std::size_t a) const { return f * nj + a; }
  std::size_t v_index(std::size_t u, std::size_t x) const {
    return 3 * nj + u * nt + x;
  }
  std::size_t d_index(std::size_t k) const { return 3 * nj + 2 * nt + k; }

  // f⊗a as an element of L, f in {0:E, 1:H, 2:F}
  Vec<K> embed_sl2(std::size_t f, const Vec<K> &a) const {
    Vec<K> out = zero_vec<K>(lie.dim());
    for (std::size_t i = 0; i < nj; ++i)
      out[sl2_index(f, i)] = a[i];
    return out;
  }

  Vec<K> embed_v(std::size_t u, const Vec<K> &x) const {
    Vec<K> out = zero_vec<K>(lie.dim());
    for (std::size_t i = 0; i < nt; ++i)
      out[v_index(u, i)] = x[i];
    return out;
  }

  Vec<K> embed_d(const Vec<K> &dcoords) const {
    Vec<K> out = zero_vec<K>(lie.dim());
    for (std::size_t k = 0; k < nd; ++k)
      out[d_index(k)] = dcoords[k];
    return out;
  }

  // apply a D-part coordinate vector to an element of J ⊕ T
  EvenOp<K> d_op(const Vec<K> &dcoords) const {
    EvenOp<K> op(nj, nt);
    for (std::size_t k = 0; k < nd; ++k) {
      if (dcoords[k].is_zero())
        continue;
      op = op.add(d_basis[k].scaled(dcoords[k]));
    }
    return op;
  }
};

namespace detail {

// sl2 structure in the (E,H,F) basis: brackets and the trace form
template <Scalar K>
inline SparseVec<K> sl2_bracket(std::size_t f, std::size_t g) {
  SparseVec<K> out;
  if (f == g)
    return out;
  // [E,H] = -2E, [E,F] = H, [H,F] = -2F
  if (f == 0 && g == 1)
    out.push(0, K{-2});
  else if (f == 0 && g == 2)
    out.push(1, K{1});
  else if (f == 1 && g == 2)
    out.push(2, K{-2});
  else {
    out = sl2_bracket<K>(g, f).scaled(K{-1});
  }
  return out;
}

template <Scalar K> inline K sl2_trace(std::size_t f, std::size_t g) {
  if ((f == 0 && g == 2) || (f == 2 && g == 0))
    return K{1};
  if (f == 1 && g == 1)
    return K{2};
  return K{};
}

// action of E,H,F on the symplectic basis {p,q}: column u -> vector
template <Scalar K> inline SparseVec<K> sl2_on_v(std::size_t f, std::size_t u) {
  SparseVec<K> out;
  if (f == 0) { // E: q -> p
    if (u == 1)
      out.push(0, K{1});
  } else if (f == 1) { // H: p -> p, q -> -q
    out.push((std::uint32_t)u, u == 0 ? K{1} : K{-1});
  } else { // F: p -> q
    if (u == 0)
      out.push(1, K{1});
  }
  return out;
}

// gamma_{u,v} in (E,H,F) coordinates: gamma_pp = 2E, gamma_pq = -H,
// gamma_qq = -2F
template <Scalar K>
inline SparseVec<K> gamma_coords(std::size_t u, std::size_t v) {
  SparseVec<K> out;
  if (u == 0 && v == 0)
    out.push(0, K{2});
  else if (u == 1 && v == 1)
    out.push(2, K{-2});
  else
    out.push(1, K{-1});
  return out;
}

template <Scalar K> inline K symplectic_pairing(std::size_t u, std::size_t v) {
  if (u == v)
    return K{};
  return u == 0 ? K{1} : K{-1};
}

} // namespace detail

// Theorem-2.5 style assembly. Requires a certified pair; computes D as the
// exact span of the generators {D_{a,b}, d_{x,y}} (kept as actual generator
// operators, with echelon bookkeeping for coordinates), verifies that the
// bracket formulas are antisymmetric and that D is bracket-closed, and
// returns the distinguished sl2 triple (E⊗1, H⊗1, F⊗1).
template <Scalar K>
AssembledLie<K> assemble_L(const JTernaryAlgebra<K> &jt, unsigned threads = 1) {
  if (!jt.certified)
    throw PreconditionError(
        "assemble_L: pair is not certified (run check_jt_axioms first)");
  (void)threads;

  AssembledLie<K> A;
  A.jt = jt;
  std::size_t nj = A.nj = jt.dim_j();
  std::size_t nt = A.nt = jt.dim_t();

  // build the D span with generator history
  std::size_t opdim = nj * nj + nt * nt;
  Echelon<K> dspan(opdim, true);
  std::vector<std::uint32_t> basis_gens;
  std::vector<EvenOp<K>> gen_ops;
  std::uint32_t gen_id = 0;
  auto feed = [&](EvenOp<K> op) {
    SparseVec<K> flat = SparseVec<K>::from_dense(op.flatten());
    if (dspan.add(flat, gen_id)) {
      basis_gens.push_back(gen_id);
      gen_ops.push_back(std::move(op));
    }
    ++gen_id;
  };
  for (std::size_t a = 0; a < nj; ++a)
    for (std::size_t b = a + 1; b < nj; ++b)
      feed(derived_D(jt, unit_vec<K>(nj, a), unit_vec<K>(nj, b)));
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = x; y < nt; ++y)
      feed(derived_d(jt, unit_vec<K>(nt, x), unit_vec<K>(nt, y)));

  std::size_t nd = A.nd = dspan.rank();
  A.d_basis = gen_ops;

  std::vector<std::size_t> gen_pos(gen_id, SIZE_MAX);
  for (std::size_t k = 0; k < basis_gens.size(); ++k)
    gen_pos[basis_gens[k]] = k;
  auto dcoords = [&](const EvenOp<K> &op, const char *what) {
    auto combo = dspan.coords(SparseVec<K>::from_dense(op.flatten()));
    if (!combo)
      throw PreconditionError(std::string("assemble_L: ") + what +
                              " is not in span{D_{a,b}, d_{x,y}}");
    Vec<K> out = zero_vec<K>(nd);
    for (const auto &[g, c] : combo->terms)
      out[gen_pos[g]] = c;
    return out;
  };

  // precompute coordinates of every D_{a,b} and d_{x,y}
  std::vector<Vec<K>> Dab(nj * nj), dxy(nt * nt);
  for (std::size_t a = 0; a < nj; ++a)
    for (std::size_t b = 0; b < nj; ++b)
      Dab[a * nj + b] =
          dcoords(derived_D(jt, unit_vec<K>(nj, a), unit_vec<K>(nj, b)), "D_{a,b}");
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y)
      dxy[x * nt + y] =
          dcoords(derived_d(jt, unit_vec<K>(nt, x), unit_vec<K>(nt, y)), "d_{x,y}");

  std::size_t n = 3 * nj + 2 * nt + nd;
  std::vector<std::string> labels;
  const char *fn[3] = {"E", "H", "F"};
  for (std::size_t f = 0; f < 3; ++f)
    for (std::size_t a = 0; a < nj; ++a)
      labels.push_back(std::string(fn[f]) + "⊗" +
                       jt.jordan.space.labels[a]);
  const char *un[2] = {"p", "q"};
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t x = 0; x < nt; ++x)
      labels.push_back(std::string(un[u]) + "⊗" + jt.tspace.labels[x]);
  for (std::size_t k = 0; k < nd; ++k)
    labels.push_back("D" + std::to_string(k + 1));

  A.lie = LieAlgebra<K>(Space(std::move(labels)));
  A.lie.component.assign(n, "");
  for (std::size_t i = 0; i < 3 * nj; ++i)
    A.lie.component[i] = "sl2⊗J";
  for (std::size_t i = 0; i < 2 * nt; ++i)
    A.lie.component[3 * nj + i] = "V⊗T";
  for (std::size_t i = 0; i < nd; ++i)
    A.lie.component[3 * nj + 2 * nt + i] = "D";

  // ordered raw bracket per the defining formulas; antisymmetry is then
  // verified rather than assumed
  std::function<Vec<K>(std::size_t, std::size_t)> raw =
      [&](std::size_t r, std::size_t c) -> Vec<K> {
    Vec<K> out = zero_vec<K>(n);
    std::size_t sl2_end = 3 * nj, v_end = 3 * nj + 2 * nt;
    if (r < sl2_end && c < sl2_end) {
      std::size_t f = r / nj, a = r % nj, g = c / nj, b = c % nj;
      SparseVec<K> fg = detail::sl2_bracket<K>(f, g);
      const SparseVec<K> &ab = jt.jordan.product.at(a, b);
      for (const auto &[f3, cf] : fg.terms)
        for (const auto &[j3, cj] : ab.terms)
          out[A.sl2_index(f3, j3)] += cf * cj;
      K tr = detail::sl2_trace<K>(f, g);
      if (!tr.is_zero()) {
        const Vec<K> &dc = Dab[a * nj + b];
        for (std::size_t k = 0; k < nd; ++k)
          out[A.d_index(k)] += K{2} * tr * dc[k];
      }
    } else if (r < sl2_end && c < v_end) {
      std::size_t f = r / nj, a = r % nj;
      std::size_t u = (c - sl2_end) / nt, x = (c - sl2_end) % nt;
      SparseVec<K> fu = detail::sl2_on_v<K>(f, u);
      const SparseVec<K> &ax = jt.bullet.at(a, x);
      for (const auto &[u3, cu] : fu.terms)
        for (const auto &[x3, cx] : ax.terms)
          out[A.v_index(u3, x3)] += cu * cx;
    } else if (r < v_end && c < sl2_end) {
      out = raw(c, r);
      for (auto &v : out)
        v = -v;
    } else if (r < v_end && c < v_end) {
      std::size_t u = (r - sl2_end) / nt, x = (r - sl2_end) % nt;
      std::size_t v = (c - sl2_end) / nt, y = (c - sl2_end) % nt;
      SparseVec<K> gam = detail::gamma_coords<K>(u, v);
      const SparseVec<K> &xy = jt.skew.at(x, y);
      for (const auto &[f3, cf] : gam.terms)
        for (const auto &[j3, cj] : xy.terms)
          out[A.sl2_index(f3, j3)] += cf * cj;
      K pair = detail::symplectic_pairing<K>(u, v);
      if (!pair.is_zero()) {
        const Vec<K> &dc = dxy[x * nt + y];
        for (std::size_t k = 0; k < nd; ++k)
          out[A.d_index(k)] += pair * dc[k];
      }
    } else if (r >= v_end && c < sl2_end) {
      std::size_t k = r - v_end;
      std::size_t f = c / nj, a = c % nj;
      Vec<K> da = A.d_basis[k].on_j.column(a);
      for (std::size_t j3 = 0; j3 < nj; ++j3)
        out[A.sl2_index(f, j3)] = da[j3];
    } else if (r >= v_end && c < v_end) {
      std::size_t k = r - v_end;
      std::size_t u = (c - sl2_end) / nt, x = (c - sl2_end) % nt;
      Vec<K> dx = A.d_basis[k].on_t.column(x);
      for (std::size_t x3 = 0; x3 < nt; ++x3)
        out[A.v_index(u, x3)] = dx[x3];
    } else if (r < v_end && c >= v_end) {
      out = raw(c, r);
      for (auto &v : out)
        v = -v;
    } else {
      std::size_t k = r - v_end, l = c - v_end;
      if (k != l) {
        EvenOp<K> comm = A.d_basis[k].commutator(A.d_basis[l]);
        Vec<K> dc = dcoords(comm, "[D,D'] (closure)");
        for (std::size_t m = 0; m < nd; ++m)
          out[A.d_index(m)] = dc[m];
      }
    }
    return out;
  };

  VerificationReport rep;
  rep.task = "assemble";
  rep.add_dim("dim_L", (long long)n);
  rep.add_dim("dim_J", (long long)nj);
  rep.add_dim("dim_T", (long long)nt);
  rep.add_dim("dim_D", (long long)nd);

  SweepAccum anti;
  for (std::size_t i = 0; i < n; ++i) {
    {
      anti.count();
      if (!is_zero_vec(raw(i, i)))
        anti.violate("antisymmetry", {(long long)i, (long long)i});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      anti.count();
      Vec<K> rij = raw(i, j);
      Vec<K> rji = raw(j, i);
      if (!is_zero_vec(vec_add(rij, rji)))
        anti.violate("antisymmetry", {(long long)i, (long long)j});
      A.lie.set_bracket(i, j, SparseVec<K>::from_dense(rij));
    }
  }
  rep.add_item(anti.into_item("antisymmetry"));
  A.build_report = std::move(rep);

  A.triple.e = A.embed_sl2(0, jt.jordan.unit);
  A.triple.h = A.embed_sl2(1, jt.jordan.unit);
  A.triple.f = A.embed_sl2(2, jt.jordan.unit);
  return A;
}

// Inverse direction: a 5-graded Lie algebra with a suitable sl2 pair gives a
// J-ternary pair on (L_2, L_1) via
//   A·B = [[A,F],B]/2, A•X = [[A,F],X], <X|Y> = [X,Y]/2,
//   <X,Y,Z> = [[X,[Y,F]],Z]/2.
template <Scalar K> struct GradedJTernary {
  JTernaryAlgebra<K> jt;
  std::vector<Vec<K>> j_basis; // basis of L_2 inside L
  std::vector<Vec<K>> t_basis; // basis of L_1 inside L
};

template <Scalar K>
GradedJTernary<K> jternary_from_5grading(const LieAlgebra<K> &L, const Vec<K> &E,
                                         const Vec<K> &F) {
  Grading<K> g = five_grading(L, E, F);
  GradedJTernary<K> out;
  out.j_basis = g.pieces.at(2);
  out.t_basis = g.pieces.at(1);
  std::size_t nj = out.j_basis.size(), nt = out.t_basis.size();

  Echelon<K> jspan(L.dim(), true), tspan(L.dim(), true);
  for (std::size_t i = 0; i < nj; ++i)
    jspan.add(SparseVec<K>::from_dense(out.j_basis[i]), (std::uint32_t)i);
  for (std::size_t i = 0; i < nt; ++i)
    tspan.add(SparseVec<K>::from_dense(out.t_basis[i]), (std::uint32_t)i);
  auto j_coords = [&](const Vec<K> &v, const char *what) {
    auto c = jspan.coords(SparseVec<K>::from_dense(v));
    if (!c)
      throw PreconditionError(std::string("jternary_from_5grading: ") + what +
                              " escaped L_2");
    return c->to_dense(nj);
  };
  auto t_coords = [&](const Vec<K> &v, const char *what) {
    auto c = tspan.coords(SparseVec<K>::from_dense(v));
    if (!c)
      throw PreconditionError(std::string("jternary_from_5grading: ") + what +
                              " escaped L_1");
    return c->to_dense(nt);
  };

  JTernaryAlgebra<K> jt;
  jt.jordan.space = Space::indexed(nj, "a");
  jt.tspace = Space::indexed(nt, "x");
  K half = K{1} / K{2};

  jt.jordan.product = BilinearMap<K>(nj, nj, nj);
  for (std::size_t a = 0; a < nj; ++a) {
    Vec<K> aF = L.bracket(out.j_basis[a], F);
    for (std::size_t b = 0; b < nj; ++b) {
      Vec<K> prod = scaled(L.bracket(aF, out.j_basis[b]), half);
      jt.jordan.product.at(a, b) = SparseVec<K>::from_dense(j_coords(prod, "A·B"));
    }
  }

  jt.bullet = BilinearMap<K>(nj, nt, nt);
  for (std::size_t a = 0; a < nj; ++a) {
    Vec<K> aF = L.bracket(out.j_basis[a], F);
    for (std::size_t x = 0; x < nt; ++x)
      jt.bullet.at(a, x) = SparseVec<K>::from_dense(
          t_coords(L.bracket(aF, out.t_basis[x]), "A•X"));
  }

  jt.skew = BilinearMap<K>(nt, nt, nj);
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y)
      jt.skew.at(x, y) = SparseVec<K>::from_dense(j_coords(
          scaled(L.bracket(out.t_basis[x], out.t_basis[y]), half), "<X|Y>"));

  jt.triple = TrilinearMap<K>(nt, nt, nt, nt);
  for (std::size_t y = 0; y < nt; ++y) {
    Vec<K> yF = L.bracket(out.t_basis[y], F);
    for (std::size_t x = 0; x < nt; ++x) {
      Vec<K> xyF = L.bracket(out.t_basis[x], yF);
      for (std::size_t z = 0; z < nt; ++z)
        jt.triple.at(x, y, z) = SparseVec<K>::from_dense(t_coords(
            scaled(L.bracket(xyF, out.t_basis[z]), half), "<X,Y,Z>"));
    }
  }

  // the unit of (L_2, ·) is solved for, not assumed
  {
    std::vector<Vec<K>> rows(nj, Vec<K>(nj * nj, K{}));
    Vec<K> rhs(nj * nj, K{});
    for (std::size_t i = 0; i < nj; ++i)
      for (std::size_t b = 0; b < nj; ++b) {
        Vec<K> prod = jt.jordan.product.at(i, b).to_dense(nj);
        for (std::size_t r = 0; r < nj; ++r)
          rows[i][b * nj + r] = prod[r];
      }
    for (std::size_t b = 0; b < nj; ++b)
      rhs[b * nj + b] = K{1};
    // transpose: unknowns u_i, equations indexed by (b,r)
    std::vector<Vec<K>> eq(nj * nj, Vec<K>(nj, K{}));
    for (std::size_t i = 0; i < nj; ++i)
      for (std::size_t br = 0; br < nj * nj; ++br)
        eq[br][i] = rows[i][br];
    auto sol = solve_exact<K>(std::move(eq), rhs);
    if (!sol.consistent)
      throw PreconditionError(
          "jternary_from_5grading: induced product on L_2 has no unit");
    jt.jordan.unit = *sol.particular;
  }

  out.jt = std::move(jt);
  return out;
}

// true when the graded pair reproduces the original pair on the nose (same
// bases, all four product tables bit-equal, same unit)
template <Scalar K>
bool round_trip_matches(const AssembledLie<K> &A, const GradedJTernary<K> &g) {
  std::size_t nj = A.nj, nt = A.nt;
  if (g.jt.dim_j() != nj || g.jt.dim_t() != nt)
    return false;
  for (std::size_t i = 0; i < nj; ++i)
    if (g.j_basis[i] != A.embed_sl2(0, unit_vec<K>(nj, i)))
      return false;
  for (std::size_t i = 0; i < nt; ++i)
    if (g.t_basis[i] != A.embed_v(0, unit_vec<K>(nt, i)))
      return false;
  if (g.jt.jordan.unit != A.jt.jordan.unit)
    return false;
  for (std::size_t a = 0; a < nj; ++a)
    for (std::size_t b = 0; b < nj; ++b)
      if (!(g.jt.jordan.product.at(a, b) == A.jt.jordan.product.at(a, b)))
        return false;
  for (std::size_t a = 0; a < nj; ++a)
    for (std::size_t x = 0; x < nt; ++x)
      if (!(g.jt.bullet.at(a, x) == A.jt.bullet.at(a, x)))
        return false;
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y)
      if (!(g.jt.skew.at(x, y) == A.jt.skew.at(x, y)))
        return false;
  for (std::size_t x = 0; x < nt; ++x)
    for (std::size_t y = 0; y < nt; ++y)
      for (std::size_t z = 0; z < nt; ++z)
        if (!(g.jt.triple.at(x, y, z) == A.jt.triple.at(x, y, z)))
          return false;
  return true;
}

} // namespace isotype
