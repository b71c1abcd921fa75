#pragma once

#include "isotype/algebra.hpp"
#include "isotype/jternary.hpp"
#include "isotype/lie.hpp"

namespace isotype {

// Unital algebra with involution whose V-operators
//   V_{x,y}(z) = (x ȳ)z + (z ȳ)x − (z x̄)y
// satisfy [V_{x,y}, V_{z,w}] = V_{V_{x,y}(z), w} − V_{z, V_{y,x}(w)}.
template <Scalar K> struct StructurableAlgebra {
  InvolutiveAlgebra<K> ia;

  std::size_t dim() const { return ia.dim(); }
  const Algebra<K> &alg() const { return ia.alg; }

  Vec<K> conj(const Vec<K> &x) const { return ia.conj(x); }

  // V_{e_i, e_j}(e_z)
  Vec<K> vop_basis(std::size_t i, std::size_t j, std::size_t z) const {
    std::size_t n = dim();
    Vec<K> jbar = ia.invol.cols[j].to_dense(n);
    Vec<K> ibar = ia.invol.cols[i].to_dense(n);
    Vec<K> xi = unit_vec<K>(n, i), ej = unit_vec<K>(n, j), ez = unit_vec<K>(n, z);
    Vec<K> xib = alg().product.apply_left_basis(i, jbar); // x ȳ
    Vec<K> out = alg().mul(xib, ez);
    Vec<K> zyb = alg().product.apply_left_basis(z, jbar); // z ȳ
    add_scaled(out, K{1}, alg().mul(zyb, xi));
    Vec<K> zxb = alg().product.apply_left_basis(z, ibar); // z x̄
    add_scaled(out, K{-1}, alg().mul(zxb, ej));
    return out;
  }

  // V_{e_i, e_j} as a flattened operator vector (row-major n x n)
  SparseVec<K> vop_flat(std::size_t i, std::size_t j) const {
    std::size_t n = dim();
    std::vector<std::pair<std::uint32_t, K>> entries;
    for (std::size_t z = 0; z < n; ++z) {
      Vec<K> col = vop_basis(i, j, z);
      for (std::size_t r = 0; r < n; ++r)
        if (!col[r].is_zero())
          entries.push_back({(std::uint32_t)(r * n + z), col[r]});
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    SparseVec<K> out;
    out.terms = std::move(entries);
    return out;
  }

  // V_{x,y} for general arguments, as a dense operator
  Mat<K> vop(const Vec<K> &x, const Vec<K> &y) const {
    std::size_t n = dim();
    Mat<K> m(n, n);
    Vec<K> ybar = conj(y), xbar = conj(x);
    Vec<K> xyb = alg().mul(x, ybar);
    for (std::size_t z = 0; z < n; ++z) {
      Vec<K> ez = unit_vec<K>(n, z);
      Vec<K> col = alg().mul(xyb, ez);
      add_scaled(col, K{1}, alg().mul(alg().mul(ez, ybar), x));
      add_scaled(col, K{-1}, alg().mul(alg().mul(ez, xbar), y));
      for (std::size_t r = 0; r < n; ++r)
        m.at(r, z) = col[r];
    }
    return m;
  }
};

template <Scalar K>
StructurableAlgebra<K> make_structurable(InvolutiveAlgebra<K> ia) {
  ia.validate();
  return StructurableAlgebra<K>{std::move(ia)};
}

// Defining operator identity on basis quadruples (x,y,z,w), applied to every
// basis vector v. Exhaustive by default; the plan may sample quadruples for
// large algebras (v always sweeps the full basis).
template <Scalar K>
VerificationReport check_structurable(const StructurableAlgebra<K> &A,
                                      const SweepPlan &plan = SweepPlan::exhaustive(),
                                      unsigned threads = 1) {
  VerificationReport rep;
  rep.task = "structurable";
  std::size_t n = A.dim();
  rep.add_dim("dim", (long long)n);

  auto eval = [&](const std::size_t *t) {
    std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
    for (std::size_t v = 0; v < n; ++v) {
      // [V_{x,y}, V_{z,w}](v)
      Vec<K> zwv = A.vop_basis(z, w, v);
      Vec<K> lhs = zero_vec<K>(n);
      for (std::size_t k = 0; k < n; ++k)
        if (!zwv[k].is_zero())
          add_scaled(lhs, zwv[k], A.vop_basis(x, y, k));
      Vec<K> xyv = A.vop_basis(x, y, v);
      for (std::size_t k = 0; k < n; ++k)
        if (!xyv[k].is_zero())
          add_scaled(lhs, -xyv[k], A.vop_basis(z, w, k));
      // V_{V_{x,y}(z), w}(v) − V_{z, V_{y,x}(w)}(v)
      Vec<K> xyz = A.vop_basis(x, y, z);
      Vec<K> rhs = zero_vec<K>(n);
      for (std::size_t k = 0; k < n; ++k)
        if (!xyz[k].is_zero())
          add_scaled(rhs, xyz[k], A.vop_basis(k, w, v));
      Vec<K> yxw = A.vop_basis(y, x, w);
      for (std::size_t k = 0; k < n; ++k)
        if (!yxw[k].is_zero())
          add_scaled(rhs, -yxw[k], A.vop_basis(z, k, v));
      if (lhs != rhs)
        return false;
    }
    return true;
  };
  rep.add_item(detail::sweep_tuples<K>("v_identity", 4, n, plan, threads, eval));
  return rep;
}

// Inner structure Lie algebra: the exact span of the V_{x,y}, kept as a
// deterministic independent subset of the generators (x-major scan) with
// echelon bookkeeping for coordinates.
template <Scalar K> struct InstrlBasis {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gens; // chosen (i,j)
  Echelon<K> span;                                           // with history
  std::vector<std::size_t> gen_pos; // generator id (i*n+j) -> basis position

  explicit InstrlBasis(std::size_t opdim) : span(opdim, true) {}

  std::size_t dim() const { return gens.size(); }

  Vec<K> coords(const SparseVec<K> &flat_op, const char *what) const {
    auto combo = span.coords(flat_op);
    if (!combo)
      throw PreconditionError(std::string("instrl: ") + what +
                              " lies outside span{V_{x,y}}");
    Vec<K> out = zero_vec<K>(gens.size());
    for (const auto &[g, c] : combo->terms)
      out[gen_pos[g]] = c;
    return out;
  }
};

template <Scalar K> InstrlBasis<K> instrl(const StructurableAlgebra<K> &A) {
  std::size_t n = A.dim();
  InstrlBasis<K> basis(n * n);
  basis.gen_pos.assign(n * n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec<K> flat = A.vop_flat(i, j);
      std::uint32_t gid = (std::uint32_t)(i * n + j);
      if (basis.span.add(flat, gid)) {
        basis.gen_pos[gid] = basis.gens.size();
        basis.gens.push_back({(std::uint32_t)i, (std::uint32_t)j});
      }
    }
  return basis;
}

// Kantor 5-graded Lie algebra K(A,−) = S~ ⊕ A~ ⊕ Instrl ⊕ A ⊕ S with the
// standard bracket table, built block by block and validated structurally:
// L_s L_t = (V_{st,1} − V_{s,t})/2 as operators, the epsilon involution
// V_{x,y} -> −V_{y,x} well-defined on the span, and antisymmetry where both
// orders of a block pair are formula-defined.
template <Scalar K> struct KantorLie {
  LieAlgebra<K> lie;
  std::vector<Vec<K>> s_basis; // basis of S inside A (canonical RREF rows)
  std::size_t ns = 0, na = 0, ni = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> instrl_gens;
  VerificationReport build_report;

  std::size_t stilde_index(std::size_t k) const { return k; }
  std::size_t atilde_index(std::size_t i) const { return ns + i; }
  std::size_t instrl_index(std::size_t k) const { return ns + na + k; }
  std::size_t a_index(std::size_t i) const { return ns + na + ni + i; }
  std::size_t s_index(std::size_t k) const { return ns + 2 * na + ni + k; }

  // grading weights by block: S~ -2, A~ -1, Instrl 0, A 1, S 2
  Grading<K> block_grading() const {
    Grading<K> g;
    std::size_t n = lie.dim();
    auto unit_block = [&](std::size_t b, std::size_t count, int w) {
      for (std::size_t k = 0; k < count; ++k)
        g.pieces[w].push_back(unit_vec<K>(n, b + k));
    };
    unit_block(0, ns, -2);
    unit_block(ns, na, -1);
    unit_block(ns + na, ni, 0);
    unit_block(ns + na + ni, na, 1);
    unit_block(ns + 2 * na + ni, ns, 2);
    return g;
  }

  // elements of L from data
  Vec<K> embed_a(const Vec<K> &x) const { // into the L1 = A block
    Vec<K> out = zero_vec<K>(lie.dim());
    for (std::size_t i = 0; i < na; ++i)
      out[a_index(i)] = x[i];
    return out;
  }
  Vec<K> embed_s_coords(const Vec<K> &sc) const { // S coords into L2
    Vec<K> out = zero_vec<K>(lie.dim());
    for (std::size_t k = 0; k < ns; ++k)
      out[s_index(k)] = sc[k];
    return out;
  }
  Vec<K> embed_stilde_coords(const Vec<K> &sc) const {
    Vec<K> out = zero_vec<K>(lie.dim());
    for (std::size_t k = 0; k < ns; ++k)
      out[stilde_index(k)] = sc[k];
    return out;
  }
};

template <Scalar K>
KantorLie<K> kantor(const StructurableAlgebra<K> &A, const InstrlBasis<K> &ib) {
  std::size_t n = A.dim();
  KantorLie<K> KL;
  KL.na = n;
  KL.instrl_gens = ib.gens;
  KL.ni = ib.dim();
  KL.s_basis = A.ia.skew_part();
  KL.ns = KL.s_basis.size();

  Echelon<K> sspan(n, true);
  for (std::size_t k = 0; k < KL.ns; ++k)
    sspan.add(SparseVec<K>::from_dense(KL.s_basis[k]), (std::uint32_t)k);
  auto s_coords = [&](const Vec<K> &v, const char *what) {
    auto c = sspan.coords(SparseVec<K>::from_dense(v));
    if (!c)
      throw PreconditionError(std::string("kantor: ") + what +
                              " is not skew-symmetric");
    return c->to_dense(KL.ns);
  };

  VerificationReport rep;
  rep.task = "kantor";
  std::size_t N = 2 * KL.ns + 2 * n + KL.ni;
  rep.add_dim("dim", (long long)N);
  rep.add_dim("dim_S", (long long)KL.ns);
  rep.add_dim("dim_A", (long long)n);
  rep.add_dim("dim_instrl", (long long)KL.ni);

  // basis operators and their epsilon images
  std::vector<Mat<K>> T(KL.ni), Teps(KL.ni);
  std::vector<Vec<K>> Teps_coords(KL.ni);
  for (std::size_t k = 0; k < KL.ni; ++k) {
    auto [i, j] = ib.gens[k];
    T[k] = A.vop(unit_vec<K>(n, i), unit_vec<K>(n, j));
    Teps[k] = A.vop(unit_vec<K>(n, j), unit_vec<K>(n, i)).scaled(K{-1});
    Teps_coords[k] = ib.coords(
        SparseVec<K>::from_dense(Teps[k].flatten()), "V_{y,x} (epsilon)");
  }

  // coordinates of every generator V_{i,j}, reused across blocks
  std::vector<Vec<K>> vcoords(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      vcoords[i * n + j] = ib.coords(A.vop_flat(i, j), "V_{x,y}");

  // epsilon is well-defined on the span: applying it through coordinates
  // agrees with −V_{j,i} for every generator
  SweepAccum epsok;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      epsok.count();
      const Vec<K> &c = vcoords[i * n + j];
      Vec<K> via = zero_vec<K>(KL.ni);
      for (std::size_t k = 0; k < KL.ni; ++k)
        if (!c[k].is_zero())
          add_scaled(via, c[k], Teps_coords[k]);
      Vec<K> direct = scaled(vcoords[j * n + i], K{-1});
      if (!(via == direct))
        epsok.violate("epsilon_well_defined", {(long long)i, (long long)j});
    }
  rep.add_item(epsok.into_item("epsilon_well_defined"));

  // L_s L_t = (V_{st,1} − V_{s,t})/2 for all S basis pairs
  SweepAccum lst;
  std::vector<Mat<K>> LsLt(KL.ns * KL.ns);
  for (std::size_t a = 0; a < KL.ns; ++a)
    for (std::size_t b = 0; b < KL.ns; ++b) {
      lst.count();
      Mat<K> ls = A.alg().left_mult(KL.s_basis[a]);
      Mat<K> lt = A.alg().left_mult(KL.s_basis[b]);
      Mat<K> prod = ls.compose(lt);
      Vec<K> st = A.alg().mul(KL.s_basis[a], KL.s_basis[b]);
      Mat<K> vst1 = A.vop(st, A.alg().unit);
      Mat<K> vst = A.vop(KL.s_basis[a], KL.s_basis[b]);
      Mat<K> expect = vst1.sub(vst).scaled(K{1} / K{2});
      if (!(prod == expect))
        lst.violate("LsLt_identity", {(long long)a, (long long)b});
      LsLt[a * KL.ns + b] = std::move(prod);
    }
  rep.add_item(lst.into_item("LsLt_identity"));

  // assemble the bracket table
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < KL.ns; ++k)
    labels.push_back("s" + std::to_string(k + 1) + "~");
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(A.alg().space.labels[i] + "~");
  for (std::size_t k = 0; k < KL.ni; ++k)
    labels.push_back("V(" + A.alg().space.labels[ib.gens[k].first] + "," +
                     A.alg().space.labels[ib.gens[k].second] + ")");
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(A.alg().space.labels[i]);
  for (std::size_t k = 0; k < KL.ns; ++k)
    labels.push_back("s" + std::to_string(k + 1));
  KL.lie = LieAlgebra<K>(Space(std::move(labels)));
  KL.lie.component.assign(N, "");
  for (std::size_t k = 0; k < KL.ns; ++k)
    KL.lie.component[KL.stilde_index(k)] = "S~";
  for (std::size_t i = 0; i < n; ++i)
    KL.lie.component[KL.atilde_index(i)] = "A~";
  for (std::size_t k = 0; k < KL.ni; ++k)
    KL.lie.component[KL.instrl_index(k)] = "Instrl";
  for (std::size_t i = 0; i < n; ++i)
    KL.lie.component[KL.a_index(i)] = "A";
  for (std::size_t k = 0; k < KL.ns; ++k)
    KL.lie.component[KL.s_index(k)] = "S";

  auto conj_vec = [&](const Vec<K> &v) { return A.conj(v); };

  // [T, s] = T(s) + s·conj(T(1)) as an element of S
  auto t_on_s = [&](const Mat<K> &Top, const Vec<K> &s) {
    Vec<K> out = Top.apply(s);
    Vec<K> t1 = Top.apply(A.alg().unit);
    add_scaled(out, K{1}, A.alg().mul(s, conj_vec(t1)));
    return out;
  };

  // block pairs in layout order: S~ | A~ | I | A | S
  // (S~, A~): 0. (S~, I): −(Teps(s) + s·conj(Teps(1)))~.
  for (std::size_t k = 0; k < KL.ns; ++k)
    for (std::size_t m = 0; m < KL.ni; ++m) {
      Vec<K> val = scaled(t_on_s(Teps[m], KL.s_basis[k]), K{-1});
      Vec<K> sc = s_coords(val, "[s~,T]");
      SparseVec<K> out;
      for (std::size_t r = 0; r < KL.ns; ++r)
        if (!sc[r].is_zero())
          out.push((std::uint32_t)KL.stilde_index(r), sc[r]);
      KL.lie.set_bracket(KL.stilde_index(k), KL.instrl_index(m), out);
    }
  // (S~, A): [s~, x] = (s x)~
  for (std::size_t k = 0; k < KL.ns; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Vec<K> sx = A.alg().mul(KL.s_basis[k], unit_vec<K>(n, i));
      SparseVec<K> out;
      for (std::size_t r = 0; r < n; ++r)
        if (!sx[r].is_zero())
          out.push((std::uint32_t)KL.atilde_index(r), sx[r]);
      KL.lie.set_bracket(KL.stilde_index(k), KL.a_index(i), out);
    }
  // (S~, S): [s~, t] = −L_t L_s in Instrl coordinates
  for (std::size_t k = 0; k < KL.ns; ++k)
    for (std::size_t m = 0; m < KL.ns; ++m) {
      Mat<K> op = LsLt[m * KL.ns + k].scaled(K{-1});
      Vec<K> ic = ib.coords(SparseVec<K>::from_dense(op.flatten()), "L_tL_s");
      SparseVec<K> out;
      for (std::size_t r = 0; r < KL.ni; ++r)
        if (!ic[r].is_zero())
          out.push((std::uint32_t)KL.instrl_index(r), ic[r]);
      KL.lie.set_bracket(KL.stilde_index(k), KL.s_index(m), out);
    }
  // (A~, A~): [x~, y~] = 2(x ȳ − y x̄)~
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<K> v = A.alg().mul(unit_vec<K>(n, i), conj_vec(unit_vec<K>(n, j)));
      add_scaled(v, K{-1},
                 A.alg().mul(unit_vec<K>(n, j), conj_vec(unit_vec<K>(n, i))));
      Vec<K> sc = s_coords(scaled(v, K{2}), "[x~,y~]");
      SparseVec<K> out;
      for (std::size_t r = 0; r < KL.ns; ++r)
        if (!sc[r].is_zero())
          out.push((std::uint32_t)KL.stilde_index(r), sc[r]);
      KL.lie.set_bracket(KL.atilde_index(i), KL.atilde_index(j), out);
    }
  // (A~, I): [x~, T] = −(Teps(x))~
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < KL.ni; ++m) {
      Vec<K> v = scaled(Teps[m].apply(unit_vec<K>(n, i)), K{-1});
      SparseVec<K> out;
      for (std::size_t r = 0; r < n; ++r)
        if (!v[r].is_zero())
          out.push((std::uint32_t)KL.atilde_index(r), v[r]);
      KL.lie.set_bracket(KL.atilde_index(i), KL.instrl_index(m), out);
    }
  // (A~, A): [x~, y] = −2 V_{y,x}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<K> &ic = vcoords[j * n + i];
      SparseVec<K> out;
      for (std::size_t r = 0; r < KL.ni; ++r) {
        K c = ic[r] * K{-2};
        if (!c.is_zero())
          out.push((std::uint32_t)KL.instrl_index(r), c);
      }
      KL.lie.set_bracket(KL.atilde_index(i), KL.a_index(j), out);
    }
  // (A~, S): [x~, s] = −s x in A
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < KL.ns; ++m) {
      Vec<K> v = scaled(A.alg().mul(KL.s_basis[m], unit_vec<K>(n, i)), K{-1});
      SparseVec<K> out;
      for (std::size_t r = 0; r < n; ++r)
        if (!v[r].is_zero())
          out.push((std::uint32_t)KL.a_index(r), v[r]);
      KL.lie.set_bracket(KL.atilde_index(i), KL.s_index(m), out);
    }
  // (I, I): operator commutators, closed in the span
  for (std::size_t k = 0; k < KL.ni; ++k)
    for (std::size_t m = k + 1; m < KL.ni; ++m) {
      Mat<K> comm = T[k].commutator(T[m]);
      Vec<K> ic =
          ib.coords(SparseVec<K>::from_dense(comm.flatten()), "[T,T']");
      SparseVec<K> out;
      for (std::size_t r = 0; r < KL.ni; ++r)
        if (!ic[r].is_zero())
          out.push((std::uint32_t)KL.instrl_index(r), ic[r]);
      KL.lie.set_bracket(KL.instrl_index(k), KL.instrl_index(m), out);
    }
  // (I, A): [T, x] = T(x)
  for (std::size_t k = 0; k < KL.ni; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Vec<K> v = T[k].apply(unit_vec<K>(n, i));
      SparseVec<K> out;
      for (std::size_t r = 0; r < n; ++r)
        if (!v[r].is_zero())
          out.push((std::uint32_t)KL.a_index(r), v[r]);
      KL.lie.set_bracket(KL.instrl_index(k), KL.a_index(i), out);
    }
  // (I, S): [T, s] = T(s) + s conj(T(1)) in S
  for (std::size_t k = 0; k < KL.ni; ++k)
    for (std::size_t m = 0; m < KL.ns; ++m) {
      Vec<K> v = t_on_s(T[k], KL.s_basis[m]);
      Vec<K> sc = s_coords(v, "[T,s]");
      SparseVec<K> out;
      for (std::size_t r = 0; r < KL.ns; ++r)
        if (!sc[r].is_zero())
          out.push((std::uint32_t)KL.s_index(r), sc[r]);
      KL.lie.set_bracket(KL.instrl_index(k), KL.s_index(m), out);
    }
  // (A, A): [x, y] = 2(x ȳ − y x̄) in S
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<K> v = A.alg().mul(unit_vec<K>(n, i), conj_vec(unit_vec<K>(n, j)));
      add_scaled(v, K{-1},
                 A.alg().mul(unit_vec<K>(n, j), conj_vec(unit_vec<K>(n, i))));
      Vec<K> sc = s_coords(scaled(v, K{2}), "[x,y]");
      SparseVec<K> out;
      for (std::size_t r = 0; r < KL.ns; ++r)
        if (!sc[r].is_zero())
          out.push((std::uint32_t)KL.s_index(r), sc[r]);
      KL.lie.set_bracket(KL.a_index(i), KL.a_index(j), out);
    }
  // (A, S) and (S, S) and (S~, S~), (S~... ) remaining pairs vanish by grading

  // the missing mixed pair: (A~ block precedes A): [x, y~] = 2V_{x,y} is the
  // negative of what we stored for (A~, A); antisymmetry check below relies
  // on the stored direction only.

  KL.build_report = std::move(rep);
  return KL;
}

template <Scalar K> KantorLie<K> kantor(const StructurableAlgebra<K> &A) {
  return kantor(A, instrl(A));
}

// J-ternary pair (S, A) attached to a skew element s with L_s invertible:
//   a·b = (a(sb) + b(sa))/2,  a•x = a(sx),  <x|y> = x ȳ − y x̄,
//   <x,y,z> = −V_{x,sy}(z).
// The inverse of L_s must itself be a left multiplication L_{s'} with
// s' ∈ S; s' is solved for exactly and is the unit of (S, ·).
template <Scalar K> struct StructurableJT {
  JTernaryAlgebra<K> jt;
  Vec<K> s, sprime;            // elements of A
  std::vector<Vec<K>> s_basis; // J basis inside A
};

template <Scalar K>
StructurableJT<K>
jternary_from_structurable(const StructurableAlgebra<K> &A, const Vec<K> &s,
                           bool certify = true,
                           const SweepPlan &plan = SweepPlan::exhaustive(),
                           unsigned threads = 1) {
  std::size_t n = A.dim();
  StructurableJT<K> out;
  out.s = s;
  out.s_basis = A.ia.skew_part();
  std::size_t ns = out.s_basis.size();

  {
    Echelon<K> sspan(n);
    for (const auto &v : out.s_basis)
      sspan.add(SparseVec<K>::from_dense(v));
    if (!sspan.contains(SparseVec<K>::from_dense(s)))
      throw PreconditionError("jternary_from_structurable: s is not skew");
  }

  Mat<K> Ls = A.alg().left_mult(s);
  Mat<K> Lsi;
  try {
    Lsi = inverse(Ls);
  } catch (const PreconditionError &) {
    throw PreconditionError("jternary_from_structurable: L_s is singular");
  }

  // solve L_{s'} = L_s^{-1} with s' constrained to S
  {
    std::vector<Vec<K>> eq(n * n, Vec<K>(ns, K{}));
    Vec<K> rhs(n * n, K{});
    for (std::size_t k = 0; k < ns; ++k) {
      Mat<K> Lu = A.alg().left_mult(out.s_basis[k]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          eq[r * n + c][k] = Lu.at(r, c);
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        rhs[r * n + c] = Lsi.at(r, c);
    auto sol = solve_exact<K>(std::move(eq), rhs);
    if (!sol.consistent)
      throw PreconditionError(
          "jternary_from_structurable: L_s^{-1} is not L_{s'} for any s' in S");
    out.sprime = zero_vec<K>(n);
    for (std::size_t k = 0; k < ns; ++k)
      add_scaled(out.sprime, (*sol.particular)[k], out.s_basis[k]);
  }

  Echelon<K> sspan(n, true);
  for (std::size_t k = 0; k < ns; ++k)
    sspan.add(SparseVec<K>::from_dense(out.s_basis[k]), (std::uint32_t)k);
  auto s_coords = [&](const Vec<K> &v, const char *what) {
    auto c = sspan.coords(SparseVec<K>::from_dense(v));
    if (!c)
      throw PreconditionError(std::string("jternary_from_structurable: ") +
                              what + " left S");
    return c->to_dense(ns);
  };

  JTernaryAlgebra<K> jt;
  jt.jordan.space = Space::indexed(ns, "a");
  jt.tspace = A.alg().space;
  K half = K{1} / K{2};

  jt.jordan.product = BilinearMap<K>(ns, ns, ns);
  for (std::size_t a = 0; a < ns; ++a) {
    Vec<K> sa = A.alg().mul(s, out.s_basis[a]);
    for (std::size_t b = 0; b < ns; ++b) {
      Vec<K> sb = A.alg().mul(s, out.s_basis[b]);
      Vec<K> prod = A.alg().mul(out.s_basis[a], sb);
      add_scaled(prod, K{1}, A.alg().mul(out.s_basis[b], sa));
      jt.jordan.product.at(a, b) =
          SparseVec<K>::from_dense(scaled(s_coords(prod, "a·b"), half));
    }
  }
  jt.jordan.unit = s_coords(out.sprime, "s'");

  jt.bullet = BilinearMap<K>(ns, n, n);
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      Vec<K> sx = A.alg().product.apply_right_basis(s, x);
      jt.bullet.at(a, x) =
          SparseVec<K>::from_dense(A.alg().mul(out.s_basis[a], sx));
    }

  jt.skew = BilinearMap<K>(n, n, ns);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec<K> v =
          A.alg().mul(unit_vec<K>(n, x), A.conj(unit_vec<K>(n, y)));
      add_scaled(v, K{-1},
                 A.alg().mul(unit_vec<K>(n, y), A.conj(unit_vec<K>(n, x))));
      jt.skew.at(x, y) = SparseVec<K>::from_dense(s_coords(v, "<x|y>"));
    }

  jt.triple = TrilinearMap<K>(n, n, n, n);
  for (std::size_t y = 0; y < n; ++y) {
    Vec<K> sy = A.alg().product.apply_right_basis(s, y);
    for (std::size_t x = 0; x < n; ++x) {
      // −V_{x, sy}(z), bilinear in the middle slot
      for (std::size_t z = 0; z < n; ++z) {
        Vec<K> val = zero_vec<K>(n);
        for (std::size_t k = 0; k < n; ++k)
          if (!sy[k].is_zero())
            add_scaled(val, -sy[k], A.vop_basis(x, k, z));
        jt.triple.at(x, y, z) = SparseVec<K>::from_dense(val);
      }
    }
  }

  if (certify) {
    auto rep = check_jt_axioms(jt, plan, threads);
    if (!rep.passed())
      throw PreconditionError(
          "jternary_from_structurable: constructed pair fails axiom '" +
          (rep.witness ? rep.witness->item : std::string()) + "'");
  }
  out.jt = std::move(jt);
  return out;
}

} // namespace isotype
