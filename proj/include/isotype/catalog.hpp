#pragma once

#include "isotype/composition.hpp"
#include "isotype/decompose.hpp"
#include "isotype/hermitian.hpp"
#include "isotype/structurable.hpp"

namespace isotype {

// A = C1 ⊗ C2 for a Cayley algebra C1 and a unital composition algebra C2,
// with the tensor-product involution. The skew part is S1⊗1 + 1⊗S2.
template <Scalar K> struct TensorStructurable {
  StructurableAlgebra<K> str;
  CompositionAlgebra<K> c1, c2;

  std::size_t dim1() const { return c1.dim(); }
  std::size_t dim2() const { return c2.dim(); }

  // A index of e_i ⊗ f_j
  std::size_t index(std::size_t i, std::size_t j) const {
    return i * c2.dim() + j;
  }

  // C1 / C2 parts of an element of S = S1 ⊕ S2
  Vec<K> c1_part(const Vec<K> &a) const {
    Vec<K> out = zero_vec<K>(dim1());
    for (std::size_t i = 1; i < dim1(); ++i)
      out[i] = a[index(i, 0)];
    return out;
  }
  Vec<K> c2_part(const Vec<K> &a) const {
    Vec<K> out = zero_vec<K>(dim2());
    for (std::size_t j = 1; j < dim2(); ++j)
      out[j] = a[index(0, j)];
    return out;
  }
};

template <Scalar K>
TensorStructurable<K> tensor_structurable(CompositionAlgebra<K> c1,
                                          CompositionAlgebra<K> c2) {
  if (c1.dim() != 8)
    throw PreconditionError("tensor_structurable: C1 must be an octonion algebra");
  if (c2.dim() != 1 && c2.dim() != 2 && c2.dim() != 4 && c2.dim() != 8)
    throw PreconditionError("tensor_structurable: dim C2 must be 1, 2, 4, or 8");
  TensorStructurable<K> t;
  InvolutiveAlgebra<K> ia;
  ia.alg = tensor_algebra(c1.alg, c2.alg);
  ia.invol = tensor_involution(c1.conj, c2.conj);
  t.str = make_structurable(std::move(ia));
  t.c1 = std::move(c1);
  t.c2 = std::move(c2);
  return t;
}

// Albert form data on S = S1 ⊕ S2 relative to a reference element s ∈ S1
// with ν1(s) ≠ 0:
//   Q(s1+s2) = (ν1(s1) − ν2(s2)) / ν1(s),  (s1+s2)# = ν1(s)(s1−s2),
//   c = −s/ν1(s),  Q~ = ν1(s)²·Q  (so Q~(c) = 1 exactly).
template <Scalar K> struct AlbertData {
  Vec<K> s; // in A coordinates
  K nu1_s;
  Vec<K> c_coords;             // basepoint in S coordinates
  std::vector<Vec<K>> s_basis; // basis of S inside A
  Mat<K> q_polar;              // polarization of Q on S coordinates
  Mat<K> qt_polar;             // polarization of Q~ = ν1(s)²·Q
  LinearMap<K> sharp;          // on S coordinates

  K q(const Vec<K> &u) const {
    K b{};
    for (std::size_t i = 0; i < q_polar.rows; ++i)
      for (std::size_t j = 0; j < q_polar.cols; ++j)
        if (!q_polar.at(i, j).is_zero())
          b += u[i] * q_polar.at(i, j) * u[j];
    return b / K{2};
  }
  K qt(const Vec<K> &u) const { return q(u) * nu1_s * nu1_s; }
  K qt_pair(const Vec<K> &u, const Vec<K> &v) const {
    K b{};
    for (std::size_t i = 0; i < qt_polar.rows; ++i)
      for (std::size_t j = 0; j < qt_polar.cols; ++j)
        if (!qt_polar.at(i, j).is_zero())
          b += u[i] * qt_polar.at(i, j) * v[j];
    return b;
  }
};

template <Scalar K>
AlbertData<K> albert_data(const TensorStructurable<K> &ts, const Vec<K> &s) {
  const auto &A = ts.str;
  std::size_t n = A.dim();
  AlbertData<K> ad;
  ad.s = s;

  // s must lie in S1 ⊗ 1 with nonzero norm
  for (std::size_t i = 0; i < ts.dim1(); ++i)
    for (std::size_t j = 1; j < ts.dim2(); ++j)
      if (!s[ts.index(i, j)].is_zero())
        throw PreconditionError("albert_data: s must lie in S1 ⊗ 1");
  Vec<K> s1 = ts.c1_part(s);
  if (!s[ts.index(0, 0)].is_zero())
    throw PreconditionError("albert_data: s must be trace-zero");
  ad.nu1_s = ts.c1.norm.eval(s1);
  if (ad.nu1_s.is_zero())
    throw PreconditionError("albert_data: ν1(s) must be nonzero");

  ad.s_basis = A.ia.skew_part();
  std::size_t ns = ad.s_basis.size();

  Echelon<K> sspan(n, true);
  for (std::size_t k = 0; k < ns; ++k)
    sspan.add(SparseVec<K>::from_dense(ad.s_basis[k]), (std::uint32_t)k);
  auto s_coords = [&](const Vec<K> &v) {
    auto c = sspan.coords(SparseVec<K>::from_dense(v));
    if (!c)
      throw PreconditionError("albert_data: element left S");
    return c->to_dense(ns);
  };

  ad.c_coords = s_coords(scaled(s, -(K{1} / ad.nu1_s)));

  ad.q_polar = Mat<K>(ns, ns);
  ad.sharp = LinearMap<K>(ns, ns);
  for (std::size_t a = 0; a < ns; ++a) {
    Vec<K> ua1 = ts.c1_part(ad.s_basis[a]);
    Vec<K> ua2 = ts.c2_part(ad.s_basis[a]);
    for (std::size_t b = 0; b < ns; ++b) {
      Vec<K> ub1 = ts.c1_part(ad.s_basis[b]);
      Vec<K> ub2 = ts.c2_part(ad.s_basis[b]);
      K val = (ts.c1.norm.polar_eval(ua1, ub1) -
               ts.c2.norm.polar_eval(ua2, ub2)) /
              ad.nu1_s;
      ad.q_polar.at(a, b) = val;
    }
    // sharp: ν1(s)·(u1 − u2) back in S coordinates
    Vec<K> img = zero_vec<K>(n);
    for (std::size_t i = 1; i < ts.dim1(); ++i)
      img[ts.index(i, 0)] = ua1[i] * ad.nu1_s;
    for (std::size_t j = 1; j < ts.dim2(); ++j)
      img[ts.index(0, j)] = -(ua2[j] * ad.nu1_s);
    ad.sharp.cols[a] = SparseVec<K>::from_dense(s_coords(img));
  }
  ad.qt_polar = ad.q_polar.scaled(ad.nu1_s * ad.nu1_s);
  return ad;
}

// The quadratic-factor law of the Prop-4.2 Jordan algebra (S, ·):
//   a·b = (Q~(a,c)b + Q~(b,c)a − Q~(a,b)c)/2  (gating, full polarization),
// plus Q~(c) = 1, Q(s) = 1, the printed unnormalized variant
// a² = Q(a,c)c − Q(a)c (informational), and the Clifford action property
//   a•(b•x) + b•(a•x) = −Q~(a,b)x for a,b ⊥ c (gating).
template <Scalar K>
VerificationReport verify_quadratic_factor(const AlbertData<K> &ad,
                                           const StructurableJT<K> &sjt) {
  VerificationReport rep;
  rep.task = "albert";
  const auto &jt = sjt.jt;
  std::size_t ns = jt.dim_j(), nt = jt.dim_t();
  rep.add_dim("dim_S", (long long)ns);
  rep.add_dim("dim_A", (long long)nt);
  rep.add_note("normalization: Q~ = ν1(s)²·Q with ν1(s) = " + ad.nu1_s.str());

  SweepAccum base;
  base.count();
  if (!(ad.qt(ad.c_coords) == K{1}))
    base.violate("Qt_c_is_1", {});
  base.count();
  if (!(jt.jordan.unit == ad.c_coords))
    base.violate("unit_is_c", {});
  base.count();
  {
    // Q(s) = 1 for the reference element itself
    Echelon<K> sspan(sjt.s.size(), true);
    for (std::size_t k = 0; k < ns; ++k)
      sspan.add(SparseVec<K>::from_dense(ad.s_basis[k]), (std::uint32_t)k);
    auto c = sspan.coords(SparseVec<K>::from_dense(ad.s));
    if (!c || !(ad.q(c->to_dense(ns)) == K{1}))
      base.violate("Q_s_is_1", {});
  }
  base.count();
  {
    std::vector<Vec<K>> rows;
    for (std::size_t j = 0; j < ns; ++j)
      rows.push_back(ad.qt_polar.column(j));
    if (rank_of(rows) != ns)
      base.violate("Q_nondegenerate", {});
  }
  rep.add_item(base.into_item("albert_base"));

  K half = K{1} / K{2};
  SweepAccum law;
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b) {
      law.count();
      Vec<K> ea = unit_vec<K>(ns, a), eb = unit_vec<K>(ns, b);
      Vec<K> lhs = jt.jordan.product.at(a, b).to_dense(ns);
      Vec<K> rhs = scaled(eb, ad.qt_pair(ea, ad.c_coords));
      add_scaled(rhs, ad.qt_pair(eb, ad.c_coords), ea);
      add_scaled(rhs, -ad.qt_pair(ea, eb), ad.c_coords);
      if (!(lhs == scaled(rhs, half)))
        law.violate("quadratic_factor_law", {(long long)a, (long long)b});
    }
  rep.add_item(law.into_item("quadratic_factor_law"));

  SweepAccum printed;
  for (std::size_t a = 0; a < ns; ++a) {
    printed.count();
    Vec<K> ea = unit_vec<K>(ns, a);
    Vec<K> sq = jt.jordan.product.at(a, a).to_dense(ns);
    // as printed: Q(a,c)c − Q(a)c, with the unnormalized Q
    K qac{};
    for (std::size_t j = 0; j < ns; ++j)
      qac += ad.q_polar.at(a, j) * ad.c_coords[j];
    Vec<K> rhs = scaled(ad.c_coords, qac - ad.q(ea));
    if (!(sq == rhs))
      printed.violate("eq4.9_printed", {(long long)a});
  }
  rep.add_item(printed.into_item("eq4.9_printed", true));
  rep.add_note(std::string("eq4.9 printed form (Q(a,c)c − Q(a)c): ") +
               (printed.violations == 0 ? "holds" : "fails"));

  // Clifford action property on (Fc)^⊥, polarized
  {
    std::vector<Vec<K>> row(1, Vec<K>(ns, K{}));
    for (std::size_t j = 0; j < ns; ++j)
      row[0][j] = ad.qt_pair(unit_vec<K>(ns, j), ad.c_coords);
    auto perp = solve_exact<K>(std::move(row), zero_vec<K>(1)).nullspace;
    SweepAccum cliff;
    for (std::size_t a = 0; a < perp.size(); ++a)
      for (std::size_t b = a; b < perp.size(); ++b) {
        K qab = ad.qt_pair(perp[a], perp[b]);
        for (std::size_t x = 0; x < nt; ++x) {
          cliff.count();
          Vec<K> bx = jt.bullet.apply_right_basis(perp[b], x);
          Vec<K> ax = jt.bullet.apply_right_basis(perp[a], x);
          Vec<K> lhs = vec_add(jt.bullet.apply(perp[a], bx),
                               jt.bullet.apply(perp[b], ax));
          Vec<K> rhs = scaled(unit_vec<K>(nt, x), -qab);
          if (!(lhs == rhs))
            cliff.violate("clifford_action",
                          {(long long)a, (long long)b, (long long)x});
        }
      }
    rep.add_item(cliff.into_item("clifford_action"));
  }
  return rep;
}

// Catalog pipeline for the exceptional series: A = C1 ⊗ C2 with
// dim C2 = 1, 2, 4, 8, reference element s = first S1 basis vector of norm
// 1, idempotent e = (c+u)/2 for u the first basis vector of (Fc)^⊥ ∩ S1
// with Q~(u) = −1.
template <Scalar K> struct ExceptionalSeries {
  TensorStructurable<K> algebra;
  StructurableJT<K> jt;
  AlbertData<K> albert;
  Vec<K> idempotent; // in J = S coordinates
  VerificationReport structurable_report;
  std::optional<KantorLie<K>> kantor_lie;
};

template <Scalar K>
ExceptionalSeries<K> exceptional_series(std::size_t c2_dim,
                                        bool build_kantor = true,
                                        unsigned threads = 1) {
  ExceptionalSeries<K> out;
  out.algebra = tensor_structurable(split_octonions<K>(),
                                    split_composition<K>(c2_dim));
  const auto &ts = out.algebra;
  std::size_t n = ts.str.dim();

  // defining identity: exhaustive through dim 16, seeded sample above
  SweepPlan splan = n <= 16 ? SweepPlan::exhaustive()
                            : SweepPlan::sample(20000, 0x150701);
  out.structurable_report = check_structurable(ts.str, splan, threads);
  if (!out.structurable_report.passed())
    throw PreconditionError("exceptional_series: V-operator identity failed");

  // s: first S1 basis vector with ν1 = 1
  Vec<K> s;
  for (std::size_t i = 1; i < 8; ++i) {
    Vec<K> cand = unit_vec<K>(8, i);
    if (ts.c1.norm.eval(cand) == K{1}) {
      s = zero_vec<K>(n);
      s[ts.index(i, 0)] = K{1};
      break;
    }
  }
  if (s.empty())
    throw PreconditionError("exceptional_series: no norm-1 trace-zero element");

  SweepPlan jtplan = c2_dim <= 2 ? SweepPlan::exhaustive()
                                 : SweepPlan::sample(100000, 0x150702);
  out.jt = jternary_from_structurable(ts.str, s, true, jtplan, threads);
  out.albert = albert_data(ts, s);

  // u: first basis vector of (Fc)^⊥ ∩ S1 with Q~(u) = −1
  std::size_t ns = out.jt.jt.dim_j();
  Vec<K> u;
  for (std::size_t k = 0; k < ns; ++k) {
    // S1 membership: the basis vector has no C2 component
    if (!is_zero_vec(ts.c2_part(out.albert.s_basis[k])))
      continue;
    Vec<K> cand = unit_vec<K>(ns, k);
    if (!out.albert.qt_pair(cand, out.albert.c_coords).is_zero())
      continue;
    if (out.albert.qt(cand) == K{-1}) {
      u = cand;
      break;
    }
  }
  if (u.empty())
    throw PreconditionError(
        "exceptional_series: no norm −1 vector in (Fc)^⊥ ∩ S1");
  out.idempotent = scaled(vec_add(out.albert.c_coords, u), K{1} / K{2});

  if (build_kantor)
    out.kantor_lie = kantor(ts.str);
  return out;
}

// product-by-product agreement between the direct Prop-4.2 pair and the pair
// extracted from the 5-grading of the Kantor algebra at (E,F) = (s', s~)
template <Scalar K>
bool structurable_consistency(const KantorLie<K> &KL,
                              const StructurableJT<K> &sjt) {
  std::size_t n = sjt.s.size();
  Echelon<K> sspan(n, true);
  for (std::size_t k = 0; k < KL.s_basis.size(); ++k)
    sspan.add(SparseVec<K>::from_dense(KL.s_basis[k]), (std::uint32_t)k);
  auto coords = [&](const Vec<K> &v) {
    auto c = sspan.coords(SparseVec<K>::from_dense(v));
    if (!c)
      throw PreconditionError("structurable_consistency: element left S");
    return c->to_dense(KL.s_basis.size());
  };
  Vec<K> E = KL.embed_s_coords(coords(sjt.sprime));
  Vec<K> F = KL.embed_stilde_coords(coords(sjt.s));
  auto graded = jternary_from_5grading(KL.lie, E, F);

  const auto &a = graded.jt;
  const auto &b = sjt.jt;
  if (a.dim_j() != b.dim_j() || a.dim_t() != b.dim_t())
    return false;
  if (a.jordan.unit != b.jordan.unit)
    return false;
  for (std::size_t i = 0; i < a.dim_j(); ++i)
    for (std::size_t j = 0; j < a.dim_j(); ++j)
      if (!(a.jordan.product.at(i, j) == b.jordan.product.at(i, j)))
        return false;
  for (std::size_t i = 0; i < a.dim_j(); ++i)
    for (std::size_t x = 0; x < a.dim_t(); ++x)
      if (!(a.bullet.at(i, x) == b.bullet.at(i, x)))
        return false;
  for (std::size_t x = 0; x < a.dim_t(); ++x)
    for (std::size_t y = 0; y < a.dim_t(); ++y)
      if (!(a.skew.at(x, y) == b.skew.at(x, y)))
        return false;
  for (std::size_t x = 0; x < a.dim_t(); ++x)
    for (std::size_t y = 0; y < a.dim_t(); ++y)
      for (std::size_t z = 0; z < a.dim_t(); ++z)
        if (!(a.triple.at(x, y, z) == b.triple.at(x, y, z)))
          return false;
  return true;
}

// Curated small catalog used by the verification suites: every entry carries
// a certified pair, the reference ambient dimension where one exists, and
// the catalog idempotent when the Jordan algebra has a proper one.
template <Scalar K> struct CatalogEntry {
  std::string name;
  JTernaryAlgebra<K> jt;
  std::optional<Vec<K>> idempotent;
  long long reference_dim = 0; // 0 = no reference
};

template <Scalar K>
std::vector<CatalogEntry<K>> catalog_small(unsigned threads = 1) {
  std::vector<CatalogEntry<K>> out;
  auto add_h = [&](HermitianExample<K> ex) {
    out.push_back({ex.name, ex.proto.jt, ex.idempotent, ex.reference_dim});
  };
  add_h(gl_example<K>(1, 1, true, SweepPlan::exhaustive(), threads));
  add_h(gl_example<K>(2, 1, true, SweepPlan::exhaustive(), threads));
  add_h(gl_example<K>(2, 2, true, SweepPlan::exhaustive(), threads));
  add_h(sp_example<K>(1, 2, true, SweepPlan::exhaustive(), threads));
  add_h(sp_example<K>(2, 2, true, SweepPlan::exhaustive(), threads));
  add_h(so_example<K>(2, 1, true, SweepPlan::exhaustive(), threads));
  add_h(so_example<K>(2, 3, true, SweepPlan::exhaustive(), threads));
  add_h(so_example<K>(4, 1, true, SweepPlan::exhaustive(), threads));
  {
    auto f4 = exceptional_series<K>(1, false, threads);
    out.push_back({"F4-pair", f4.jt.jt, f4.idempotent, 52});
  }
  {
    auto e6 = exceptional_series<K>(2, false, threads);
    out.push_back({"E6-pair", e6.jt.jt, e6.idempotent, 78});
  }
  return out;
}

} // namespace isotype
