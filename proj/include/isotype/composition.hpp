#pragma once

#include "isotype/algebra.hpp"
#include "isotype/report.hpp"

namespace isotype {

// quadratic form stored through its polar Gram matrix B(x,y); N(x) = B(x,x)/2
template <Scalar K> struct QuadraticForm {
  Mat<K> polar;

  K eval(const Vec<K> &x) const {
    K b{};
    for (std::size_t i = 0; i < polar.rows; ++i) {
      if (x[i].is_zero())
        continue;
      for (std::size_t j = 0; j < polar.cols; ++j)
        if (!polar.at(i, j).is_zero() && !x[j].is_zero())
          b += x[i] * polar.at(i, j) * x[j];
    }
    return b / K{2};
  }

  K polar_eval(const Vec<K> &x, const Vec<K> &y) const {
    K b{};
    for (std::size_t i = 0; i < polar.rows; ++i) {
      if (x[i].is_zero())
        continue;
      for (std::size_t j = 0; j < polar.cols; ++j)
        if (!polar.at(i, j).is_zero() && !y[j].is_zero())
          b += x[i] * polar.at(i, j) * y[j];
    }
    return b;
  }
};

// Unital algebra with a multiplicative nondegenerate norm; dims 1, 2, 4, 8.
template <Scalar K> struct CompositionAlgebra {
  Algebra<K> alg;
  LinearMap<K> conj;
  QuadraticForm<K> norm;

  std::size_t dim() const { return alg.dim(); }

  std::vector<Vec<K>> trace_zero() const {
    return eigenspace(conj.to_mat(), K{-1});
  }

  InvolutiveAlgebra<K> involutive() const { return {alg, conj}; }
};

// dim-1 composition algebra: the ground field, identity conjugation, N(x)=x²
template <Scalar K> CompositionAlgebra<K> ground_composition() {
  CompositionAlgebra<K> c;
  c.alg.space = Space({"1"});
  c.alg.product = BilinearMap<K>(1, 1, 1);
  c.alg.product.at(0, 0) = SparseVec<K>::unit(0);
  c.alg.unit = {K{1}};
  c.conj = LinearMap<K>(1, 1);
  c.conj.cols[0] = SparseVec<K>::unit(0);
  c.norm.polar = Mat<K>(1, 1);
  c.norm.polar.at(0, 0) = K{2};
  return c;
}

// Cayley–Dickson doubling: (a,b)(c,d) = (ac + mu·(d̄ b), da + b c̄),
// conjugation (a,b) -> (ā, −b), norm N − mu·N. Doubling an octonion is
// refused (the result would no longer be a composition algebra).
template <Scalar K>
CompositionAlgebra<K> cayley_dickson(const CompositionAlgebra<K> &c, const K &mu) {
  if (mu.is_zero())
    throw PreconditionError("cayley_dickson: mu must be nonzero");
  std::size_t n = c.dim();
  if (n != 1 && n != 2 && n != 4)
    throw PreconditionError(
        "cayley_dickson: doubling is only defined below dimension 8");

  CompositionAlgebra<K> d;
  {
    // the new imaginary unit is named by the doubling level, so labels stay
    // unique across repeated doublings
    std::string unit = "l" + std::to_string(n);
    std::vector<std::string> labels = c.alg.space.labels;
    for (const auto &l : c.alg.space.labels)
      labels.push_back(unit + "·" + l);
    d.alg.space = Space(std::move(labels));
  }
  d.alg.product = BilinearMap<K>(2 * n, 2 * n, 2 * n);

  // (a,b)(c,d) = (ac + mu·(d̄ b), da + b c̄) on basis pairs
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (a_i, 0)(c_j, 0) = (a_i c_j, 0)
      d.alg.product.at(i, j) = c.alg.product.at(i, j);

      // (a_i, 0)(0, d_j) = (0, d_j a_i)
      {
        SparseVec<K> out;
        for (const auto &[k, v] : c.alg.product.at(j, i).terms)
          out.push(k + (std::uint32_t)n, v);
        d.alg.product.at(i, n + j) = out;
      }

      // (0, b_i)(c_j, 0) = (0, b_i · conj(c_j))
      {
        Vec<K> cj_bar = c.conj.cols[j].to_dense(n);
        Vec<K> prod = c.alg.mul(unit_vec<K>(n, i), cj_bar);
        SparseVec<K> out;
        for (std::size_t k = 0; k < n; ++k)
          if (!prod[k].is_zero())
            out.push((std::uint32_t)(n + k), prod[k]);
        d.alg.product.at(n + i, j) = out;
      }

      // (0, b_i)(0, d_j) = (mu·(conj(d_j) b_i), 0)
      {
        Vec<K> dj_bar = c.conj.cols[j].to_dense(n);
        Vec<K> prod = scaled(c.alg.mul(dj_bar, unit_vec<K>(n, i)), mu);
        d.alg.product.at(n + i, n + j) = SparseVec<K>::from_dense(prod);
      }
    }

  d.alg.unit = zero_vec<K>(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    d.alg.unit[i] = c.alg.unit[i];

  d.conj = LinearMap<K>(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    d.conj.cols[i] = c.conj.cols[i];
    d.conj.cols[n + i] = SparseVec<K>::unit((std::uint32_t)(n + i), K{-1});
  }

  d.norm.polar = Mat<K>(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.norm.polar.at(i, j) = c.norm.polar.at(i, j);
      d.norm.polar.at(n + i, n + j) = -(mu * c.norm.polar.at(i, j));
    }
  return d;
}

// split forms over any base field: repeated doubling with mu = 1
template <Scalar K> CompositionAlgebra<K> split_composition(std::size_t dim) {
  CompositionAlgebra<K> c = ground_composition<K>();
  while (c.dim() < dim)
    c = cayley_dickson(c, K{1});
  if (c.dim() != dim)
    throw PreconditionError("split_composition: dimension must be 1, 2, 4, or 8");
  return c;
}

template <Scalar K> CompositionAlgebra<K> split_octonions() {
  CompositionAlgebra<K> c = split_composition<K>(8);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 8; ++i)
    labels.push_back("e" + std::to_string(i));
  c.alg.space = Space(std::move(labels));
  return c;
}

// Structural validation: conjugation is a period-2 anti-automorphism,
// x·x̄ = N(x)·1 (polarized on basis pairs), the norm is nondegenerate, and
// multiplicativity N(xy) = N(x)N(y) holds via its full 4-linear polarization
//   B(xy, x'y') + B(xy', x'y) = B(x,x')·B(y,y')  on all basis quadruples.
template <Scalar K>
VerificationReport check_composition(const CompositionAlgebra<K> &c) {
  VerificationReport rep;
  rep.task = "composition";
  std::size_t n = c.dim();
  rep.add_dim("dim", (long long)n);

  SweepAccum structural;
  structural.count();
  if (n != 1 && n != 2 && n != 4 && n != 8)
    structural.violate("dimension", {(long long)n});
  structural.count();
  if (!c.alg.unit_acts_as_identity())
    structural.violate("unit", {});
  {
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < n; ++i)
      rows.push_back(c.norm.polar.column(i));
    structural.count();
    if (rank_of(rows) != n)
      structural.violate("norm_nondegenerate", {});
  }
  rep.add_item(structural.into_item("structural"));

  SweepAccum conj_ok;
  for (std::size_t i = 0; i < n; ++i) {
    conj_ok.count();
    Vec<K> e = unit_vec<K>(n, i);
    if (c.conj.apply(c.conj.apply(e)) != e)
      conj_ok.violate("conj_period2", {(long long)i});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      conj_ok.count();
      Vec<K> lhs = c.conj.apply(c.alg.mul(unit_vec<K>(n, i), unit_vec<K>(n, j)));
      Vec<K> rhs = c.alg.mul(c.conj.apply(unit_vec<K>(n, j)),
                             c.conj.apply(unit_vec<K>(n, i)));
      if (lhs != rhs)
        conj_ok.violate("conj_antiauto", {(long long)i, (long long)j});
    }
  rep.add_item(conj_ok.into_item("conjugation"));

  SweepAccum nform;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      nform.count();
      // x ȳ + y x̄ = B(x,y)·1
      Vec<K> lhs = c.alg.mul(unit_vec<K>(n, i), c.conj.apply(unit_vec<K>(n, j)));
      add_scaled(lhs, K{1},
                 c.alg.mul(unit_vec<K>(n, j), c.conj.apply(unit_vec<K>(n, i))));
      Vec<K> rhs = scaled(c.alg.unit, c.norm.polar.at(i, j));
      if (lhs != rhs)
        nform.violate("norm_via_conj", {(long long)i, (long long)j});
    }
  rep.add_item(nform.into_item("norm_via_conj"));

  SweepAccum mult;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t yp = 0; yp < n; ++yp) {
          mult.count();
          Vec<K> xy = c.alg.product.at(x, y).to_dense(n);
          Vec<K> xpyp = c.alg.product.at(xp, yp).to_dense(n);
          Vec<K> xyp = c.alg.product.at(x, yp).to_dense(n);
          Vec<K> xpy = c.alg.product.at(xp, y).to_dense(n);
          K lhs = c.norm.polar_eval(xy, xpyp) + c.norm.polar_eval(xyp, xpy);
          K rhs = c.norm.polar.at(x, xp) * c.norm.polar.at(y, yp);
          if (!(lhs == rhs))
            mult.violate("norm_multiplicative",
                         {(long long)x, (long long)xp, (long long)y,
                          (long long)yp});
        }
  rep.add_item(mult.into_item("norm_multiplicative"));

  return rep;
}

} // namespace isotype
