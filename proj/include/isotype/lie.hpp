#pragma once

#include <map>
#include <string>

#include "isotype/maps.hpp"
#include "isotype/parallel.hpp"
#include "isotype/report.hpp"
#include "isotype/solve.hpp"

namespace isotype {

// Lie algebra by structure constants. Brackets are stored for i < j only;
// antisymmetry is structural from there on (validated on ingest when the
// source is a full table).
template <Scalar K> struct LieAlgebra {
  Space space;
  std::vector<SparseVec<K>> table;    // row i*n+j holds [e_i, e_j], i < j
  std::vector<std::string> component; // optional per-basis summand tags

  LieAlgebra() = default;
  explicit LieAlgebra(Space s) : space(std::move(s)) {
    table.assign(space.dim() * space.dim(), SparseVec<K>{});
  }

  std::size_t dim() const { return space.dim(); }

  void set_bracket(std::size_t i, std::size_t j, SparseVec<K> v) {
    if (i >= j)
      throw Error("LieAlgebra::set_bracket expects i < j");
    table[i * dim() + j] = std::move(v);
  }

  // acc += c * [e_i, e_j]
  void add_bracket_into(Vec<K> &acc, const K &c, std::size_t i,
                        std::size_t j) const {
    if (i == j)
      return;
    if (i < j)
      accumulate(acc, c, table[i * dim() + j]);
    else
      accumulate(acc, -c, table[j * dim() + i]);
  }

  Vec<K> bracket_basis(std::size_t i, std::size_t j) const {
    Vec<K> out(dim(), K{});
    add_bracket_into(out, K{1}, i, j);
    return out;
  }

  Vec<K> bracket(const Vec<K> &x, const Vec<K> &y) const {
    Vec<K> out(dim(), K{});
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero())
        continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero())
          continue;
        add_bracket_into(out, x[i] * y[j], i, j);
      }
    }
    return out;
  }

  Mat<K> ad(const Vec<K> &x) const {
    Mat<K> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<K> col(dim(), K{});
      for (std::size_t i = 0; i < dim(); ++i)
        if (!x[i].is_zero())
          add_bracket_into(col, x[i], i, j);
      for (std::size_t i = 0; i < dim(); ++i)
        m.at(i, j) = col[i];
    }
    return m;
  }

  // ingest a full antisymmetric table; returns violations of antisymmetry
  static LieAlgebra from_bilinear(Space s, const BilinearMap<K> &b,
                                  SweepAccum *antisym = nullptr) {
    LieAlgebra lie(std::move(s));
    std::size_t n = lie.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (antisym)
          antisym->count();
        if (i == j) {
          if (antisym && !b.at(i, i).is_zero())
            antisym->violate("antisymmetry", {(long long)i, (long long)i});
          continue;
        }
        SparseVec<K> neg = b.at(j, i).scaled(K{-1});
        if (antisym && !(b.at(i, j) == neg))
          antisym->violate("antisymmetry", {(long long)i, (long long)j});
        lie.table[i * n + j] = b.at(i, j);
      }
    return lie;
  }
};

// Exhaustive Jacobi sweep over basis triples i < j < k (antisymmetry plus
// trilinearity make those the only nontrivial classes). Parallel over the
// leading index; zero tolerance.
template <Scalar K>
VerificationReport check_jacobi(const LieAlgebra<K> &L, unsigned threads = 1) {
  VerificationReport rep;
  rep.task = "jacobi";
  std::size_t n = L.dim();
  rep.add_dim("dim", (long long)n);

  auto chunks = parallel_map_chunks<SweepAccum>(
      n, threads, [&](std::size_t begin, std::size_t end) {
        SweepAccum acc;
        Vec<K> buf(n, K{});
        std::vector<std::uint32_t> touched;
        touched.reserve(64);
        std::vector<char> seen(n, 0);
        auto add_into = [&](const K &c, std::size_t a, std::size_t b) {
          if (a == b)
            return;
          const SparseVec<K> &row =
              a < b ? L.table[a * n + b] : L.table[b * n + a];
          bool flip = a > b;
          for (const auto &[idx, v] : row.terms) {
            buf[idx] += flip ? -(c * v) : c * v;
            if (!seen[idx]) {
              seen[idx] = 1;
              touched.push_back(idx);
            }
          }
        };
        for (std::size_t i = begin; i < end; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            const SparseVec<K> &wij = L.table[i * n + j];
            for (std::size_t k = j + 1; k < n; ++k) {
              acc.count();
              for (const auto &[l, c] : wij.terms)
                add_into(c, l, k);
              for (const auto &[l, c] : L.table[j * n + k].terms)
                add_into(c, l, i);
              for (const auto &[l, c] : L.table[i * n + k].terms)
                add_into(-c, l, j);
              bool ok = true;
              for (auto idx : touched)
                if (!buf[idx].is_zero()) {
                  ok = false;
                  break;
                }
              if (!ok)
                acc.violate("jacobi",
                            {(long long)i, (long long)j, (long long)k});
              for (auto idx : touched) {
                buf[idx] = K{};
                seen[idx] = 0;
              }
              touched.clear();
            }
          }
        return acc;
      });
  SweepAccum merged;
  for (const auto &c : chunks)
    merged.merge(c);
  rep.add_item(merged.into_item("jacobi"));
  return rep;
}

// exact trace form K(x,y) = tr(ad x ∘ ad y) on basis pairs
template <Scalar K> Mat<K> killing_form(const LieAlgebra<K> &L) {
  std::size_t n = L.dim();
  Mat<K> kf(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      K val{};
      for (std::size_t k = 0; k < n; ++k) {
        // coefficient of e_k in [e_i, [e_j, e_k]]
        if (j != k) {
          const SparseVec<K> &w =
              j < k ? L.table[j * n + k] : L.table[k * n + j];
          bool flip = j > k;
          for (const auto &[l, c] : w.terms) {
            if (l == i)
              continue;
            const SparseVec<K> &w2 =
                i < l ? L.table[i * n + l] : L.table[l * n + i];
            K coeff = w2.coeff((std::uint32_t)k);
            if (!coeff.is_zero()) {
              K term = c * coeff;
              if (flip != (i > l)) // exactly one flip
                term = -term;
              val += term;
            }
          }
        }
      }
      kf.at(i, j) = val;
      kf.at(j, i) = val;
    }
  return kf;
}

template <Scalar K> std::vector<Vec<K>> center(const LieAlgebra<K> &L) {
  std::size_t n = L.dim();
  std::vector<Vec<K>> rows;
  rows.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) {
      Vec<K> row(n, K{});
      for (std::size_t i = 0; i < n; ++i) {
        // coefficient of e_r in [e_i, e_j]
        if (i == j)
          continue;
        const SparseVec<K> &w = i < j ? L.table[i * n + j] : L.table[j * n + i];
        K c = w.coeff((std::uint32_t)r);
        row[i] = i < j ? c : -c;
      }
      rows.push_back(std::move(row));
    }
  return solve_exact<K>(std::move(rows), zero_vec<K>(n * n)).nullspace;
}

template <Scalar K>
std::vector<Vec<K>> derived_subalgebra(const LieAlgebra<K> &L) {
  std::size_t n = L.dim();
  Echelon<K> span(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      span.add(L.table[i * n + j]);
  std::vector<Vec<K>> out;
  for (const auto &row : span.basis())
    out.push_back(row.to_dense(n));
  return out;
}

template <Scalar K> struct Sl2Triple {
  Vec<K> e, h, f;
};

template <Scalar K>
bool is_sl2_triple(const LieAlgebra<K> &L, const Sl2Triple<K> &t) {
  return L.bracket(t.e, t.f) == t.h &&
         L.bracket(t.h, t.e) == scaled(t.e, K{2}) &&
         L.bracket(t.h, t.f) == scaled(t.f, K{-2});
}

// integer-graded decomposition (ad-H eigenspaces)
template <Scalar K> struct Grading {
  std::map<int, std::vector<Vec<K>>> pieces;

  std::size_t total_dim() const {
    std::size_t d = 0;
    for (const auto &[w, basis] : pieces)
      d += basis.size();
    return d;
  }
};

// 5-grading from an sl2 pair: L_i = {X | [H,X] = iX}, i in [-2,2], H = [E,F].
// Errors if the eigenspaces do not exhaust L (some other eigenvalue occurs).
template <Scalar K>
Grading<K> five_grading(const LieAlgebra<K> &L, const Vec<K> &E,
                        const Vec<K> &F) {
  Vec<K> H = L.bracket(E, F);
  Sl2Triple<K> t{E, H, F};
  if (!is_sl2_triple(L, t))
    throw PreconditionError("five_grading: (E, [E,F], F) is not an sl2 triple");
  Mat<K> adH = L.ad(H);
  Grading<K> g;
  std::size_t total = 0;
  for (int w = -2; w <= 2; ++w) {
    auto basis = eigenspace(adH, K{(long long)w});
    total += basis.size();
    g.pieces[w] = std::move(basis);
  }
  if (total != L.dim())
    throw PreconditionError(
        "five_grading: ad H has eigenvalues outside [-2,2]; the grading is "
        "not short");
  return g;
}

// [L_i, L_j] ⊆ L_{i+j} on all basis pairs of all pieces
template <Scalar K>
VerificationReport check_grading_compat(const LieAlgebra<K> &L,
                                        const Grading<K> &g) {
  VerificationReport rep;
  rep.task = "grading_compat";
  std::map<int, Echelon<K>> spans;
  for (const auto &[w, basis] : g.pieces) {
    Echelon<K> span(L.dim());
    for (const auto &v : basis)
      span.add(SparseVec<K>::from_dense(v));
    spans.emplace(w, std::move(span));
  }
  SweepAccum acc;
  for (const auto &[w1, basis1] : g.pieces)
    for (const auto &[w2, basis2] : g.pieces)
      for (std::size_t i = 0; i < basis1.size(); ++i)
        for (std::size_t j = 0; j < basis2.size(); ++j) {
          acc.count();
          Vec<K> br = L.bracket(basis1[i], basis2[j]);
          auto it = spans.find(w1 + w2);
          bool ok = it == spans.end()
                        ? is_zero_vec(br)
                        : it->second.contains(SparseVec<K>::from_dense(br));
          if (!ok)
            acc.violate("grading_compat",
                        {(long long)w1, (long long)w2, (long long)i,
                         (long long)j});
        }
  rep.add_item(acc.into_item("grading_compat"));
  for (const auto &[w, basis] : g.pieces)
    rep.add_dim("dim_L" + std::to_string(w), (long long)basis.size());
  return rep;
}

} // namespace isotype
