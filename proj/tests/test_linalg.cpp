#include <catch2/catch_amalgamated.hpp>

#include "isotype/maps.hpp"
#include "isotype/sampling.hpp"
#include "isotype/solve.hpp"
#include "isotype/space.hpp"

using namespace isotype;
using R = Rational;

namespace {

// independent oracle: plain fraction Gauss with last-row pivoting, only used
// to cross-check ranks computed by the library path
std::size_t oracle_rank(std::vector<Vec<R>> rows) {
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = rows.size();
    for (std::size_t r = rows.size(); r-- > rank;) // last-row tie-break
      if (!rows[r][col].is_zero())
        sel = r;
    if (sel == rows.size())
      continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero())
        continue;
      R c = rows[r][col] / rows[rank][col];
      for (std::size_t j = 0; j < n; ++j)
        rows[r][j] -= c * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace

TEST_CASE("tensor space conventions", "[linalg]") {
  Space u = Space::indexed(2, "u");
  Space v = Space::indexed(3, "v");
  Space t = tensor_space(u, v);
  REQUIRE(t.dim() == 6);
  CHECK(t.labels[0] == "u1⊗v1");
  CHECK(t.labels[1] == "u1⊗v2");
  CHECK(t.labels[3] == "u2⊗v1"); // left-factor-major
  CHECK(tensor_index(u, v, 1, 0) == 3);

  Space z = Space::indexed(0, "z");
  CHECK(tensor_space(z, v).dim() == 0);

  // sl(V) ⊗ J with dim J = 1
  CHECK(tensor_space(Space::indexed(3, "f"), Space::indexed(1, "a")).dim() == 3);

  CHECK_THROWS_AS(Space({"a", "a"}), Error);
}

TEST_CASE("apply_bilinear on the symplectic gamma map", "[linalg]") {
  // V with symplectic basis {p,q}, (p|q)=1; gamma_{u,v}(w) = (u|w)v + (v|w)u
  // encoded as V x V -> gl(V), gl(V) flattened row-major (2x2)
  BilinearMap<R> gamma(2, 2, 4);
  auto skew = [](std::size_t a, std::size_t b) -> R {
    if (a == 0 && b == 1)
      return R(1);
    if (a == 1 && b == 0)
      return R(-1);
    return R(0);
  };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t w = 0; w < 2; ++w) {
        // gamma_{ei,ej}(e_w) = (ei|e_w) ej + (ej|e_w) ei
        R ci = skew(i, w), cj = skew(j, w);
        if (!cj.is_zero())
          gamma.set(i, j, i * 2 + w, cj); // coefficient of ei in column w
        if (!ci.is_zero())
          gamma.set(i, j, j * 2 + w, ci);
      }

  Vec<R> p{R(1), R(0)}, q{R(0), R(1)};
  Vec<R> gpp = gamma.apply(p, p);
  // gamma_{p,p} = 2E: E(q) = p in matrix form [[0,1],[0,0]]
  CHECK(gpp == Vec<R>{R(0), R(2), R(0), R(0)});

  Mat<R> half(2, 2);
  half.at(0, 1) = gpp[1] / R(2);
  CHECK(half.apply(q) == p);

  // any B with u = 0 gives 0
  CHECK(is_zero_vec(gamma.apply(zero_vec<R>(2), q)));

  // bilinearity on random exact inputs
  SplitMix64 rng(7);
  for (int it = 0; it < 50; ++it) {
    R alpha((long long)(rng.next() % 19) - 9, (long long)(rng.next() % 7) + 1);
    Vec<R> u2{R((long long)(rng.next() % 9) - 4), R((long long)(rng.next() % 9) - 4)};
    Vec<R> u3{R((long long)(rng.next() % 9) - 4), R((long long)(rng.next() % 9) - 4)};
    Vec<R> v2{R((long long)(rng.next() % 9) - 4), R((long long)(rng.next() % 9) - 4)};
    Vec<R> lhs = gamma.apply(vec_add(scaled(u2, alpha), u3), v2);
    Vec<R> rhs = vec_add(scaled(gamma.apply(u2, v2), alpha), gamma.apply(u3, v2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("matrix units multiply as expected", "[linalg]") {
  // associative product on 2x2 matrices: basis E11,E12,E21,E22
  BilinearMap<R> prod(4, 4, 4);
  auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          if (j == k)
            prod.set(idx(i, j), idx(k, l), idx(i, l), R(1));

  Vec<R> e12 = unit_vec<R>(4, idx(0, 1)), e21 = unit_vec<R>(4, idx(1, 0));
  CHECK(prod.apply(e12, e21) == unit_vec<R>(4, idx(0, 0))); // E12*E21 = E11
}

TEST_CASE("solve_exact frozen examples", "[linalg]") {
  auto r1 = solve_exact<R>({{R(1), R(0)}, {R(0), R(1)}});
  CHECK(r1.rank == 2);

  auto r2 = solve_exact<R>({{R(2), R(4)}, {R(1), R(2)}});
  CHECK(r2.rank == 1);
  REQUIRE(r2.row_basis.size() == 1);
  CHECK(r2.row_basis[0] == Vec<R>{R(1), R(2)});

  // eigenspace of L_e, e = E11, in the 2x2 matrix Jordan algebra:
  // L_e on basis (E11,E12,E21,E22) is diag(1, 1/2, 1/2, 0)
  Mat<R> Le(4, 4);
  Le.at(0, 0) = R(1);
  Le.at(1, 1) = R(1, 2);
  Le.at(2, 2) = R(1, 2);
  auto eig = eigenspace(Le, R(1, 2));
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == unit_vec<R>(4, 1)); // E12
  CHECK(eig[1] == unit_vec<R>(4, 2)); // E21

  // independent elimination oracle agrees on rank of (Le - 1/2)
  Mat<R> A(Le);
  for (int i = 0; i < 4; ++i)
    A.at(i, i) -= R(1, 2);
  std::vector<Vec<R>> rows;
  for (int i = 0; i < 4; ++i) {
    rows.push_back({});
    for (int j = 0; j < 4; ++j)
      rows.back().push_back(A.at(i, j));
  }
  CHECK(oracle_rank(rows) == 2);
}

TEST_CASE("inconsistent systems are distinct from unique solutions", "[linalg]") {
  auto ok = solve_exact<R>({{R(1), R(0)}, {R(0), R(1)}}, Vec<R>{R(1), R(2)});
  CHECK(ok.consistent);
  REQUIRE(ok.particular.has_value());
  CHECK(*ok.particular == Vec<R>{R(1), R(2)});
  CHECK(ok.nullspace.empty()); // empty solution space of the homogeneous part

  auto bad = solve_exact<R>({{R(1), R(0)}, {R(2), R(0)}}, Vec<R>{R(0), R(1)});
  CHECK_FALSE(bad.consistent);
  CHECK_FALSE(bad.particular.has_value());
}

TEST_CASE("solve_exact is idempotent on its own output", "[linalg]") {
  SplitMix64 rng(3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Vec<R>> rows;
    for (int r = 0; r < 5; ++r) {
      Vec<R> row;
      for (int c = 0; c < 4; ++c)
        row.push_back(R((long long)(rng.next() % 7) - 3));
      rows.push_back(row);
    }
    auto res = solve_exact<R>(rows);
    auto again = solve_exact<R>(res.row_basis);
    CHECK(again.rank == res.rank);
    CHECK(again.rank == res.row_basis.size()); // rank equals pivot-row count
    CHECK(again.row_basis == res.row_basis);   // RREF is canonical
    CHECK(oracle_rank(rows) == res.rank);
  }
}

TEST_CASE("echelon with history recovers coordinates", "[linalg]") {
  Echelon<R> ech(3, true);
  Vec<R> g0{R(1), R(1), R(0)}, g1{R(0), R(1), R(1)}, g2{R(1), R(2), R(1)};
  CHECK(ech.add(SparseVec<R>::from_dense(g0), 0));
  CHECK(ech.add(SparseVec<R>::from_dense(g1), 1));
  CHECK_FALSE(ech.add(SparseVec<R>::from_dense(g2), 2)); // g2 = g0 + g1
  CHECK(ech.rank() == 2);

  auto c = ech.coords(SparseVec<R>::from_dense(Vec<R>{R(2), R(5), R(3)}));
  REQUIRE(c.has_value());
  // 2*g0 + 3*g1
  Vec<R> recon = zero_vec<R>(3);
  add_scaled(recon, c->coeff(0), g0);
  add_scaled(recon, c->coeff(1), g1);
  CHECK(recon == Vec<R>{R(2), R(5), R(3)});

  CHECK_FALSE(ech.contains(SparseVec<R>::from_dense(Vec<R>{R(0), R(0), R(1)})));
}

TEST_CASE("matrix inverse round trip", "[linalg]") {
  Mat<R> m(3, 3);
  m.at(0, 0) = R(2);
  m.at(0, 1) = R(1);
  m.at(1, 1) = R(1, 2);
  m.at(1, 2) = R(-1);
  m.at(2, 0) = R(1);
  m.at(2, 2) = R(3);
  Mat<R> mi = inverse(m);
  CHECK(m.compose(mi) == Mat<R>::identity(3));
  CHECK(mi.compose(m) == Mat<R>::identity(3));

  Mat<R> sing(2, 2);
  sing.at(0, 0) = R(1);
  sing.at(1, 0) = R(2);
  CHECK_THROWS_AS(inverse(sing), PreconditionError);
}

TEST_CASE("solve_exact over a prime field", "[linalg]") {
  auto res = solve_exact<Fp>({{Fp(2, 7), Fp(4, 7)}, {Fp(1, 7), Fp(2, 7)}});
  CHECK(res.rank == 1);
  CHECK(res.row_basis[0] == Vec<Fp>{Fp(1, 7), Fp(2, 7)});
}
