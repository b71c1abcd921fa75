#include <catch2/catch_amalgamated.hpp>

#include "isotype/decompose.hpp"
#include "isotype/hermitian.hpp"

using namespace isotype;
using R = Rational;

namespace {

// sl2 with basis (E,H,F): [E,H] = -2E, [E,F] = H, [H,F] = -2F
LieAlgebra<R> sl2() {
  LieAlgebra<R> L(Space({"E", "H", "F"}));
  L.set_bracket(0, 1, SparseVec<R>::unit(0, R(-2)));
  L.set_bracket(0, 2, SparseVec<R>::unit(1));
  L.set_bracket(1, 2, SparseVec<R>::unit(2, R(-2)));
  return L;
}

} // namespace

TEST_CASE("jacobi on sl2", "[lie]") {
  auto L = sl2();
  auto rep = check_jacobi(L);
  CHECK(rep.passed());
  CHECK(rep.checked == 1); // single i<j<k class

  // negate one structure constant: [E,H] = +2E breaks Jacobi at (E,H,F)
  // (flipping [E,F] would only produce an isomorphic algebra)
  LieAlgebra<R> bad = L;
  bad.set_bracket(0, 1, SparseVec<R>::unit(0, R(2)));
  auto rep2 = check_jacobi(bad);
  CHECK_FALSE(rep2.passed());
  REQUIRE(rep2.witness.has_value());
  CHECK(rep2.witness->tuple == std::vector<long long>{0, 1, 2});
}

TEST_CASE("killing form, center, derived subalgebra", "[lie]") {
  auto L = sl2();
  Mat<R> kf = killing_form(L);
  CHECK(rank_of(std::vector<Vec<R>>{kf.column(0), kf.column(1), kf.column(2)}) ==
        3);
  // classical values: K(H,H) = 8, K(E,F) = 4 for sl2
  CHECK(kf.at(1, 1) == R(8));
  CHECK(kf.at(0, 2) == R(4));
  CHECK(center(L).empty());
  CHECK(derived_subalgebra(L).size() == 3);

  LieAlgebra<R> abelian(Space::indexed(3, "z"));
  CHECK(killing_form(abelian).is_zero());
  CHECK(center(abelian).size() == 3);
  CHECK(derived_subalgebra(abelian).empty());
  CHECK(check_jacobi(abelian).passed());
}

TEST_CASE("fg + gf = tr(fg)·id on the 2x2 kernel", "[lie]") {
  Mat<R> mats[3];
  mats[0] = Mat<R>(2, 2);
  mats[0].at(0, 1) = R(1); // E
  mats[1] = Mat<R>(2, 2);
  mats[1].at(0, 0) = R(1);
  mats[1].at(1, 1) = R(-1); // H
  mats[2] = Mat<R>(2, 2);
  mats[2].at(1, 0) = R(1); // F
  for (int f = 0; f < 3; ++f)
    for (int g = 0; g < 3; ++g) {
      Mat<R> anti = mats[f].compose(mats[g]).add(mats[g].compose(mats[f]));
      Mat<R> expect =
          Mat<R>::identity(2).scaled(mats[f].compose(mats[g]).trace());
      CHECK(anti == expect);
    }
}

TEST_CASE("assemble gl(1,1): dim 8 with components (3,4,1)", "[lie]") {
  auto ex = gl_example<R>(1, 1);
  auto A = assemble_L(ex.proto.jt);
  CHECK(A.build_report.passed());
  CHECK(A.lie.dim() == 8); // = dim sl3 = 3*3 - 1, the derived algebra of gl3
  CHECK(3 * A.nj == 3);
  CHECK(2 * A.nt == 4);
  CHECK(A.nd == 1);
  CHECK((long long)(3 * 3 - 1) == ex.reference_dim - 1);
  CHECK(is_sl2_triple(A.lie, A.triple));
  CHECK(check_jacobi(A.lie).passed());

  // sl3 is perfect: [L,L] = L by rank elimination
  CHECK(derived_subalgebra(A.lie).size() == 8);
}

TEST_CASE("assemble requires certification", "[lie]") {
  auto ex = gl_example<R>(1, 1);
  JTernaryAlgebra<R> jt = ex.proto.jt;
  jt.certified = false;
  CHECK_THROWS_AS(assemble_L(jt), PreconditionError);
}

TEST_CASE("assemble with T = 0 gives sl2", "[lie]") {
  auto ex = gl_example<R>(1, 0);
  auto A = assemble_L(ex.proto.jt);
  CHECK(A.lie.dim() == 3);
  CHECK(check_jacobi(A.lie).passed());
}

TEST_CASE("assemble so(2,3) and sp(1,2): reference dimensions", "[lie]") {
  auto so = so_example<R>(2, 3);
  auto Aso = assemble_L(so.proto.jt);
  CHECK(so.reference_dim == 21); // (2*2+3 choose 2)
  CHECK(Aso.lie.dim() <= 21);
  CHECK(Aso.lie.dim() == 21); // so7 is simple, the inner span is everything
  CHECK(check_jacobi(Aso.lie).passed());
  CHECK(center(Aso.lie).empty());
  {
    Mat<R> kf = killing_form(Aso.lie);
    std::vector<Vec<R>> cols;
    for (std::size_t j = 0; j < kf.cols; ++j)
      cols.push_back(kf.column(j));
    CHECK(rank_of(cols) == 21); // nondegenerate
  }

  auto sp = sp_example<R>(1, 2);
  auto Asp = assemble_L(sp.proto.jt);
  CHECK(sp.reference_dim == 10);
  CHECK(Asp.lie.dim() == 10);
  CHECK(check_jacobi(Asp.lie).passed());
}

TEST_CASE("five-grading of the assembled sl3-type algebra", "[lie]") {
  auto ex = gl_example<R>(1, 1);
  auto A = assemble_L(ex.proto.jt);
  auto g = five_grading(A.lie, A.triple.e, A.triple.f);
  CHECK(g.pieces.at(2).size() == 1);
  CHECK(g.pieces.at(1).size() == 2);
  CHECK(g.pieces.at(0).size() == 2);
  CHECK(g.pieces.at(-1).size() == 2);
  CHECK(g.pieces.at(-2).size() == 1);
  CHECK(check_grading_compat(A.lie, g).passed());
}

TEST_CASE("five-grading of sl2 itself", "[lie]") {
  auto L = sl2();
  Vec<R> E = unit_vec<R>(3, 0), F = unit_vec<R>(3, 2);
  auto g = five_grading(L, E, F);
  CHECK(g.pieces.at(2).size() == 1);
  CHECK(g.pieces.at(1).empty());
  CHECK(g.pieces.at(0).size() == 1);
  CHECK(g.pieces.at(-1).empty());
  CHECK(g.pieces.at(-2).size() == 1);

  // non-sl2 input pair is rejected
  CHECK_THROWS_AS(five_grading(L, E, E), PreconditionError);
}

TEST_CASE("J-ternary pair extracted from sl2", "[lie]") {
  auto L = sl2();
  auto g = jternary_from_5grading(L, unit_vec<R>(3, 0), unit_vec<R>(3, 2));
  CHECK(g.jt.dim_j() == 1);
  CHECK(g.jt.dim_t() == 0);
  // E·E = E via [[E,F],E]/2 = [H,E]/2 = E, so E is the unit
  CHECK(g.jt.jordan.unit == Vec<R>{R(1)});
  CHECK(check_jt_axioms(g.jt).passed());
}

TEST_CASE("round trip: extraction inverts assembly", "[lie]") {
  for (auto &ex : {gl_example<R>(1, 1), gl_example<R>(2, 1), sp_example<R>(1, 2),
                   so_example<R>(2, 1)}) {
    INFO(ex.name);
    auto A = assemble_L(ex.proto.jt);
    auto g = jternary_from_5grading(A.lie, A.triple.e, A.triple.f);
    CHECK(round_trip_matches(A, g));
  }
}

TEST_CASE("short sl2 decomposition of the assembled algebra", "[lie]") {
  auto ex = gl_example<R>(1, 1);
  auto A = assemble_L(ex.proto.jt);
  auto iso = short_sl2_decompose(A.lie, A.triple.e, A.triple.h, A.triple.f);
  CHECK(iso.report.passed());
  CHECK(iso.adjoint_mult.size() == 1);
  CHECK(iso.natural_mult.size() == 2);
  CHECK(iso.trivial_mult.size() == 1);

  // sl2 as the adjoint module: (1,0,0)
  auto L = sl2();
  auto iso2 = short_sl2_decompose(L, unit_vec<R>(3, 0), unit_vec<R>(3, 1),
                                  unit_vec<R>(3, 2));
  CHECK(iso2.report.passed());
  CHECK(iso2.adjoint_mult.size() == 1);
  CHECK(iso2.natural_mult.empty());
  CHECK(iso2.trivial_mult.empty());
}

TEST_CASE("six-component decomposition for gl(2,1)", "[lie]") {
  auto ex = gl_example<R>(2, 1);
  REQUIRE(ex.idempotent.has_value());
  auto A = assemble_L(ex.proto.jt);
  CHECK(A.lie.dim() == 24); // sl5
  auto dec = short_sl2sl2_decompose(A, *ex.idempotent);
  CHECK(dec.report.passed());
  CHECK(dec.j1 == 1);
  CHECK(dec.j0 == 1);
  CHECK(dec.jhalf == 2);
  CHECK(dec.t1 == 2);
  CHECK(dec.t0 == 2);
  CHECK(dec.s == 2);

  // improper idempotents are refused
  CHECK_THROWS_AS(short_sl2sl2_decompose(A, ex.proto.jt.jordan.unit),
                  PreconditionError);
}

TEST_CASE("six-component decomposition for sp(2,2)", "[lie]") {
  auto ex = sp_example<R>(2, 2);
  REQUIRE(ex.idempotent.has_value());
  auto A = assemble_L(ex.proto.jt);
  CHECK(A.lie.dim() == 21); // sp6
  auto dec = short_sl2sl2_decompose(A, *ex.idempotent);
  CHECK(dec.report.passed());
  CHECK(dec.j1 == 1);
  CHECK(dec.j0 == 1);
  CHECK(dec.jhalf == 1);
  CHECK(dec.t1 == 2);
  CHECK(dec.t0 == 2);
  CHECK(dec.s == 3);
}

TEST_CASE("diagonal restriction matches the single-copy decomposition", "[lie]") {
  auto ex = gl_example<R>(2, 1);
  auto A = assemble_L(ex.proto.jt);
  auto dec = short_sl2sl2_decompose(A, *ex.idempotent);
  auto iso = short_sl2_decompose(A.lie, A.triple.e, A.triple.h, A.triple.f);
  // J = J1 ⊕ J_1/2 ⊕ J0 and T = T1 ⊕ T0 at the level of multiplicities
  CHECK((long long)iso.adjoint_mult.size() == dec.j1 + dec.j0 + dec.jhalf);
  CHECK((long long)iso.natural_mult.size() == dec.t1 + dec.t0);
  CHECK((long long)iso.trivial_mult.size() == dec.s + dec.jhalf);
}
