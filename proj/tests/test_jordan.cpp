#include <catch2/catch_amalgamated.hpp>

#include "isotype/jordan.hpp"

using namespace isotype;
using R = Rational;

namespace {

template <Scalar K> JordanAlgebra<K> mat2_jordan() {
  return special_jordan(matrix_algebra<K>(2));
}

// indices in the 2x2 basis E11,E12,E21,E22
constexpr std::size_t E11 = 0, E12 = 1, E21 = 2, E22 = 3;

} // namespace

TEST_CASE("matrix algebra is associative and unital", "[jordan]") {
  auto a = matrix_algebra<R>(2);
  CHECK(a.unit_acts_as_identity());
  CHECK_FALSE(a.associativity_defect().has_value());
  CHECK(a.mul(unit_vec<R>(4, E12), unit_vec<R>(4, E21)) == unit_vec<R>(4, E11));
}

TEST_CASE("check_jordan on the symmetrized 2x2 algebra", "[jordan]") {
  auto rep = check_jordan(mat2_jordan<R>());
  CHECK(rep.passed());
  CHECK(rep.violations == 0);

  // same sweep over F7 (1/2 exists for p >= 5)
  auto rep7 = check_jordan(mat2_jordan<Fp>());
  CHECK(rep7.passed());
}

TEST_CASE("associative non-symmetrized product fails commutativity", "[jordan]") {
  JordanAlgebra<R> fake;
  auto a = matrix_algebra<R>(2);
  fake.space = a.space;
  fake.product = a.product;
  fake.unit = a.unit;
  auto rep = check_jordan(fake);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->item == "commutativity");
  // (E12, E21) is a violating pair: E12·E21 = E11 but E21·E12 = E22
  CHECK_FALSE(fake.product.at(E12, E21) == fake.product.at(E21, E12));
}

TEST_CASE("one-dimensional algebra passes", "[jordan]") {
  JordanAlgebra<R> j;
  j.space = Space::indexed(1, "a");
  j.product = BilinearMap<R>(1, 1, 1);
  j.product.at(0, 0) = SparseVec<R>::unit(0);
  j.unit = {R(1)};
  CHECK(check_jordan(j).passed());
}

TEST_CASE("idempotents in the 2x2 matrix Jordan algebra", "[jordan]") {
  auto j = mat2_jordan<R>();
  auto e11 = is_idempotent(j, unit_vec<R>(4, E11));
  CHECK(e11.idempotent);
  CHECK(e11.proper);
  CHECK(e11.complement == unit_vec<R>(4, E22));

  auto u = is_idempotent(j, j.unit);
  CHECK(u.idempotent);
  CHECK_FALSE(u.proper);
  CHECK(is_zero_vec(u.complement));

  auto bad = is_idempotent(j, unit_vec<R>(4, E12));
  CHECK_FALSE(bad.idempotent);
}

TEST_CASE("Peirce decomposition relative to E11", "[jordan]") {
  auto j = mat2_jordan<R>();
  auto p = peirce_decompose(j, unit_vec<R>(4, E11));
  REQUIRE(p.j1.size() == 1);
  REQUIRE(p.jhalf.size() == 2);
  REQUIRE(p.j0.size() == 1);
  CHECK(p.j1[0] == unit_vec<R>(4, E11));
  CHECK(p.jhalf[0] == unit_vec<R>(4, E12));
  CHECK(p.jhalf[1] == unit_vec<R>(4, E21));
  CHECK(p.j0[0] == unit_vec<R>(4, E22));

  // e = unit: J1 = J, others zero
  auto pu = peirce_decompose(j, j.unit);
  CHECK(pu.j1.size() == 4);
  CHECK(pu.jhalf.empty());
  CHECK(pu.j0.empty());

  CHECK_THROWS_AS(peirce_decompose(j, unit_vec<R>(4, E12)), PreconditionError);

  // J1 · J0 = 0 (Peirce multiplication rule, checked by membership)
  for (const auto &x : p.j1)
    for (const auto &y : p.j0)
      CHECK(is_zero_vec(j.mul(x, y)));
}

TEST_CASE("non-Jordan input is detected by Peirce exhaustion", "[jordan]") {
  // product with a spurious eigenvalue: L_e has eigenvalue 1/3 on part of J
  JordanAlgebra<R> j;
  j.space = Space::indexed(2, "a");
  j.product = BilinearMap<R>(2, 2, 2);
  j.product.at(0, 0) = SparseVec<R>::unit(0);
  j.product.at(0, 1) = SparseVec<R>::unit(1, R(1, 3));
  j.product.at(1, 0) = SparseVec<R>::unit(1, R(1, 3));
  j.unit = {R(1), R(0)}; // not a true unit, irrelevant here
  CHECK_THROWS_AS(peirce_decompose(j, unit_vec<R>(2, 0)), PreconditionError);
}

TEST_CASE("inner derivations D_{a,b}", "[jordan]") {
  auto j = mat2_jordan<R>();

  // D_{E12,E21}(E12) = 1/2 E12
  Mat<R> d = inner_derivation_D(j, unit_vec<R>(4, E12), unit_vec<R>(4, E21));
  CHECK(d.apply(unit_vec<R>(4, E12)) == scaled(unit_vec<R>(4, E12), R(1, 2)));

  // D_{1,a} = 0 for all basis a
  for (std::size_t a = 0; a < 4; ++a)
    CHECK(inner_derivation_D(j, j.unit, unit_vec<R>(4, a)).is_zero());

  // D_{a,a} = 0 (skew-symmetry)
  for (std::size_t a = 0; a < 4; ++a)
    CHECK(inner_derivation_D(j, unit_vec<R>(4, a), unit_vec<R>(4, a)).is_zero());
}

TEST_CASE("derivation identities on basis tuples", "[jordan]") {
  auto j = mat2_jordan<R>();
  std::size_t n = j.dim();

  // Each D_{a,b} is a derivation of the Jordan product
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mat<R> d = inner_derivation_D(j, unit_vec<R>(n, a), unit_vec<R>(n, b));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Vec<R> xy = j.product.at(x, y).to_dense(n);
          Vec<R> lhs = d.apply(xy);
          Vec<R> rhs = j.mul(d.apply(unit_vec<R>(n, x)), unit_vec<R>(n, y));
          add_scaled(rhs, R(1), j.mul(unit_vec<R>(n, x), d.apply(unit_vec<R>(n, y))));
          CHECK(lhs == rhs);
        }
    }

  // D_{a·b,c} + D_{b·c,a} + D_{c·a,b} = 0 on all basis triples
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vec<R> ab = j.product.at(a, b).to_dense(n);
        Vec<R> bc = j.product.at(b, c).to_dense(n);
        Vec<R> ca = j.product.at(c, a).to_dense(n);
        Mat<R> s = inner_derivation_D(j, ab, unit_vec<R>(n, c))
                       .add(inner_derivation_D(j, bc, unit_vec<R>(n, a)))
                       .add(inner_derivation_D(j, ca, unit_vec<R>(n, b)));
        CHECK(s.is_zero());
      }
}

TEST_CASE("Peirce components kill mixed inner derivations", "[jordan]") {
  auto j = mat2_jordan<R>();
  Vec<R> e = unit_vec<R>(4, E11);
  auto p = peirce_decompose(j, e);
  // D_{J1,J0} = 0 and D_{e,J1} = 0
  for (const auto &a : p.j1) {
    for (const auto &b : p.j0)
      CHECK(inner_derivation_D(j, a, b).is_zero());
    CHECK(inner_derivation_D(j, e, a).is_zero());
  }
}
