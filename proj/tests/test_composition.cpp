#include <catch2/catch_amalgamated.hpp>

#include "isotype/composition.hpp"

using namespace isotype;
using R = Rational;

TEST_CASE("ground field as a composition algebra", "[composition]") {
  auto c = ground_composition<R>();
  CHECK(c.dim() == 1);
  CHECK(check_composition(c).passed());
  CHECK(c.norm.eval({R(3)}) == R(9));
  CHECK(c.trace_zero().empty());
}

TEST_CASE("one doubling: split binarions with norm a² − b²", "[composition]") {
  auto c = cayley_dickson(ground_composition<R>(), R(1));
  CHECK(c.dim() == 2);
  CHECK(check_composition(c).passed());
  CHECK(c.norm.eval({R(3), R(2)}) == R(5)); // 9 − 4
  CHECK(c.norm.eval({R(1), R(1)}) == R(0)); // isotropic
  CHECK(c.trace_zero().size() == 1);
  CHECK(c.alg.associativity_defect() == std::nullopt);
}

TEST_CASE("split quaternions are associative", "[composition]") {
  auto q = split_composition<R>(4);
  CHECK(check_composition(q).passed());
  CHECK(q.alg.associativity_defect() == std::nullopt);
  CHECK(q.trace_zero().size() == 3);
}

TEST_CASE("split octonions: composition holds, associativity fails",
          "[composition]") {
  auto o = split_octonions<R>();
  CHECK(o.dim() == 8);
  auto rep = check_composition(o);
  CHECK(rep.passed()); // includes the polarized norm check on 4096 quadruples
  CHECK(o.trace_zero().size() == 7);

  // associator (e1, e2, e4) is nonzero under the standard doubling labels
  Vec<R> e1 = unit_vec<R>(8, 1), e2 = unit_vec<R>(8, 2), e4 = unit_vec<R>(8, 4);
  Vec<R> lhs = o.alg.mul(o.alg.mul(e1, e2), e4);
  Vec<R> rhs = o.alg.mul(e1, o.alg.mul(e2, e4));
  CHECK(lhs != rhs);
  CHECK(o.alg.associativity_defect().has_value());

  // basis norms alternate with the doubling pattern
  CHECK(o.norm.eval(unit_vec<R>(8, 0)) == R(1));
  CHECK(o.norm.eval(unit_vec<R>(8, 1)) == R(-1));
  CHECK(o.norm.eval(unit_vec<R>(8, 3)) == R(1));
  // isotropic vectors exist (split form)
  CHECK(o.norm.eval(vec_add(unit_vec<R>(8, 0), unit_vec<R>(8, 1))) == R(0));
}

TEST_CASE("doubling limits", "[composition]") {
  auto o = split_octonions<R>();
  CHECK_THROWS_AS(cayley_dickson(o, R(1)), PreconditionError);
  CHECK_THROWS_AS(cayley_dickson(ground_composition<R>(), R(0)),
                  PreconditionError);
  CHECK_THROWS_AS(split_composition<R>(3), PreconditionError);
}

TEST_CASE("split octonions over F7", "[composition]") {
  auto o = split_octonions<Fp>();
  CHECK(check_composition(o).passed());
  CHECK(o.norm.eval(unit_vec<Fp>(8, 1)) == Fp(-1));
}
