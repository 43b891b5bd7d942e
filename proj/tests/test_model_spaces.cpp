#include <doctest.h>

#include "cubicdisc/model_spaces.hpp"

using namespace cubicdisc;
using E = ExactScalar;

TEST_CASE("model spaces close and satisfy Jacobi") {
  for (auto space : {ModelSpace::compact, ModelSpace::split, ModelSpace::flat}) {
    const auto cs = build_coframe<E>(space);
    CHECK(cs.reality().zero);
    CHECK(d_squared_check(cs).closes);
    const auto j = jacobi_residual(lie_table_from_coframe(cs));
    CHECK(j.triples == 364);
    CHECK(j.total.zero);
    CHECK(jacobi_check(lie_table_from_coframe(cs)));
  }
}

TEST_CASE("model spaces are members of the solved family") {
  CHECK(table_difference(build_coframe<E>(ModelSpace::compact), build_coframe<E>(E::rational(-3, 2))).zero);
  CHECK(table_difference(build_coframe<E>(ModelSpace::split), build_coframe<E>(E::rational(3, 2))).zero);
  CHECK(table_difference(build_coframe<E>(ModelSpace::flat), build_coframe<E>(E(0))).zero);
  CHECK(rescale_frame(build_coframe<E>(ModelSpace::compact), E::imag_unit()) == build_coframe<E>(ModelSpace::split));
  CHECK(d_squared_check(build_coframe<E>(E(1))).closes);
}

TEST_CASE("tabulated phi1 sign and perturbations fail closure") {
  CHECK_FALSE(d_squared_check(build_coframe<E>(E(1), Phi1Sign::tabulated)).closes);
  CHECK(d_squared_check(build_coframe<E>(E(0), Phi1Sign::tabulated)).closes);
  const auto bad = perturbed(build_coframe<E>(ModelSpace::compact), kFirstPsi, kFirstPsi + 1, kFirstPsi + 2, E(1));
  CHECK_FALSE(d_squared_check(bad).closes);
  CHECK_THROWS_AS(lie_table_from_coframe(bad), ClosureFailure);
}

TEST_CASE("wedge signs") {
  const auto a = Form<E>::generator(0), b = Form<E>::generator(1);
  CHECK(wedge(a, b) == E(-1) * wedge(b, a));
  CHECK(wedge(a, a).is_zero());
  CHECK(Form<E>::pair(1, 0, E(1)).coefficient(0, 1) == E(-1));
}

TEST_CASE("compact curvature") {
  const auto c = curvature_model<E>(ModelSpace::compact);
  CHECK(c.passes(0));
  CHECK(c.r0_coefficient == E::rational(3, 2));
  CHECK(c.scal_r0 == E(32));
  CHECK_THROWS(curvature_model<E>(ModelSpace::flat));
}

TEST_CASE("first Bianchi system has a one-dimensional solution") {
  const auto b = bianchi_family_solve<E>();
  CHECK(b.unknowns == 168);
  CHECK(b.nullity == 1);
  CHECK(b.passes(0));
  CHECK(b.g1_diagonal == E::imag_unit());
  CHECK_FALSE(b.tabulated_family.zero);
}
