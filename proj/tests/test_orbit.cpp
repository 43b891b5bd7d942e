#include <doctest.h>

#include <random>

#include "cubicdisc/irrep.hpp"
#include "cubicdisc/orbit.hpp"

using namespace cubicdisc;
using E = ExactScalar;

TEST_CASE("the discriminant passes every characterization") {
  const auto m = is_cd_coordinates(s_hat<E>());
  CHECK(m.condition_I.zero);
  CHECK(m.condition_II.zero);
  CHECK(m.coord_I.zero);
  CHECK(m.coord_II.zero);
  CHECK(m.middle_index.zero);
  CHECK(m.theorem_verdict);
  CHECK(m.coordinate_verdict);
  CHECK(m.middle_index_verdict);
  CHECK(is_cd_theorem(kappa(s_hat<E>())).theorem_verdict);
}

TEST_CASE("a perturbed discriminant fails every characterization") {
  std::mt19937_64 rng(5);
  const auto m = is_cd_coordinates(s_hat<E>() + random_quartic<E>(rng));
  CHECK_FALSE(m.theorem_verdict);
  CHECK_FALSE(m.coordinate_verdict);
  CHECK_FALSE(m.middle_index_verdict);
  CHECK_FALSE(is_cd_coordinates(SymQuartic<E>()).verdict);
}

TEST_CASE("Cayley transport stays in the orbit") {
  const auto& alg = sp2_algebra<E>();
  const auto rb = alg.real_basis();
  const auto g = cayley_sp2(rb[1] + E(2) * rb[4] - rb[7]);
  const auto gc = check_group_element(g);
  CHECK(gc.preserves_pi.zero);
  CHECK(gc.commutes_j.zero);
  const auto s = transport(s_hat<E>(), g);
  CHECK(is_cd_coordinates(s).verdict);
  CHECK(kappa(s) == transport(kappa(s_hat<E>()), g));
}

TEST_CASE("stabilizer and orbit dimensions") {
  CHECK(stabilizer_algebra(s_hat<E>()).size() == 3);
  CHECK(orbit_dimension(s_hat<E>(), true) == 7);
}

TEST_CASE("frames reproduce kappa of the discriminant") {
  const auto f = k_from_frames(script_e_frames<E>(), standard_structure<E>().J);
  CHECK(f.verdict);
  CHECK(f.k == kappa(s_hat<E>()));
  CHECK(f.four_form.zero);
}
