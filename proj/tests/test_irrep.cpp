#include <doctest.h>

#include <algorithm>

#include "cubicdisc/irrep.hpp"
#include "support.hpp"

using namespace cubicdisc;
using E = ExactScalar;

TEST_CASE("generators and Upsilon match the hand-entered matrices") {
  const auto e = irrep_generators<E>();
  const auto pe = tabulated_generators<E>();
  const auto u = upsilon_matrices(e);
  const auto pu = tabulated_upsilon<E>();
  for (int s = 0; s < 3; ++s) {
    CHECK(e[s] == pe[s]);
    CHECK(u[s] == pu[s]);
  }
  const auto ind = induced_structure<E>();
  CHECK(ind.pi_scale == E(1));
  CHECK(ind.pi_match.zero);
  CHECK(ind.j_match.zero);
}

TEST_CASE("Upsilon identities are exact") {
  const auto checks = upsilon_lemma_checks<E>();
  CHECK(checks.size() == 7);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.residual.zero);
  }
}

TEST_CASE("Upsilon pairing against the oracle") {
  const auto& st = standard_structure<E>();
  const auto u = tabulated_upsilon<E>();
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      E p;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) p += u[s](a, b) * st.pi_upper(a, c) * st.pi_upper(b, d) * u[t](c, d);
      CHECK(p == (s == t ? from_golden(golden::upsilon_pairing_diagonal) : E(0)));
    }
}

TEST_CASE("discriminant substitution") {
  const auto rep = substitution_check<E>();
  CHECK(rep.coefficients_compared == golden::quartic_monomials);
  CHECK(rep.mismatches == golden::substitution_mismatches);
  CHECK(classical_discriminant(E(1), E(0), E(-3), E(2)) == E(golden::dis_repeated_root));
  CHECK(classical_discriminant(E(1), E(0), E(-1), E(0)) == E(golden::dis_1_0_m1_0));
  CHECK(polarize(tabulated_discriminant_quartic<E>()) == s_hat<E>());
  CHECK(quartic_polynomial(s_hat<E>()) == tabulated_discriminant_quartic<E>());
}

TEST_CASE("projection and frames") {
  const auto p = projection_checks<E>();
  CHECK(p.rank == 3);
  CHECK(p.idempotent.zero);
  CHECK(p.dagger.zero);
  CHECK(p.t_k_relation.zero);
  const auto f = frame_checks<E>();
  CHECK(f.inner.zero);
  CHECK(f.brackets.zero);
  CHECK(f.square_sum.zero);
  CHECK(f.four_form.zero);
  CHECK(f.real_entries.zero);
}

TEST_CASE("Casimir decompositions") {
  const E cal = calibrate_casimir(carrier_v<E>());
  CHECK(cal == E(1));
  const auto t = casimir_decompose(carrier_torsion<E>(), cal);
  CHECK(t.carrier_dim == golden::torsion_carrier_dim);
  CHECK(t.complete());
  std::vector<int> sizes;
  for (const auto& c : t.components) sizes.push_back(c.dim());
  std::sort(sizes.rbegin(), sizes.rend());
  std::string dims;
  for (int d : sizes) dims += (dims.empty() ? "" : ", ") + std::to_string(d);
  CHECK(dims == golden::torsion_summands);
  const auto v = casimir_decompose(carrier_v<E>(), cal);
  REQUIRE(v.components.size() == 1);
  CHECK(v.components[0].k == 3);
  CHECK(v.components[0].l == 1);
}

TEST_CASE("broken generators are rejected") {
  auto m = carrier_v<E>();
  m.e_factor[2] = E(2) * m.e_factor[2];
  CHECK_THROWS_AS(casimir_decompose(m, E(1)), ClosureError);
}
