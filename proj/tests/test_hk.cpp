#include <doctest.h>

#include <random>

#include "cubicdisc/hk.hpp"
#include "cubicdisc/irrep.hpp"
#include "support.hpp"

using namespace cubicdisc;
using E = ExactScalar;

TEST_CASE("s_hat golden components") {
  const auto s = s_hat<E>();
  CHECK(s(0, 1, 2, 3) == from_golden(golden::s_hat_1234));
  CHECK(s(3, 2, 1, 0) == from_golden(golden::s_hat_1234));
  CHECK(s(0, 3, 3, 3) == from_golden(golden::s_hat_1444));
  CHECK(s(0, 2, 0, 2) == from_golden(golden::s_hat_1313));
  CHECK(s.independent_components().size() == std::size_t(golden::quartic_monomials));
}

TEST_CASE("kappa is invertible and lands in hyper-Kaehler tensors") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 3; ++n) {
    const auto s = random_quartic<E>(rng);
    const auto k = kappa(s);
    CHECK(kappa_inv(k) == s);
    CHECK(kappa_full(s) == k.full());
    CHECK(check_hk_invariants(k.full()).passes(0));
  }
}

TEST_CASE("T_K is in the 2-eigenspace of dagger and determines K") {
  std::mt19937_64 rng(11);
  const auto& alg = sp2_algebra<E>();
  const auto k = kappa(random_quartic<E>(rng));
  const auto l = t_k(k);
  CHECK(alg.dagger(l) == E(2) * l);
  CHECK(hk_from_endo(l) == k);
  CHECK(t_k_frame(k) == l);
}

TEST_CASE("hk_from_endo rejects endomorphisms outside the 2-eigenspace") {
  CHECK_THROWS_AS(hk_from_endo(Matrix<E>::identity(kDimSp2)), DaggerMismatch);
}

TEST_CASE("T_K spectrum for the discriminant") {
  const auto tk = t_k(kappa(s_hat<E>()));
  const auto id = Matrix<E>::identity(kDimSp2);
  // golden spectrum "-3/2:7, 7/2:3"
  CHECK(kDimSp2 - rank(tk - E::rational(7, 2) * id) == 3);
  CHECK(kDimSp2 - rank(tk + E::rational(3, 2) * id) == 7);
  CHECK(std::string(golden::spectrum_on_s2w) == "-3/2:7, 7/2:3");
}

TEST_CASE("tangent lemma on the complement eigentype") {
  const auto k = kappa(s_hat<E>());
  const auto& alg = sp2_algebra<E>();
  const auto u = alg.apply(Matrix<E>::identity(kDimSp2) - proj_sp1ir<E>(), alg.real_basis()[0]);
  const auto t = tangent_h(k, lie_derivative(k, u));
  CHECK(t.in_sp2.zero);
  CHECK(t.eigen.zero);
  CHECK(t.reproduces_l.zero);
  CHECK(t.formula.zero);
  const auto c = contraction_identities(k);
  CHECK(c.first.zero);
  CHECK(c.second.zero);
}
