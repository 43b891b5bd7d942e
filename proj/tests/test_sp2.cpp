#include <doctest.h>

#include "cubicdisc/sp2.hpp"

using namespace cubicdisc;
using E = ExactScalar;

TEST_CASE("sp(2) dimension and real form") {
  const auto& alg = sp2_algebra<E>();
  CHECK(alg.basis().size() == kDimSp2);
  const auto rb = alg.real_basis();
  CHECK(rb.size() == kDimSp2);
  for (const auto& x : rb) CHECK(x.is_real());
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  const auto& b = sp2_algebra<E>().basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      CHECK(bracket(b[i], b[j]) == E(-1) * bracket(b[j], b[i]));
      for (std::size_t k = j + 1; k < b.size(); k += 3) {
        const auto sum = bracket(bracket(b[i], b[j]), b[k]) + bracket(bracket(b[j], b[k]), b[i]) +
                         bracket(bracket(b[k], b[i]), b[j]);
        CHECK(sum.matrix().is_zero());
      }
    }
}

TEST_CASE("dagger of the identity is -6 Id") {
  const auto& alg = sp2_algebra<E>();
  const auto id = Matrix<E>::identity(kDimSp2);
  CHECK(alg.dagger(id) == E(-6) * id);
}

TEST_CASE("endomorphism model roundtrip") {
  const auto& alg = sp2_algebra<E>();
  for (const auto& x : alg.real_basis()) {
    CHECK(from_endomorphism(to_endomorphism(x)) == x);
    CHECK(alg.element(alg.coordinates(x)) == x);
  }
}
