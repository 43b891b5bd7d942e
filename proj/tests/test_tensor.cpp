#include <doctest.h>

#include "cubicdisc/tensor.hpp"

using namespace cubicdisc;
using E = ExactScalar;

TEST_CASE("pi contracts to 4") {
  const auto& st = standard_structure<E>();
  E total;
  for (int a = 0; a < kDimW; ++a)
    for (int b = 0; b < kDimW; ++b) total += st.pi_upper(a, b) * st.pi_lower(a, b);
  CHECK(total == E(4));
  const auto full = contract(contract(st.pi_upper, 0, st.pi_lower, 0), 0, 1);
  CHECK(full.components().size() == 1);
  CHECK(full.flat(0) == E(4));
}

TEST_CASE("complex structures satisfy the quaternion relations") {
  const auto& st = standard_structure<E>();
  const Matrix<E> id = Matrix<E>::identity(kDimV);
  for (int s = 0; s < 3; ++s) {
    CHECK(st.J[s] * st.J[s] == -id);
    CHECK(st.J[s] * st.J[(s + 1) % 3] == st.J[(s + 2) % 3]);
    CHECK(st.J[s].transpose() * st.metric == -(st.metric * st.J[s]));
  }
}

TEST_CASE("jmap is an involution on even rank and raise/lower invert") {
  IndexedTensor<E> t({IndexSlot::low(), IndexSlot::low()});
  t(0, 1) = E::imag_unit();
  t(2, 3) = E(5) + E::sqrt3();
  CHECK(jmap(jmap(t)) == t);
  CHECK(lower(raise(t, 0), 0) == t);
}

TEST_CASE("permutation and symmetrization") {
  IndexedTensor<E> t({IndexSlot::low(), IndexSlot::low(), IndexSlot::low()});
  t(0, 1, 2) = E(6);
  const auto sym = symmetrize(t, {0, 1, 2});
  CHECK(sym(2, 1, 0) == E(1));
  CHECK(sym(0, 1, 2) == E(1));
  CHECK(antisymmetrize(sym, {0, 1}).is_zero());
  CHECK(t.permuted({2, 1, 0})(2, 1, 0) == E(6));
}

TEST_CASE("slot codes roundtrip") {
  for (const auto& s : {IndexSlot::up(), IndexSlot::low(), IndexSlot::up_bar(), IndexSlot::low_bar()})
    CHECK(IndexSlot::from_code(s.code()) == s);
  CHECK_THROWS(IndexSlot::from_code("sideways"));
}
