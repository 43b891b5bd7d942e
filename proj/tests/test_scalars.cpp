#include <doctest.h>

#include "cubicdisc/scalar.hpp"

using cubicdisc::ExactScalar;
using cubicdisc::FloatScalar;

TEST_CASE("exact field arithmetic") {
  const ExactScalar i = ExactScalar::imag_unit(), r3 = ExactScalar::sqrt3();
  CHECK(i * i == ExactScalar(-1));
  CHECK(r3 * r3 == ExactScalar(3));
  CHECK((i * r3) * (i * r3) == ExactScalar(-3));
  const ExactScalar x(mpq_class(1, 2), mpq_class(-3), mpq_class(2, 7), mpq_class(5));
  CHECK(x * x.inverse() == ExactScalar(1));
  CHECK((x / x) == ExactScalar(1));
  CHECK(x.conj().conj() == x);
  CHECK((x * x.conj()).is_real());
  CHECK(ExactScalar::rational(6, 4) == ExactScalar(mpq_class(3, 2), 0, 0, 0));
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(ExactScalar(0).inverse(), cubicdisc::DivisionByZero);
  CHECK_FALSE(ExactScalar(0).try_inverse().has_value());
  CHECK_THROWS_AS(FloatScalar(0.0).inverse(), cubicdisc::DivisionByZero);
}

TEST_CASE("zero divisors do not exist in the field") {
  // 1 + i sqrt3 has norm 4 over Q
  const ExactScalar x = ExactScalar(1) + ExactScalar::imag_unit() * ExactScalar::sqrt3();
  CHECK(x * x.inverse() == ExactScalar(1));
  CHECK(x * x * x == ExactScalar(-8));
}

TEST_CASE("float shadow agrees with exact values") {
  const ExactScalar x(mpq_class(1, 3), mpq_class(2), mpq_class(-1, 5), mpq_class(7, 2));
  const ExactScalar y = x * x.inverse() + x * x;
  const FloatScalar fx = x.to_float();
  const FloatScalar fy = fx * fx.inverse() + fx * fx;
  CHECK((fy - y.to_float()).magnitude() < 1e-12);
  CHECK(FloatScalar::sqrt3().re() == doctest::Approx(1.7320508075688772));
}

TEST_CASE("string forms") {
  CHECK(ExactScalar(0).to_string() == "0");
  CHECK(ExactScalar::imag_unit().to_string() == "i");
  CHECK(ExactScalar::rational(-3, 4).to_string() == "-3/4");
}
