#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cubicdisc/io.hpp"
#include "cubicdisc/irrep.hpp"

using namespace cubicdisc;
using E = ExactScalar;
using F = FloatScalar;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cubicdisc_test_" + name)).string();
}

}  // namespace

TEST_CASE("scalars serialize exactly") {
  const E x(mpq_class(-7, 3), mpq_class(1, 2), mpq_class(0), mpq_class(9));
  CHECK(scalar_from_json<E>(scalar_to_json(x)) == x);
  const F f = scalar_from_json<F>(scalar_to_json(x));
  CHECK((f - x.to_float()).magnitude() < 1e-15);
  CHECK_THROWS_AS(scalar_from_json<E>(Json{{"a", "1/0x"}}), ParseError);
}

TEST_CASE("discriminant quartic roundtrips exactly") {
  const auto s = s_hat<E>();
  const std::string path = temp_path("s_hat.json");
  write_json_file(path, to_json(s));
  CHECK(sym_quartic_from_json<E>(read_json_file(path)) == s);
  CHECK(io_roundtrip<E>(path));
  std::filesystem::remove(path);

  const auto k = kappa(s);
  CHECK(hk_tensor_from_json<E>(to_json(k)) == k);
  CHECK(indexed_tensor_from_json<E>(to_json(s.tensor())) == s.tensor());
}

TEST_CASE("truncated input raises a located parse error") {
  const std::string text = to_json(s_hat<E>()).dump(2);
  const std::string path = temp_path("truncated.json");
  {
    std::ofstream out(path);
    out << text.substr(0, text.size() / 2);
  }
  try {
    read_json_file(path);
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.byte > 0);
  }
  CHECK_THROWS_AS(io_roundtrip<E>(path), ParseError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_json_file(temp_path("missing.json")), ParseError);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(sym_quartic_from_json<E>(Json{{"kind", "tensor"}}), ParseError);
  Json bad = to_json(s_hat<E>().tensor());
  bad["components"].erase(0);
  CHECK_THROWS_AS(indexed_tensor_from_json<E>(bad), ParseError);
  Json cf = to_json(build_coframe<E>(ModelSpace::compact));
  cf["d"]["psi1"].push_back(Json::array({"psi2", "psi2", scalar_to_json(E(1))}));
  CHECK_THROWS_AS(coframe_from_json<E>(cf), ParseError);
}

TEST_CASE("compact coframe survives save, load and closure") {
  const auto cs = build_coframe<E>(ModelSpace::compact);
  const std::string path = temp_path("compact.json");
  write_json_file(path, to_json(cs));
  const auto back = coframe_from_json<E>(read_json_file(path));
  CHECK(back == cs);
  CHECK(d_squared_check(back).total.zero);
  const auto fback = coframe_from_json<F>(read_json_file(path));
  CHECK(d_squared_check(fback).closes);
  std::filesystem::remove(path);

  const auto fam = build_coframe<E>(E(1));
  const auto again = coframe_from_json<E>(to_json(fam));
  REQUIRE(again.h.has_value());
  CHECK(*again.h == E(1));
}
