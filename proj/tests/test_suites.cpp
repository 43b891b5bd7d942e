#include <doctest.h>

#include "cubicdisc/suites.hpp"

using namespace cubicdisc;

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(run_suite("bogus", Backend::exact, 7, std::nullopt), UsageError);
  CHECK_THROWS_AS(run_suite("irrep", Backend::float_, 7, std::nullopt), UsageError);
  CHECK_THROWS_AS(run_suite("irrep", Backend::exact, 7, 1e-9), UsageError);
  CHECK_THROWS_AS(run_suite("irrep", Backend::float_, 7, -1.0), UsageError);
  CHECK_THROWS_AS(parse_backend("quad"), UsageError);
}

TEST_CASE("irrep suite passes with exact-zero Upsilon residuals") {
  const auto r = run_suite("irrep", Backend::exact, 7, std::nullopt);
  CHECK(r.passes());
  int lemmas = 0;
  for (const auto& c : r.checks)
    if (c.name.rfind("upsilon_lemma_", 0) == 0) {
      ++lemmas;
      CHECK(c.exact_zero);
    }
  CHECK(lemmas == 7);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  const auto a = run_suite("models", Backend::float_, 7, 1e-9);
  const auto b = run_suite("models", Backend::float_, 7, 1e-9);
  CHECK(a.passes());
  CHECK(a.max_residual() < 1e-9);
  Json ja = report_json(a, "t0"), jb = report_json(b, "t1");
  CHECK(ja["timestamp"] != jb["timestamp"]);
  ja.erase("timestamp");
  jb.erase("timestamp");
  CHECK(ja.dump() == jb.dump());
  CHECK(report_markdown(a, "t").rfind("# verify models: PASS", 0) == 0);
  CHECK(report_markdown(a, "t").find("compact_jacobi") != std::string::npos);
}
