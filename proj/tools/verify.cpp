#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include "cubicdisc/io.hpp"
#include "cubicdisc/irrep.hpp"
#include "cubicdisc/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw cubicdisc::UsageError("cannot write " + out);
  f << text;
}

template <class T>
cubicdisc::Json export_value(const std::string& what) {
  using namespace cubicdisc;
  if (what == "s_hat") return to_json(s_hat<T>());
  if (what == "kappa_s_hat") return to_json(kappa(s_hat<T>()));
  if (what == "compact") return to_json(build_coframe<T>(ModelSpace::compact));
  if (what == "split") return to_json(build_coframe<T>(ModelSpace::split));
  if (what == "flat") return to_json(build_coframe<T>(ModelSpace::flat));
  throw UsageError("unknown export '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cubicdisc;
  CLI::App app{"Runs verification suites for the cubic-discriminant curvature library."};
  app.set_version_flag("--version", std::string(kLibraryVersion));

  std::string suite, backend_text, out, format = "json", roundtrip_path, export_what;
  std::uint64_t seed = 7;
  std::optional<double> tol;
  if (const char* env = std::getenv("CUBICDISC_BACKEND")) backend_text = env;
  if (backend_text.empty()) backend_text = "exact";

  app.add_option("suite", suite, "preliminaries | irrep | orbit | models | bianchi | all");
  app.add_option("--backend", backend_text, "exact or float (default: $CUBICDISC_BACKEND, else exact)");
  app.add_option("--tol", tol, "relative tolerance, float backend only");
  app.add_option("--seed", seed, "seed for random samples")->capture_default_str();
  app.add_option("--out", out, "write the report (or export) to this file");
  app.add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  auto* rt = app.add_option("--roundtrip", roundtrip_path, "load, save and reload a JSON document");
  auto* ex = app.add_option("--export", export_what, "s_hat | kappa_s_hat | compact | split | flat");
  rt->excludes(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Backend backend = parse_backend(backend_text);
    if (!export_what.empty()) {
      const Json j = backend == Backend::exact ? export_value<ExactScalar>(export_what) : export_value<FloatScalar>(export_what);
      emit(j.dump(2) + "\n", out);
      return kExitPass;
    }
    if (!roundtrip_path.empty()) {
      const bool same = backend == Backend::exact ? io_roundtrip<ExactScalar>(roundtrip_path)
                                                  : io_roundtrip<FloatScalar>(roundtrip_path);
      std::cout << "roundtrip " << roundtrip_path << ": " << (same ? "identical" : "MISMATCH") << "\n";
      return same ? kExitPass : kExitFail;
    }
    if (suite.empty()) throw UsageError("a suite name is required");
    const SuiteResult r = run_suite(suite, backend, seed, tol);
    const std::string stamp = utc_now();
    emit(format == "md" ? report_markdown(r, stamp) : report_json(r, stamp).dump(2) + "\n", out);
    if (!out.empty())
      std::cerr << suite << ": " << (r.passes() ? "pass" : "FAIL") << " (" << r.checks.size() << " checks)\n";
    return r.passes() ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
