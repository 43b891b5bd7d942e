#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicdisc/io.hpp"

namespace cubicdisc {

inline constexpr const char* kLibraryVersion = "1.0.0";

enum class Backend { exact, float_ };

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool measured = false;    // carries a residual rather than a yes/no outcome
  bool exact_zero = false;  // exact backend and residual identically zero
  double residual = 0;      // relative residual (0 for pure yes/no checks)
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  Backend backend = Backend::exact;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::vector<CheckResult> checks;            // sorted by name
  std::map<std::string, std::string> observations;
  double wall_seconds = 0;

  bool passes() const;
  double max_residual() const;
};

const std::vector<std::string>& suite_names();

// Throws UsageError for an unknown suite or when tol is given/missing against the backend.
SuiteResult run_suite(const std::string& name, Backend backend, std::uint64_t seed, std::optional<double> tol);

std::string backend_name(Backend b);
Backend parse_backend(const std::string& s);

// Everything except the "timestamp" object is a deterministic function of the inputs.
Json report_json(const SuiteResult& r, const std::string& timestamp);
std::string report_markdown(const SuiteResult& r, const std::string& timestamp);

}  // namespace cubicdisc
