#ifndef ROOTLIE_ACCEPTANCE_HPP
#define ROOTLIE_ACCEPTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace rootlie::acceptance {

struct Options {
  std::filesystem::path data_dir;
  std::uint64_t seed = 20240531;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Directory of the bundled corpus as configured at build time.
std::filesystem::path default_data_dir();

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1..10). Exceptions are caught and reported as FAIL.
CriterionResult run_criterion(int id, const Options& options);

std::vector<CriterionResult> run_all(const Options& options);

/// "PASS  3 root enumeration (0.004 s / 1 s): ...".
std::string format_line(const CriterionResult& r);

}  // namespace rootlie::acceptance

#endif
