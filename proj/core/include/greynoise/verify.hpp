#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace greynoise::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
};

// Criteria 1-11: moment closure, worked example, quadrature cross-checks,
// Diophantine identity, chaos orthonormality, exponential-coefficient
// cross-check, Fock calculus, Vage inequality, process isometry and
// derivative rate, Hermite bounds, spectral covariances.
Report run_all(std::uint64_t seed);

// Runs the suite twice with the same seed and appends the determinism
// check (byte-identical formatted reports).
Report run_with_determinism(std::uint64_t seed);

// Stable plain-text rendering: one "[PASS]"/"[FAIL]" line per criterion.
std::string format_report(const Report& report, std::uint64_t seed);

} // namespace greynoise::verify
