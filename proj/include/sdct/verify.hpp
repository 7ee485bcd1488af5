/// @file verify.hpp
/// @brief Self-check suites behind `sdct verify`: oracle equivalence, round
///        trips, Hermitian symmetry, counter accounting and determinism,
///        each reported as a named pass/fail entry.
#pragma once

#include <string>
#include <vector>

namespace sdct {

struct VerifyOptions {
  /// Parallelism degree for the transforms under test (0 = machine default).
  unsigned threads = 0;
  /// Test hook: flips one postprocess twiddle sign before running the
  /// oracle-agreement suite, which must then fail — proving the suite would
  /// catch a corrupted table.
  bool corrupt_twiddle = false;
};

struct VerifyEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
};

VerifyReport run_verify(const VerifyOptions& options = {});

/// One "PASS name — detail" / "FAIL name — detail" line per entry plus a
/// trailing summary line.
std::string format_verify_report(const VerifyReport& report);

}  // namespace sdct
