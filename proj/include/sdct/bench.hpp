/// @file bench.hpp
/// @brief Timing harness: one discarded warmup, then `runs` timed executions
///        per case on a monotonic clock, reported as mean and sample stddev
///        with an optional counter snapshot and a ratio against a named
///        baseline case.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sdct/exec.hpp"
#include "sdct/tensor.hpp"

namespace sdct {

struct BenchCase {
  std::string name;
  Shape shape;
  /// Timed body, invoked runs + 1 times (first call discarded as warmup).
  std::function<void()> run;
  /// Optional single instrumented execution for the counter columns.
  std::function<StageCounters()> counted;
  /// Name of the case whose mean this one is compared against (ratio column
  /// = baseline mean / own mean); empty for baseline rows themselves.
  std::string baseline;
};

struct BenchResult {
  std::string name;
  Shape shape;
  unsigned runs = 0;
  double mean_ms = 0.0;
  double stddev_ms = 0.0;
  StageCounters counters;
  bool has_counters = false;
  /// baseline mean / own mean; 0 when the case names no baseline.
  double speedup_vs_baseline = 0.0;
  std::string baseline;
};

/// Runs every case; runs must be >= 2 (stddev needs two samples).
std::vector<BenchResult> run_bench(const std::vector<BenchCase>& cases, unsigned runs);

/// Aligned text table; counter columns only with with_counters.
std::string format_bench_table(const std::vector<BenchResult>& results, bool with_counters);
/// One header line plus one comma-separated row per result.
std::string format_bench_csv(const std::vector<BenchResult>& results);

}  // namespace sdct
