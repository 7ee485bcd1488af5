#include "sdct/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sdct {

namespace {

using clock_type = std::chrono::steady_clock;

double time_once_ms(const std::function<void()>& fn) {
  const auto t0 = clock_type::now();
  fn();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

std::string shape_column(const Shape& shape) {
  return shape.empty() ? std::string("-") : shape_to_string(shape);
}

}  // namespace

std::vector<BenchResult> run_bench(const std::vector<BenchCase>& cases, unsigned runs) {
  if (runs < 2) throw std::invalid_argument("run_bench: runs must be >= 2");

  std::vector<BenchResult> results;
  results.reserve(cases.size());
  for (const BenchCase& c : cases) {
    BenchResult r;
    r.name = c.name;
    r.shape = c.shape;
    r.runs = runs;
    r.baseline = c.baseline;

    time_once_ms(c.run);  // warmup, discarded
    std::vector<double> samples(runs);
    double sum = 0.0;
    for (auto& s : samples) {
      s = time_once_ms(c.run);
      sum += s;
    }
    r.mean_ms = sum / static_cast<double>(runs);
    double sq = 0.0;
    for (double s : samples) sq += (s - r.mean_ms) * (s - r.mean_ms);
    r.stddev_ms = std::sqrt(sq / static_cast<double>(runs - 1));

    if (c.counted) {
      r.counters = c.counted();
      r.has_counters = true;
    }
    results.push_back(std::move(r));
  }

  // Resolve ratio columns once every mean is known.
  for (BenchResult& r : results) {
    if (r.baseline.empty()) continue;
    for (const BenchResult& base : results) {
      if (base.name == r.baseline && base.shape == r.shape) {
        r.speedup_vs_baseline = r.mean_ms > 0.0 ? base.mean_ms / r.mean_ms : 0.0;
        break;
      }
    }
  }
  return results;
}

std::string format_bench_table(const std::vector<BenchResult>& results, bool with_counters) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "kind" << std::setw(14) << "shape" << std::right
     << std::setw(6) << "runs" << std::setw(12) << "mean_ms" << std::setw(12) << "stddev_ms"
     << std::setw(10) << "ratio";
  if (with_counters)
    os << std::setw(8) << "stages" << std::setw(14) << "reads" << std::setw(14) << "writes"
       << std::setw(14) << "mults" << std::setw(14) << "adds";
  os << '\n';
  for (const BenchResult& r : results) {
    os << std::left << std::setw(22) << r.name << std::setw(14) << shape_column(r.shape)
       << std::right << std::setw(6) << r.runs << std::fixed << std::setprecision(3)
       << std::setw(12) << r.mean_ms << std::setw(12) << r.stddev_ms;
    if (r.speedup_vs_baseline > 0.0)
      os << std::setw(10) << std::setprecision(2) << r.speedup_vs_baseline;
    else
      os << std::setw(10) << "-";
    os.unsetf(std::ios::fixed);
    os << std::setprecision(6);
    if (with_counters) {
      if (r.has_counters)
        os << std::setw(8) << r.counters.full_tensor_stages << std::setw(14)
           << r.counters.element_reads << std::setw(14) << r.counters.element_writes
           << std::setw(14) << r.counters.real_mults << std::setw(14) << r.counters.real_adds;
      else
        os << std::setw(8) << "-" << std::setw(14) << "-" << std::setw(14) << "-" << std::setw(14)
           << "-" << std::setw(14) << "-";
    }
    os << '\n';
  }
  return os.str();
}

std::string format_bench_csv(const std::vector<BenchResult>& results) {
  std::ostringstream os;
  os << "kind,shape,runs,mean_ms,stddev_ms,ratio,stages,reads,writes,mults,adds\n";
  for (const BenchResult& r : results) {
    os << r.name << ',' << shape_column(r.shape) << ',' << r.runs << ',' << r.mean_ms << ','
       << r.stddev_ms << ',';
    if (r.speedup_vs_baseline > 0.0) os << r.speedup_vs_baseline;
    os << ',';
    if (r.has_counters)
      os << r.counters.full_tensor_stages << ',' << r.counters.element_reads << ','
         << r.counters.element_writes << ',' << r.counters.real_mults << ','
         << r.counters.real_adds;
    else
      os << ",,,,";
    os << '\n';
  }
  return os.str();
}

}  // namespace sdct
