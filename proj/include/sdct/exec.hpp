/// @file exec.hpp
/// @brief Deterministic data-parallel execution: static chunked parallel_for,
///        stage-level pipelines and the instrumentation counters.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sdct {

/// Execution parameters shared by every data-parallel stage.
struct ExecConfig {
  /// Number of workers; 0 means "machine core count".
  unsigned parallelism_degree = 0;
  /// Work items are grouped into contiguous chunks of this many indices.
  std::size_t chunk_size = 4096;

  unsigned degree() const;
};

/// Memory-pass and arithmetic counters, accumulated per worker and merged
/// after a stage completes. A "full tensor stage" is one pass over the data:
/// every pre/postprocess launch counts one, and every FFT call counts one
/// (FFT-internal butterflies are never itemized).
struct StageCounters {
  std::uint64_t full_tensor_stages = 0;
  std::uint64_t element_reads = 0;
  std::uint64_t element_writes = 0;
  std::uint64_t real_mults = 0;
  std::uint64_t real_adds = 0;

  StageCounters& operator+=(const StageCounters& other) {
    full_tensor_stages += other.full_tensor_stages;
    element_reads += other.element_reads;
    element_writes += other.element_writes;
    real_mults += other.real_mults;
    real_adds += other.real_adds;
    return *this;
  }
  bool operator==(const StageCounters&) const = default;
};

/// Marks the start of one full-tensor stage on an (optional) counter sink.
inline void count_stage(StageCounters* counters) {
  if (counters) ++counters->full_tensor_stages;
}

/// Runs `body(begin, end, local)` over a static partition of [0, count).
/// Chunks of cfg.chunk_size indices are assigned round-robin to workers, so
/// the partition — and therefore every single-writer kernel result — is
/// independent of scheduling. Per-worker counter tallies are merged into
/// `counters` (when non-null) after all workers join; merging happens in
/// worker order, though the sums are order-insensitive anyway.
void parallel_for(std::size_t count, const ExecConfig& cfg, StageCounters* counters,
                  const std::function<void(std::size_t, std::size_t, StageCounters&)>& body);

/// Convenience overload for kernels that need no counters.
void parallel_for(std::size_t count, const ExecConfig& cfg,
                  const std::function<void(std::size_t, std::size_t)>& body);

/// A named sequence of full-tensor stages. Each stage must perform exactly one
/// pass over its data; run_counted charges one full_tensor_stage per entry and
/// hands the stage the counter sink for its element/arithmetic tallies.
class Pipeline {
 public:
  Pipeline& add(std::string name, std::function<void(StageCounters*)> fn) {
    stages_.push_back({std::move(name), std::move(fn)});
    return *this;
  }
  std::size_t size() const { return stages_.size(); }
  const std::string& name(std::size_t i) const { return stages_[i].name; }

  void run(StageCounters* counters) const {
    for (const auto& stage : stages_) {
      count_stage(counters);
      stage.fn(counters);
    }
  }

 private:
  struct Stage {
    std::string name;
    std::function<void(StageCounters*)> fn;
  };
  std::vector<Stage> stages_;
};

/// Executes the pipeline and returns the accumulated counters.
inline StageCounters run_counted(const Pipeline& pipeline) {
  StageCounters counters;
  pipeline.run(&counters);
  return counters;
}

/// Complex arithmetic with Table-style real-operation accounting: a complex
/// multiply is 4 real multiplications + 2 real additions, a complex add or
/// subtract is 2 real additions. Kernels instantiate with Counted=false on the
/// hot path and Counted=true in instrumented runs; store-time output scaling
/// is charged on neither the merged nor the naive kernels.
template <bool Counted>
struct ComplexOps {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;

  using cd = std::complex<double>;

  cd mul(cd a, cd b) {
    if constexpr (Counted) {
      mults += 4;
      adds += 2;
    }
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
  }
  cd add(cd a, cd b) {
    if constexpr (Counted) adds += 2;
    return a + b;
  }
  cd sub(cd a, cd b) {
    if constexpr (Counted) adds += 2;
    return a - b;
  }
  double add(double a, double b) {
    if constexpr (Counted) ++adds;
    return a + b;
  }
  double sub(double a, double b) {
    if constexpr (Counted) ++adds;
    return a - b;
  }
  cd load(const cd& v) {
    if constexpr (Counted) ++reads;
    return v;
  }
  double load(const double& v) {
    if constexpr (Counted) ++reads;
    return v;
  }
  void store(cd& slot, cd v) {
    if constexpr (Counted) ++writes;
    slot = v;
  }
  void store(double& slot, double v) {
    if constexpr (Counted) ++writes;
    slot = v;
  }

  void flush(StageCounters& sink) const {
    if constexpr (Counted) {
      sink.real_mults += mults;
      sink.real_adds += adds;
      sink.element_reads += reads;
      sink.element_writes += writes;
    }
  }
};

}  // namespace sdct
