#include "sdct/exec.hpp"

#include <algorithm>
#include <thread>

namespace sdct {

unsigned ExecConfig::degree() const {
  if (parallelism_degree != 0) return parallelism_degree;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, const ExecConfig& cfg, StageCounters* counters,
                  const std::function<void(std::size_t, std::size_t, StageCounters&)>& body) {
  if (count == 0) return;
  const std::size_t chunk = std::max<std::size_t>(1, cfg.chunk_size);
  const std::size_t num_chunks = (count + chunk - 1) / chunk;
  const unsigned degree = static_cast<unsigned>(
      std::min<std::size_t>(cfg.degree(), num_chunks));

  std::vector<StageCounters> local(degree);

  auto worker = [&](unsigned w) {
    for (std::size_t c = w; c < num_chunks; c += degree) {
      const std::size_t begin = c * chunk;
      const std::size_t end = std::min(begin + chunk, count);
      body(begin, end, local[w]);
    }
  };

  if (degree <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(degree);
    for (unsigned w = 0; w < degree; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  if (counters)
    for (const StageCounters& tally : local) *counters += tally;
}

void parallel_for(std::size_t count, const ExecConfig& cfg,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  parallel_for(count, cfg, nullptr,
               [&body](std::size_t begin, std::size_t end, StageCounters&) { body(begin, end); });
}

}  // namespace sdct
