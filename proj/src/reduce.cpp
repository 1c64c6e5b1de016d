#include "zeno/reduce.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "zeno/errors.hpp"

namespace zeno {

std::vector<double> deterministic_reduce(
    long n_items, std::size_t slots, int workers,
    const std::function<void(long, CompensatedVector&)>& item) {
  if (n_items < 0) throw DomainError("negative item count in reduction");

  int nw = workers;
  if (nw <= 0) {
    nw = int(std::thread::hardware_concurrency());
    if (nw <= 0) nw = 1;
  }
  if (nw > 64) nw = 64;

  const long n_chunks = (n_items + kReduceChunk - 1) / kReduceChunk;
  std::vector<CompensatedVector> partials(std::size_t(std::max(n_chunks, 1L)),
                                          CompensatedVector(slots));

  auto run_chunk = [&](long c) {
    CompensatedVector& acc = partials[std::size_t(c)];
    const long lo = c * kReduceChunk;
    const long hi = std::min(lo + kReduceChunk, n_items);
    for (long i = lo; i < hi; ++i) item(i, acc);
  };

  if (nw == 1 || n_chunks <= 1) {
    for (long c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(nw));
    for (int w = 0; w < nw; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const long c = next.fetch_add(1, std::memory_order_relaxed);
          if (c >= n_chunks) return;
          run_chunk(c);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Sequential merge in chunk order: the only place partials meet.
  CompensatedVector total(slots);
  for (long c = 0; c < n_chunks; ++c) total.merge(partials[std::size_t(c)]);
  return total.values();
}

}  // namespace zeno
