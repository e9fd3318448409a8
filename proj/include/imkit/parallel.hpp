#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace imkit {

// Worker cap: min(hardware, IMKIT_THREADS). All parallel reductions in the
// library are written so the result is identical for any worker count.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("IMKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

// Splits [0, n) into contiguous chunks, one per worker. body(chunk_index,
// begin, end) must write results into per-index or per-chunk slots; the
// caller combines chunks in index order afterwards.
template <typename Body>
void parallel_chunks(std::size_t n, unsigned threads, Body body) {
  threads = std::max(1u, threads);
  if (threads == 1 || n <= 1) {
    body(0, std::size_t{0}, n);
    return;
  }
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace imkit
