#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace isotype {

inline unsigned default_threads() {
  if (const char *env = std::getenv("ISOTYPE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 1024)
      return (unsigned)v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Run fn(begin, end) over contiguous chunks of [0, n) and return the results
// in chunk order. Merging in chunk order keeps reports independent of the
// thread count.
template <class R, class Fn>
std::vector<R> parallel_map_chunks(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0)
    threads = 1;
  std::size_t nchunks = std::min<std::size_t>(threads, n ? n : 1);
  std::vector<R> results(nchunks);
  if (nchunks <= 1) {
    results[0] = fn((std::size_t)0, n);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(nchunks);
  std::size_t per = n / nchunks, extra = n % nchunks, begin = 0;
  for (std::size_t c = 0; c < nchunks; ++c) {
    std::size_t len = per + (c < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([c, begin, end, &results, &fn] {
      results[c] = fn(begin, end);
    });
    begin = end;
  }
  for (auto &t : pool)
    t.join();
  return results;
}

} // namespace isotype
