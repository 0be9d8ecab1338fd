#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace ldg::detail {

// Runs fn(slab) for slab in [0, nslabs). Work is claimed dynamically, but
// callers that reduce must store per-slab results and combine them in slab
// order to keep totals independent of the thread count.
template <class F>
void for_each_slab(int nslabs, int threads, F&& fn) {
  if (threads <= 1 || nslabs <= 1) {
    for (int s = 0; s < nslabs; ++s) fn(s);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= nslabs) return;
      fn(s);
    }
  };
  std::vector<std::thread> pool;
  const int nw = std::min(threads, nslabs);
  pool.reserve(nw - 1);
  for (int i = 1; i < nw; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace ldg::detail
