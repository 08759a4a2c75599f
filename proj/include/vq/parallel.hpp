#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace vq {

/// Process-wide worker cap, settable from the CLI (--jobs).
int worker_count();
void set_worker_count(int n);

/// Runs f(i) for i in [0, n). Work is handed out in chunks through an atomic
/// counter, so results must be written to per-index slots (callers merge in
/// index order to stay deterministic).
template <class F>
void parallel_for(int n, F&& f) {
  int jobs = std::min(worker_count(), n);
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> ts;
  ts.reserve(jobs - 1);
  for (int t = 1; t < jobs; ++t) ts.emplace_back(worker);
  worker();
  for (auto& t : ts) t.join();
}

}  // namespace vq
