#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace fk {

// Indexed parallel map over [0, count). Tasks are pure functions writing to
// disjoint slots, so the result does not depend on scheduling. threads <= 1
// runs inline.
inline void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int use = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(use);
  for (int t = 0; t < use; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace fk
