#ifndef QUANDLEKIT_PARALLEL_HPP
#define QUANDLEKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quandlekit::detail {

/// Runs task(i) for i in [0, count) on up to `threads` workers, handing out
/// indices in increasing order. The first exception thrown is rethrown.
template<typename Task>
void parallel_for(std::size_t count, unsigned threads, Task &&task)
{
  threads = std::max(1u, threads);
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      task(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count)
        return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next.store(count);
      }
    }
  };

  std::vector<std::thread> pool;
  unsigned n = std::min<std::size_t>(threads, count);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto &th : pool)
    th.join();

  if (failure)
    std::rethrow_exception(failure);
}

} // namespace quandlekit::detail

#endif // QUANDLEKIT_PARALLEL_HPP
