#include "defsplat/parallel.hpp"

#include <atomic>

namespace defsplat {

namespace {
int g_threads = static_cast<int>(std::thread::hardware_concurrency());
}

int thread_count() { return g_threads > 0 ? g_threads : 1; }

void set_thread_count(int n) { g_threads = n > 0 ? n : 1; }

void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t nblocks = block_count(n, block_size);
  const int workers = std::min<std::size_t>(thread_count(), nblocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b)
      fn(b, b * block_size, std::min(n, (b + 1) * block_size));
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= nblocks) break;
        fn(b, b * block_size, std::min(n, (b + 1) * block_size));
      }
    });
  }
  for (auto& t : pool) t.join();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  parallel_blocks(n, 64, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

}  // namespace defsplat
