#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace defsplat {

// Global worker count. 1 disables threading entirely.
int thread_count();
void set_thread_count(int n);

// Splits [0, n) into fixed-size blocks and runs fn(block_index, begin, end).
// The block partition depends only on n and block_size, never on the worker
// count, so per-block results can be reduced in block order to give
// bit-identical output for any thread count.
void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// Convenience: each index processed exactly once, outputs must be disjoint.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t)>& fn);

inline std::size_t block_count(std::size_t n, std::size_t block_size) {
  return (n + block_size - 1) / block_size;
}

}  // namespace defsplat
