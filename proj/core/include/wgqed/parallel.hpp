#pragma once

#include <cstddef>
#include <functional>

namespace wgqed {

// Worker count: WGQED_THREADS if set (clamped to >= 1), else hardware
// concurrency.
unsigned thread_count();

// Runs fn(i) for i in [0, n) across thread_count() workers in contiguous
// blocks.  fn must only touch its own slot i; the first exception thrown by
// any worker is rethrown on the caller after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wgqed
