#pragma once

#include <cstddef>
#include <functional>

namespace paramodular {

/// Process-wide worker count for the series kernels (default 1).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() workers.
/// Blocks until all iterations finish; rethrows the first exception.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace paramodular
