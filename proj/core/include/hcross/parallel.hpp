#pragma once

#include <cstddef>
#include <functional>

namespace hcross {

/// Worker count: HCROSS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Calls fn(i) for i in [0, n) on up to thread_count() threads. fn must only
/// write to state owned by index i; the first exception thrown is rethrown
/// after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hcross
