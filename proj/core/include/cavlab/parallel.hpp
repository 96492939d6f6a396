#pragma once

#include <cstddef>
#include <functional>

namespace cavlab {

// Runs fn(i) for i in [0, n). workers <= 1 runs inline; otherwise the index
// range is split into contiguous chunks across threads. Callers must write
// only to per-index slots, so results never depend on the worker count.
// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

// Worker count actually used for a request (0 means hardware concurrency).
int resolve_workers(int requested);

}  // namespace cavlab
