#pragma once

#include <functional>

namespace ftrend {

/// Number of worker threads to use: FTREND_THREADS if set (>=1), else the
/// hardware concurrency.
int thread_budget();

/// Runs fn(0..n-1) on up to `threads` workers. Results must be written to
/// disjoint, preallocated slots so the outcome is independent of scheduling.
/// threads <= 0 means thread_budget().
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace ftrend
