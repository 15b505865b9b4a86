#pragma once

#include <functional>

namespace l0fa {

/// Number of worker threads: hardware concurrency capped by the
/// L0FA_THREADS environment variable (at least 1).
int worker_count();

/// Run body(0..n-1) across the worker pool. Each index owns its outputs, so
/// results are independent of scheduling. Exceptions from workers are
/// rethrown on the calling thread (first one wins).
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace l0fa
