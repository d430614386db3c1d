#pragma once

#include <functional>

namespace epw {

// Worker budget for data-parallel loops: an explicit set_thread_budget wins,
// otherwise EPWLAB_THREADS, otherwise the hardware count. Values < 1 mean
// "auto".
void set_thread_budget(int n);
int thread_budget();

// Runs fn(0), ..., fn(n-1), possibly across several threads. Callers store
// results by index, so the merge order is deterministic regardless of the
// schedule. The first exception (by index) is rethrown on the caller.
void parallel_for_index(int n, const std::function<void(int)>& fn);

}  // namespace epw
