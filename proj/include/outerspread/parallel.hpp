#pragma once

#include <functional>

namespace osp {

// Worker count from OUTERSPREAD_WORKERS when set to a positive integer,
// otherwise hardware concurrency, never less than 1.
int default_worker_count();

// Runs fn(i) for every i in [0, count). Indices are handed out in blocks from
// a shared counter, so fn must only write to per-index slots; merged results
// stay deterministic regardless of the worker count. workers <= 0 picks the
// default. The first exception thrown by any worker is rethrown after join.
void parallel_for(long long count, int workers, const std::function<void(long long)>& fn);

}  // namespace osp
