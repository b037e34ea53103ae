// Deterministic index-parallel loop helper.
#pragma once

#include <functional>

namespace prandtl {

// Worker count: hardware concurrency, capped by the PRANDTL_MODES_THREADS
// environment variable when that is set to a positive integer.
int thread_cap();

// Runs fn(i) for every i in [0, n). Workers take strided index ranges, so
// callers writing fn results into slot i of preallocated storage get output
// independent of scheduling. The first exception thrown (lowest worker id)
// is rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace prandtl
