#pragma once

#include <cstddef>
#include <functional>

namespace mvse {

/// Worker count: hardware concurrency, capped by MVSE_LAB_THREADS when set.
unsigned worker_count();

/// Calls body(i) for i in [0, n). Each index is visited exactly once; callers
/// write results into per-index slots so the outcome never depends on the
/// schedule. Exceptions are rethrown (the one from the lowest index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mvse
