#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qbell {

/// Worker count: QBELL_THREADS when set (clamped to >= 1), otherwise the
/// machine parallelism.
int worker_threads();

/// Run fn(i) for i in [0, n).  Work is split into contiguous chunks; callers
/// write results into index-addressed storage and reduce afterwards, so the
/// outcome does not depend on scheduling.  The first exception thrown by any
/// worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qbell
