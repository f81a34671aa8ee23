#pragma once

#include <cstddef>
#include <functional>

namespace k3bps {

/// Worker count: K3BPS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs fn(i) for i in [0, n). Iterations must be independent; results are
/// written by index so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace k3bps
