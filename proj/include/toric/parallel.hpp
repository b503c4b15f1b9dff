#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace toric {

/// Worker count: hardware concurrency, capped by TORIC_KAHLER_THREADS when set.
unsigned worker_count();

/// Calls body(i) for i in [0, count) on up to worker_count() threads. Results
/// must be written to per-index slots; the first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace toric
