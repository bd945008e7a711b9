#pragma once

#include <cstddef>
#include <functional>

namespace csf {

/// Worker count: CZ_THREADS if set to a positive integer, else hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for every i in [0, count) on up to worker_count() threads.
/// The first exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace csf
