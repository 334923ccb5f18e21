#pragma once

#include <cstddef>
#include <functional>

namespace posetlab {

// POSETLAB_THREADS if set, else hardware concurrency.
int default_threads();

// Runs body(i) for i in [0, count) on up to `threads` workers; rethrows the first exception.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace posetlab
