#pragma once

#include <cstddef>
#include <functional>

namespace symcone {

/// Worker count from SYMCONE_WORKERS, else the hardware concurrency.
unsigned worker_count();

/// Runs fn(0..n-1) on a worker pool. Exceptions are rethrown after all
/// workers finish (the one from the lowest index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn,
                  unsigned workers = 0);

} // namespace symcone
