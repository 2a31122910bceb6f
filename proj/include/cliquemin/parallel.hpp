#pragma once

#include <cstddef>
#include <functional>

namespace cliquemin {

/// Number of worker threads used by the parallel routines: the value of
/// CLIQUEMIN_WORKERS when it is a positive integer, else the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Runs body(worker) for worker = 0..workers-1 on separate threads and joins
/// them. The first exception thrown by a worker is rethrown after the join.
void run_workers(std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace cliquemin
