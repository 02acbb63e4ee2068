#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace strutgeo {

/// Worker cap: STRUTGEO_THREADS when set to a positive integer, else hardware
/// concurrency. Read on every call so tests can toggle it.
int worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads. Work is split by
/// index, never by thread, so results are independent of the worker count.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace strutgeo
