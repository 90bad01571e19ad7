#pragma once

#include <cstddef>
#include <functional>

namespace betaturan::detail {

// Worker count: hardware concurrency capped by BETA_TURAN_THREADS (>= 1).
unsigned worker_count();

// Runs body(i) for i = 0..n-1 on the worker pool.  Callers index into
// preallocated output slots, so results are position-deterministic no matter
// how work interleaves.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace betaturan::detail
