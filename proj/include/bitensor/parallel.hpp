#pragma once

#include <cstddef>
#include <functional>

namespace bitensor {

/// Number of worker threads: hardware concurrency, capped by the
/// BITENSOR_THREADS environment variable when set.
unsigned worker_count();

/// Static-chunked parallel loop over [0, n). Deterministic given a
/// deterministic body: each index is processed exactly once and results must
/// be written to per-index slots by the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bitensor
