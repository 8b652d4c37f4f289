#pragma once

#include <cstdint>
#include <functional>

namespace facekit {

/// Number of worker threads: FACEKIT_THREADS if set (clamped to >= 1),
/// otherwise the hardware concurrency.
unsigned worker_threads();

/// Runs fn(begin, end) over a partition of [0, n) on worker_threads()
/// threads. Chunk boundaries depend only on n and the thread count, so
/// workers can produce deterministic per-chunk results for later merging.
void parallel_chunks(std::uint64_t n,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              unsigned chunk)>& fn);

}  // namespace facekit
