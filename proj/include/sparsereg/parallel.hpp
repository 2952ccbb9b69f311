#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sparsereg {

// Worker count used by the parallel helpers; 0 restores the default
// (hardware concurrency).
void set_thread_count(std::size_t threads);
std::size_t thread_count();

// Splits [0, n) into at most thread_count() contiguous chunks and runs
// body(chunk_index, begin, end) on each, one thread per chunk. Returns the
// number of chunks used so callers can reduce per-chunk partials in a fixed
// order, which keeps results independent of the thread count whenever the
// reduction is exact (integers).
std::size_t parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

// Runs body(i) for every i in [0, n) across the worker pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sparsereg
